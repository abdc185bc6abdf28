#include "morita/linalg.hpp"

#include <sstream>

#include "morita/errors.hpp"

namespace morita {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw ValidationError("field characteristic " + std::to_string(p) +
                          " is not prime");
  }
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

namespace {

void check_same_field(Mat const& a, Mat const& b) {
  if (a.prime() != b.prime()) {
    throw MismatchError("matrices over different fields");
  }
}

}  // namespace

Mat::Mat(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat Mat::identity(std::uint32_t p, std::size_t n) {
  Mat m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::uint32_t p,
                   std::vector<std::vector<std::int64_t>> const& rows) {
  FieldSpec f(p);
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Mat m(p, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw ValidationError("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = f.reduce(rows[r][c]);
  }
  return m;
}

Mat Mat::from_rows(
    std::uint32_t p,
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (auto const& r : rows) v.emplace_back(r);
  return from_rows(p, v);
}

Mat Mat::column(std::uint32_t p, std::vector<Elem> const& v) {
  Mat m(p, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i] % p;
  return m;
}

Mat Mat::unit_column(std::uint32_t p, std::size_t n, std::size_t i) {
  Mat m(p, n, 1);
  m(i, 0) = 1;
  return m;
}

Mat Mat::operator*(Mat const& o) const {
  check_same_field(*this, o);
  if (cols_ != o.rows_) throw MismatchError("matrix product shape mismatch");
  Mat out(p_, rows_, o.cols_);
  // Accumulate in 64 bits and reduce once per entry; safe for p < 2^31 and
  // inner dimensions far beyond anything used here.
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = data_[r * cols_ + k];
      if (a == 0) continue;
      Elem const* orow = &o.data_[k * o.cols_];
      for (std::size_t c = 0; c < o.cols_; ++c) {
        acc[c] += a * orow[c];
        if (acc[c] >= (std::uint64_t{1} << 62)) acc[c] %= p_;
      }
    }
    for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) = static_cast<Elem>(acc[c] % p_);
  }
  return out;
}

Mat Mat::operator+(Mat const& o) const {
  Mat out = *this;
  return out.add_scaled(o, 1);
}

Mat Mat::operator-(Mat const& o) const {
  Mat out = *this;
  return out.add_scaled(o, p_ - 1);
}

Mat Mat::scaled(Elem s) const {
  FieldSpec f(p_);
  Mat out = *this;
  for (auto& v : out.data_) v = f.mul(v, s % p_);
  return out;
}

Mat& Mat::add_scaled(Mat const& o, Elem s) {
  check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw MismatchError("matrix sum shape mismatch");
  }
  s %= p_;
  if (s == 0) return *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] = static_cast<Elem>((data_[i] + std::uint64_t{s} * o.data_[i]) % p_);
  }
  return *this;
}

Mat Mat::transpose() const {
  Mat out(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

bool Mat::is_zero() const noexcept {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

bool Mat::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
    }
  }
  return true;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw MismatchError("block out of range");
  Mat out(p_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

void Mat::set_block(std::size_t r0, std::size_t c0, Mat const& b) {
  check_same_field(*this, b);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw MismatchError("block out of range");
  }
  for (std::size_t r = 0; r < b.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
}

Mat Mat::flatten() const {
  Mat out(p_, data_.size(), 1);
  out.data_ = data_;
  return out;
}

Mat Mat::unflatten(Mat const& column, std::size_t rows, std::size_t cols) {
  if (column.rows() != rows * cols || column.cols() != 1) {
    throw MismatchError("unflatten shape mismatch");
  }
  Mat out(column.prime(), rows, cols);
  out.data_ = column.data_;
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c);
    }
  }
  os << ']';
  return os.str();
}

Mat hstack(std::vector<Mat> const& ms, std::uint32_t p, std::size_t rows) {
  std::size_t total = 0;
  for (auto const& m : ms) {
    if (m.rows() != rows) throw MismatchError("hstack row mismatch");
    total += m.cols();
  }
  Mat out(p, rows, total);
  std::size_t c = 0;
  for (auto const& m : ms) {
    out.set_block(0, c, m);
    c += m.cols();
  }
  return out;
}

Mat vstack(std::vector<Mat> const& ms, std::uint32_t p, std::size_t cols) {
  std::size_t total = 0;
  for (auto const& m : ms) {
    if (m.cols() != cols) throw MismatchError("vstack column mismatch");
    total += m.rows();
  }
  Mat out(p, total, cols);
  std::size_t r = 0;
  for (auto const& m : ms) {
    out.set_block(r, 0, m);
    r += m.rows();
  }
  return out;
}

Mat block_diag(std::vector<Mat> const& ms, std::uint32_t p) {
  std::size_t nr = 0, nc = 0;
  for (auto const& m : ms) {
    nr += m.rows();
    nc += m.cols();
  }
  Mat out(p, nr, nc);
  std::size_t r = 0, c = 0;
  for (auto const& m : ms) {
    out.set_block(r, c, m);
    r += m.rows();
    c += m.cols();
  }
  return out;
}

RrefResult rref(Mat const& m) {
  FieldSpec f(m.prime());
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    }
    Elem piv_inv = f.inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), piv_inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Elem factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots), row};
}

std::size_t rank(Mat const& m) { return rref(m).rank; }

Mat kernel_basis(Mat const& m) {
  auto [red, pivots, rk] = rref(m);
  FieldSpec f(m.prime());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat out(m.prime(), m.cols() - rk, m.cols());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    out(k, free) = 1;
    for (std::size_t i = 0; i < rk; ++i) out(k, pivots[i]) = f.neg(red(i, free));
    ++k;
  }
  return out;
}

Mat image_basis(Mat const& m) {
  auto r = rref(m.transpose());
  return r.reduced.block(0, 0, r.rank, m.rows());
}

std::optional<Mat> solve(Mat const& m, Mat const& rhs) {
  if (m.rows() != rhs.rows()) throw MismatchError("solve shape mismatch");
  std::size_t n = m.cols();
  auto [red, pivots, rk] =
      rref(hstack({m, rhs}, m.prime(), m.rows()));
  if (rk > 0 && pivots[rk - 1] >= n) return std::nullopt;
  Mat sol(m.prime(), n, rhs.cols());
  for (std::size_t i = 0; i < rk; ++i) {
    for (std::size_t c = 0; c < rhs.cols(); ++c) sol(pivots[i], c) = red(i, n + c);
  }
  return sol;
}

std::optional<Mat> inverse(Mat const& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Mat::identity(m.prime(), m.rows()));
}

Cokernel cokernel(Mat const& m) {
  // Rows of the projection span the left null space of m; putting them in
  // RREF makes the unit columns at the pivots a section.
  Mat left_null = kernel_basis(m.transpose());
  auto r = rref(left_null);
  Mat proj = r.reduced.block(0, 0, r.rank, m.rows());
  Mat section(m.prime(), m.rows(), r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) section(r.pivots[i], i) = 1;
  return {std::move(proj), std::move(section), r.rank};
}

Mat kronecker(Mat const& a, Mat const& b) {
  check_same_field(a, b);
  FieldSpec f(a.prime());
  Mat out(a.prime(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Elem x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
        }
      }
    }
  }
  return out;
}

bool is_injective_map(Mat const& m) { return rank(m) == m.cols(); }
bool is_surjective_map(Mat const& m) { return rank(m) == m.rows(); }

}  // namespace morita
