#ifndef MORITA_LINALG_HPP_
#define MORITA_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace morita {

using Elem = std::uint32_t;

/// Prime field GF(p). Elements are canonical residues 0..p-1.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Elem reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept {
    return a >= b ? a - b : static_cast<Elem>(std::uint64_t{a} + p_ - b);
  }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  }
  Elem inv(Elem a) const;

  bool operator==(FieldSpec const&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Dense row-major matrix over GF(p). A matrix of a linear map V -> W has
/// dim W rows and dim V columns and acts on column vectors.
class Mat {
 public:
  Mat() : p_(2), rows_(0), cols_(0) {}
  Mat(std::uint32_t p, std::size_t rows, std::size_t cols);

  static Mat identity(std::uint32_t p, std::size_t n);
  static Mat zero(std::uint32_t p, std::size_t rows, std::size_t cols) {
    return Mat(p, rows, cols);
  }
  /// Entries are reduced mod p; all rows must have equal length.
  static Mat from_rows(std::uint32_t p,
                       std::vector<std::vector<std::int64_t>> const& rows);
  static Mat from_rows(std::uint32_t p,
                       std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Mat column(std::uint32_t p, std::vector<Elem> const& v);
  static Mat unit_column(std::uint32_t p, std::size_t n, std::size_t i);

  std::uint32_t prime() const noexcept { return p_; }
  FieldSpec field() const { return FieldSpec(p_); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  Elem& operator()(std::size_t r, std::size_t c) noexcept {
    return data_[r * cols_ + c];
  }
  std::vector<Elem> const& data() const noexcept { return data_; }

  Mat operator*(Mat const& other) const;
  Mat operator+(Mat const& other) const;
  Mat operator-(Mat const& other) const;
  Mat scaled(Elem s) const;
  Mat& add_scaled(Mat const& other, Elem s);
  Mat transpose() const;
  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, Mat const& b);
  Mat col(std::size_t c) const { return block(0, c, rows_, 1); }
  Mat row(std::size_t r) const { return block(r, 0, 1, cols_); }

  /// Row-major flattening as a single column.
  Mat flatten() const;
  static Mat unflatten(Mat const& column, std::size_t rows, std::size_t cols);

  bool operator==(Mat const& o) const noexcept {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  std::string to_string() const;

 private:
  std::uint32_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

Mat hstack(std::vector<Mat> const& ms, std::uint32_t p, std::size_t rows);
Mat vstack(std::vector<Mat> const& ms, std::uint32_t p, std::size_t cols);
Mat block_diag(std::vector<Mat> const& ms, std::uint32_t p);

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

/// Reduced row echelon form. Pivots are taken as the first nonzero entry
/// scanning columns left to right, so bases come out in a reproducible order.
RrefResult rref(Mat const& m);
std::size_t rank(Mat const& m);

/// Rows form a basis of {v : m v = 0} inside k^cols.
Mat kernel_basis(Mat const& m);
/// Rows form a basis of the column space of m inside k^rows.
Mat image_basis(Mat const& m);
/// Some s with m * s = rhs, or nullopt when rhs is not in the column space.
std::optional<Mat> solve(Mat const& m, Mat const& rhs);
std::optional<Mat> inverse(Mat const& m);

struct Cokernel {
  Mat projection;  // quotient_dim x rows(m), full row rank, kernel = im(m)
  Mat section;     // rows(m) x quotient_dim, projection * section = I
  std::size_t quotient_dim;
};
Cokernel cokernel(Mat const& m);

Mat kronecker(Mat const& a, Mat const& b);

bool is_injective_map(Mat const& m);
bool is_surjective_map(Mat const& m);

}  // namespace morita

#endif  // MORITA_LINALG_HPP_
