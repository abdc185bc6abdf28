#ifndef MORITA_TESTS_ORACLES_HPP_
#define MORITA_TESTS_ORACLES_HPP_

// Brute-force reference computations. Everything here works by listing
// vectors or matrices over GF(p) and never calls the elimination routines.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "morita/algebra.hpp"

namespace oracle {

using morita::Elem;
using morita::Mat;
using morita::Module;

inline std::uint64_t power(std::uint64_t p, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= p;
  return out;
}

inline std::size_t log_p(std::uint64_t count, std::uint64_t p) {
  std::size_t e = 0;
  while (count > 1) {
    count /= p;
    ++e;
  }
  return e;
}

inline std::vector<Elem> digits(std::uint64_t index, std::uint32_t p, std::size_t n) {
  std::vector<Elem> out(n);
  for (auto& d : out) {
    d = static_cast<Elem>(index % p);
    index /= p;
  }
  return out;
}

inline Mat matrix(std::uint64_t index, std::uint32_t p, std::size_t rows, std::size_t cols) {
  Mat m(p, rows, cols);
  auto d = digits(index, p, rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) m(i / cols, i % cols) = d[i];
  return m;
}

inline std::uint64_t matrix_count(std::uint32_t p, std::size_t rows, std::size_t cols) {
  return power(p, rows * cols);
}

inline std::vector<Elem> apply(Mat const& m, std::vector<Elem> const& v) {
  std::vector<Elem> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += std::uint64_t{m(i, j)} * v[j];
    out[i] = static_cast<Elem>(acc % m.prime());
  }
  return out;
}

/// log_p of the number of distinct images.
inline std::size_t rank(Mat const& m) {
  std::set<std::vector<Elem>> images;
  auto n = power(m.prime(), m.cols());
  for (std::uint64_t i = 0; i < n; ++i) images.insert(oracle::apply(m, digits(i, m.prime(), m.cols())));
  return log_p(images.size(), m.prime());
}

/// log_p of the number of vectors sent to zero.
inline std::size_t nullity(Mat const& m) {
  std::uint64_t zeros = 0;
  auto n = power(m.prime(), m.cols());
  for (std::uint64_t i = 0; i < n; ++i) {
    auto v = oracle::apply(m, digits(i, m.prime(), m.cols()));
    if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; })) ++zeros;
  }
  return log_p(zeros, m.prime());
}

/// Linear maps t : x -> y with t a_i = a_i t for every basis action.
inline bool intertwines(Module const& x, Module const& y, Mat const& t) {
  for (std::size_t i = 0; i < x.actions().size(); ++i) {
    if (!(t * x.action(i) == y.action(i) * t)) return false;
  }
  return true;
}

inline std::size_t hom_dim(Module const& x, Module const& y) {
  std::uint64_t count = 0;
  auto n = matrix_count(x.prime(), y.dim(), x.dim());
  for (std::uint64_t i = 0; i < n; ++i) {
    if (intertwines(x, y, matrix(i, x.prime(), y.dim(), x.dim()))) ++count;
  }
  return log_p(count, x.prime());
}

inline std::vector<Mat> invertible_matrices(std::uint32_t p, std::size_t d) {
  std::vector<Mat> out;
  auto n = matrix_count(p, d, d);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto m = matrix(i, p, d, d);
    if (oracle::rank(m) == d) out.push_back(m);
  }
  return out;
}

inline bool isomorphic(Module const& x, Module const& y) {
  if (x.dim() != y.dim()) return false;
  for (auto const& t : invertible_matrices(x.prime(), x.dim())) {
    if (intertwines(x, y, t)) return true;
  }
  return false;
}

/// Number of isomorphism classes of left modules of dimension d: every
/// assignment of matrices to basis elements satisfying the unit and the
/// structure constants, modulo simultaneous conjugation.
inline std::size_t module_classes(morita::AlgebraPtr const& a, std::size_t d) {
  auto p = a->prime();
  auto n = a->dim();
  auto per = matrix_count(p, d, d);
  auto total = power(per, n);
  auto gl = invertible_matrices(p, d);
  std::set<std::vector<std::vector<Elem>>> seen;
  std::size_t classes = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Mat> acts;
    auto rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      acts.push_back(matrix(rest % per, p, d, d));
      rest /= per;
    }
    Mat unit(p, d, d);
    for (std::size_t i = 0; i < n; ++i) unit.add_scaled(acts[i], a->unit()[i]);
    if (!unit.is_identity()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        Mat rhs(p, d, d);
        for (std::size_t k = 0; k < n; ++k) rhs.add_scaled(acts[k], a->constant(i, j, k));
        ok = acts[i] * acts[j] == rhs;
      }
    }
    if (!ok) continue;
    std::vector<std::vector<Elem>> key;
    for (auto const& m : acts) key.push_back(m.data());
    if (seen.count(key)) continue;
    ++classes;
    // Mark the whole orbit.
    for (auto const& t : gl) {
      Mat tinv(p, d, d);
      for (auto const& s : gl) {
        if ((t * s).is_identity()) {
          tinv = s;
          break;
        }
      }
      std::vector<std::vector<Elem>> image;
      for (auto const& m : acts) image.push_back((t * m * tinv).data());
      seen.insert(image);
    }
  }
  return classes;
}

}  // namespace oracle

#endif  // MORITA_TESTS_ORACLES_HPP_
