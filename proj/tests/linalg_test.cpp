#include "doctest.h"
#include "morita/linalg.hpp"
#include "oracles.hpp"

using morita::Mat;

namespace {

void check_all_shapes(std::uint32_t p, std::size_t rows, std::size_t cols) {
  auto n = oracle::matrix_count(p, rows, cols);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto m = oracle::matrix(i, p, rows, cols);
    auto r = morita::rank(m);
    auto k = morita::kernel_basis(m);
    CAPTURE(m.to_string());
    CHECK(r == oracle::rank(m));
    CHECK(k.rows() == oracle::nullity(m));
    CHECK(r + k.rows() == cols);
    CHECK((m * k.transpose()).is_zero());
    CHECK(morita::rank(k) == k.rows());
    CHECK(morita::image_basis(m).rows() == r);
  }
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rank plus nullity over every 2x2 matrix over GF(2)") { check_all_shapes(2, 2, 2); }
  TEST_CASE("rank plus nullity over every 2x3 and 3x2 matrix over GF(2)") {
    check_all_shapes(2, 2, 3);
    check_all_shapes(2, 3, 2);
  }
  TEST_CASE("rank plus nullity over every 2x2 matrix over GF(3)") { check_all_shapes(3, 2, 2); }

  TEST_CASE("field arithmetic") {
    morita::FieldSpec f(5);
    for (morita::Elem a = 1; a < 5; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.neg(0) == 0);
    CHECK_THROWS(morita::FieldSpec(4));
    CHECK(morita::is_prime(7));
    CHECK_FALSE(morita::is_prime(9));
  }

  TEST_CASE("inverse and solve agree with the product") {
    auto m = Mat::from_rows(3, {{1, 2}, {0, 1}});
    auto inv = morita::inverse(m);
    REQUIRE(inv);
    CHECK((m * *inv).is_identity());
    CHECK_FALSE(morita::inverse(Mat::from_rows(2, {{1, 1}, {1, 1}})));
    auto rhs = Mat::from_rows(3, {{1}, {2}});
    auto x = morita::solve(m, rhs);
    REQUIRE(x);
    CHECK(m * *x == rhs);
    CHECK_FALSE(morita::solve(Mat::from_rows(2, {{1, 1}, {1, 1}}), Mat::from_rows(2, {{1}, {0}})));
  }

  TEST_CASE("kronecker product") {
    CHECK(morita::kronecker(Mat::identity(2, 2), Mat::identity(2, 3)).is_identity());
    CHECK(morita::kronecker(Mat::from_rows(2, {{1, 1}}), Mat::zero(2, 2, 2)).is_zero());
    CHECK(morita::kronecker(Mat::from_rows(5, {{2}}), Mat::from_rows(5, {{3}})) ==
          Mat::from_rows(5, {{1}}));
  }

  TEST_CASE("cokernel dimension") {
    auto m = Mat::from_rows(2, {{1, 0}, {0, 1}, {0, 0}});
    CHECK(morita::cokernel(m).quotient_dim == 1);
    CHECK((morita::cokernel(m).projection * m).is_zero());
    CHECK(morita::is_injective_map(m));
    CHECK_FALSE(morita::is_surjective_map(m));
  }

  TEST_CASE("flatten round trip") {
    auto m = Mat::from_rows(3, {{1, 2, 0}, {2, 1, 1}});
    CHECK(Mat::unflatten(m.flatten(), 2, 3) == m);
  }
}
