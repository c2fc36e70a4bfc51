#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpoly/arith.hpp"
#include "latpoly/matrix.hpp"
#include "support.hpp"

using namespace latpoly;
using testsupport::leibniz_det;
using testsupport::random_matrix;
using testsupport::random_unimodular;

namespace {

bool is_row_hnf(const IntMatrix& h) {
  std::size_t last_pivot_col = 0;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (r > 0 && c <= last_pivot_col) return false;
    if (h(r, c) <= 0) return false;
    for (std::size_t i = 0; i < r; ++i)
      if (h(i, c) < 0 || h(i, c) >= h(r, c)) return false;
    for (std::size_t i = r + 1; i < h.rows(); ++i)
      if (h(i, c) != 0) return false;
    last_pivot_col = c;
  }
  return true;
}

}  // namespace

TEST_CASE("checked arithmetic reports overflow") {
  CHECK_THROWS_AS(checked_mul(Int{1} << 62, 4), OverflowError);
  CHECK_THROWS_AS(checked_neg(std::numeric_limits<Int>::min()), OverflowError);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(mod_floor(-7, 3) == 2);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == 118264581564861424LL);
  CHECK_THROWS_AS(binomial(100, 50), OverflowError);
  for (Int n = 1; n < 30; ++n)
    for (Int k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("extended gcd") {
  for (int it = 0; it < 500; ++it) {
    Int a = testsupport::uniform(-1000, 1000), b = testsupport::uniform(-1000, 1000), x = 0, y = 0;
    Int g = ext_gcd(a, b, x, y);
    CHECK(g == gcd(a, b));
    CHECK(a * x + b * y == g);
  }
}

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a + Rational(3, 2) == Rational(0));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgument);
  CHECK(Rational(5, 10).to_string() == "1/2");
}

TEST_CASE("hermite normal form examples") {
  auto id = hermite_normal_form(IntMatrix::identity(3));
  CHECK(id.h == IntMatrix::identity(3));
  CHECK(id.u == IntMatrix::identity(3));

  IntMatrix two{{2, 0}, {0, 2}};
  CHECK(hermite_normal_form(two).h == two);

  IntMatrix a{{1, 1, 2}, {1, 0, 0}, {0, 1, 0}};
  auto hr = hermite_normal_form(a);
  CHECK(hr.h(0, 0) == 1);
  CHECK(hr.h(1, 1) == 1);
  CHECK(hr.h(2, 2) == 2);
  CHECK(is_row_hnf(hr.h));
  CHECK(hr.u * a == hr.h);

  auto zero = hermite_normal_form(IntMatrix(2, 3));
  CHECK(zero.h.is_zero());
  CHECK(zero.u == IntMatrix::identity(2));
  CHECK(zero.rank == 0);
}

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix::identity(4)).diagonal == IntVector{1, 1, 1, 1});
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal == IntVector{1, 6});
  IntMatrix lifted{{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {1, 1, 2, 1}};
  auto snf = smith_normal_form(lifted);
  CHECK(snf.diagonal == IntVector{1, 1, 1, 2});
}

TEST_CASE("property: HNF and SNF reconstruct the input") {
  for (int it = 0; it < 300; ++it) {
    const auto rows = static_cast<std::size_t>(testsupport::uniform(1, 5));
    const auto cols = static_cast<std::size_t>(testsupport::uniform(1, 5));
    IntMatrix a = random_matrix(rows, cols, -4, 4);
    if (it % 7 == 0 && rows > 1) {
      for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = 2 * a(0, c);
    }
    auto hr = hermite_normal_form(a);
    CHECK(is_row_hnf(hr.h));
    CHECK(hr.u * a == hr.h);
    CHECK(std::abs(determinant(hr.u)) == 1);
    CHECK(hr.rank == rank(a));
    // H is a function of the row lattice only.
    CHECK(hermite_normal_form(random_unimodular(rows) * a).h == hr.h);

    auto snf = smith_normal_form(a);
    CHECK(std::abs(determinant(snf.left)) == 1);
    CHECK(std::abs(determinant(snf.right)) == 1);
    IntMatrix diag(rows, cols);
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) diag(i, i) = snf.diagonal[i];
    CHECK(snf.left * a * snf.right == diag);
    CHECK(unimodular_inverse(snf.left) * diag * unimodular_inverse(snf.right) == a);
    for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i) {
      if (snf.diagonal[i + 1] != 0) CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
      CHECK(snf.diagonal[i] >= 0);
    }
    CHECK(snf.rank == rank(a));
    if (rows == cols) {
      Int prod = 1;
      for (Int v : snf.diagonal) prod *= v;
      CHECK(prod == std::abs(leibniz_det(a)));
    }
  }
}

TEST_CASE("determinant agrees with the Leibniz formula") {
  for (int it = 0; it < 200; ++it) {
    const auto n = static_cast<std::size_t>(testsupport::uniform(1, 5));
    IntMatrix a = random_matrix(n, n, -5, 5);
    CHECK(determinant(a) == leibniz_det(a));
  }
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("integer kernel is saturated") {
  IntMatrix a{{2, 4, 6}};
  IntMatrix k = integer_kernel(a);
  CHECK(k.rows() == 2);
  for (std::size_t r = 0; r < k.rows(); ++r) CHECK(dot(a.row(0), k.row(r)) == 0);
  // Saturation: (1,1,-1) solves a x = 0 and must be an integer combination of the basis.
  CHECK(solve_row_combination(k, IntVector{1, 1, -1}).has_value());

  for (int it = 0; it < 200; ++it) {
    const auto rows = static_cast<std::size_t>(testsupport::uniform(1, 4));
    const auto cols = static_cast<std::size_t>(testsupport::uniform(2, 5));
    IntMatrix m = random_matrix(rows, cols, -3, 3);
    IntMatrix ker = integer_kernel(m);
    CHECK(ker.rows() == cols - rank(m));
    CHECK((m * ker.transposed()).is_zero());
    if (ker.rows() > 0) {
      auto snf = smith_normal_form(ker);
      for (std::size_t i = 0; i < ker.rows(); ++i) CHECK(snf.diagonal[i] == 1);
    }
  }
}

TEST_CASE("adjugate and inverse") {
  for (int it = 0; it < 100; ++it) {
    const auto n = static_cast<std::size_t>(testsupport::uniform(1, 5));
    IntMatrix a = random_matrix(n, n, -4, 4);
    Adjugate adj = adjugate(a);
    IntMatrix prod = a * adj.adj;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(prod(i, j) == (i == j ? adj.det : 0));
    IntMatrix u = random_unimodular(n);
    CHECK(u * unimodular_inverse(u) == IntMatrix::identity(n));
  }
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), InvalidArgument);
}

TEST_CASE("solve_row_combination") {
  IntMatrix b{{1, 0, 1}, {0, 2, 0}};
  CHECK(solve_row_combination(b, IntVector{3, 4, 3}) == IntVector{3, 2});
  CHECK_FALSE(solve_row_combination(b, IntVector{0, 1, 0}).has_value());
  CHECK_FALSE(solve_row_combination(b, IntVector{0, 0, 1}).has_value());
}
