#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcq/polynomial.hpp"

using namespace qcq;

namespace {

std::vector<Variable> xy(std::int64_t m) { return {{"x", m}, {"y", m}}; }

}  // namespace

TEST_CASE("char_poly agrees with cofactor expansion") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 4;
    IntMatrix m(oracle::random_matrix(rng, n, -9, 9));
    auto coeffs = char_poly_coefficients(m);
    REQUIRE(coeffs.size() == static_cast<std::size_t>(n + 1));
    CHECK(coeffs[0] == 1);
    for (std::int64_t t = -3; t <= 3; ++t) {
      std::int64_t v = 0;
      for (auto c : coeffs) v = v * t + c;
      CHECK(v == oracle::char_poly_at(m, t));
    }
  }
}

TEST_CASE("char_poly small cases") {
  CHECK(char_poly(IntMatrix({{3, 0, 0}, {0, 0, 0}, {0, 0, 0}})).to_string() == "t^3 - 3t^2");
  CHECK(char_poly(IntMatrix({{0, 1, 1}, {0, 0, 0}, {1, 0, 0}})).to_string() == "t^3 - t");
  CHECK(char_poly(IntMatrix(3, 3)).to_string() == "t^3");
  CHECK(char_poly(IntMatrix::identity(2), "s").to_string() == "s^2 - 2s + 1");
}

TEST_CASE("matrix polynomial of the 3x3 example") {
  IntMatrix m({{1, 0, 2}, {3, 0, 0}, {0, 0, 2}});
  auto p = matrix_poly(m, {0, 1, 2}, 3);
  CHECK(p.coefficient({0, 0}) == 1);
  CHECK(p.coefficient({0, 2}) == 2);
  CHECK(p.coefficient({1, 0}) == 3);
  CHECK(p.coefficient({2, 2}) == 2);
  CHECK(p.terms().size() == 4);
  CHECK(p.to_string() == "2x^2y^2 + 3x + 2y^2 + 1");
  CHECK(matrix_from_poly(p, {0, 1, 2}) == m);
  CHECK(matrix_poly(IntMatrix(3, 3), {0, 1, 2}, 3).is_zero());
}

TEST_CASE("matrix polynomial round trip on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + trial % 4;
    IntMatrix m(oracle::random_matrix(rng, n, 0, 5));
    std::vector<std::int64_t> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    auto p = matrix_poly(m, labels, n);
    CHECK(matrix_from_poly(p, labels) == m);
    std::int64_t mass = 0;
    for (auto v : m.data()) mass += v;
    CHECK(p.coefficient_sum() == mass);
  }
}

TEST_CASE("rendering and parsing") {
  std::vector<Variable> st{{"s", 0}, {"t", 0}};
  for (const char* s : {"5s^3t^3 - 39s^3t^2", "s^3t^3 - 27s^3t^2 + 2s^2t^3 - 12s^2t^2", "-s", "0", "7"}) {
    auto p = parse_polynomial(s, st);
    CHECK(p.to_string() == s);
  }
  auto xyz = std::vector<Variable>{{"x", 3}, {"y", 3}, {"z", 0}};
  for (const char* s : {"24x^2z^3 + 24xz^3 + 39z^3", "18xz^3 + 117z^3", "64x^2y^2z^4"})
    CHECK(parse_polynomial(s, xyz).to_string() == s);
  auto p = parse_polynomial("13 + 4y + 6y^2 + 4x^2", xy(3));
  CHECK(p.to_string() == "4x^2 + 6y^2 + 4y + 13");
  CHECK(p.to_string(true) == "13 + 4y + 6y^2 + 4x^2");
  CHECK(parse_polynomial("x^4", xy(3)).to_string() == "x");  // exponents live in Z_3
  CHECK_THROWS(parse_polynomial("3w", xy(3)));
  CHECK_THROWS(parse_polynomial("3x +", xy(3)));
}

TEST_CASE("arithmetic") {
  auto a = parse_polynomial("x + 1", xy(0));
  auto b = parse_polynomial("x - 1", xy(0));
  CHECK((a * b).to_string() == "x^2 - 1");
  CHECK((a - a).is_zero());
  CHECK((a + b).to_string() == "2x");
  CHECK(a.scaled(-3).to_string() == "-3x - 3");
  auto m3 = parse_polynomial("x^2", xy(3));
  CHECK((m3 * m3).to_string() == "x");
  CHECK_THROWS(a + m3);
}

TEST_CASE("specialization") {
  std::vector<Variable> xyz{{"x", 4}, {"y", 4}, {"z", 0}};
  auto p = parse_polynomial("8z^5 + 8xyz^5", xyz);
  auto q = specialize(p, {{"z"}, true});
  CHECK(q.to_string(true) == "8 + 8q");
  auto r = parse_polynomial("16z^3", xyz);
  CHECK(specialize(r, {{"z"}, true}).to_string() == "16");
  auto st = parse_polynomial("5s^3t^3 - 39s^3t^2", {{"s", 0}, {"t", 0}});
  CHECK(specialize(st, {{"s"}, false}).to_string() == "5t^3 - 39t^2");
  auto untouched = parse_polynomial("4x^2 + 6y^2", xy(3));
  CHECK(same_polynomial(specialize(untouched, {{"z"}, false}), untouched));
}

TEST_CASE("overflow is reported") {
  auto big = Polynomial::constant({{"t", 0}}, INT64_MAX);
  CHECK_THROWS_AS(big + big, OverflowError);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), OverflowError);
}
