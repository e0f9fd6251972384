#include <doctest.h>

#include <string>

#include "qcq/algebra.hpp"

using namespace qcq;

namespace {

// Direct check of f(x ⊴ y) = f(x) ⊴ f(y) and the same for ⊳̄.
bool preserves(const std::vector<int>& f, const Biquandle& a, const Biquandle& b) {
  for (int x = 1; x <= a.order(); ++x)
    for (int y = 1; y <= a.order(); ++y)
      if (f[a.under(x, y) - 1] != b.under(f[x - 1], f[y - 1]) || f[a.over(x, y) - 1] != b.over(f[x - 1], f[y - 1]))
        return false;
  return true;
}

std::vector<EndoMap> exhaustive_homs(const Biquandle& a, const Biquandle& b) {
  std::vector<EndoMap> out;
  std::vector<int> f(a.order(), 1);
  while (true) {
    if (preserves(f, a, b)) out.push_back({f});
    int i = a.order() - 1;
    while (i >= 0 && f[i] == b.order()) f[i--] = 1;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

Biquandle with_under(const Biquandle& b, int x, int y, int v) {
  Table u = b.under_table();
  u[x - 1][y - 1] = v;
  return Biquandle(u, b.over_table());
}

}  // namespace

TEST_CASE("builtins satisfy the axioms") {
  for (const char* spec : {"transposition3", "core:3", "core:4", "core:5", "alexander:5:2", "alexander:7:3",
                           "alexander-biquandle:5:2:3", "alexander-biquandle:7:3:2", "trivial:4", "z2-biquandle",
                           "conjugation-cyclic:4", "conjugation-symmetric:3"}) {
    CAPTURE(spec);
    CHECK(check_axioms(builtin_biquandle(spec)).empty());
  }
  CHECK_THROWS_AS(builtin_biquandle("octonions"), AlgebraError);
}

TEST_CASE("mutated tables are rejected") {
  auto t3 = builtin_biquandle("transposition3");
  CHECK_FALSE(check_axioms(with_under(t3, 1, 1, 2)).empty());  // idempotence
  CHECK_FALSE(check_axioms(with_under(t3, 1, 3, 1)).empty());  // column no longer a permutation
  auto c4 = builtin_biquandle("core:4");
  CHECK_FALSE(check_axioms(with_under(with_under(c4, 1, 2, 4), 3, 2, 3)).empty());
  auto ab = builtin_biquandle("alexander-biquandle:5:2:3");
  Table o = ab.over_table();
  std::swap(o[0][0], o[1][0]);
  CHECK_FALSE(check_axioms(Biquandle(ab.under_table(), o)).empty());
}

TEST_CASE("transposition3 table") {
  auto t3 = builtin_biquandle("transposition3");
  CHECK(t3.under_table() == Table{{1, 1, 2}, {2, 2, 1}, {3, 3, 3}});
  CHECK(t3.is_quandle());
  CHECK(t3.is_kei());
}

TEST_CASE("quandle classification flags") {
  CHECK(builtin_biquandle("core:4").is_kei());
  CHECK(builtin_biquandle("alexander:5:2").is_quandle());
  CHECK_FALSE(builtin_biquandle("alexander:5:2").is_kei());
  auto s3 = builtin_biquandle("conjugation-symmetric:3");
  CHECK(s3.order() == 6);
  CHECK(s3.is_quandle());
  CHECK_FALSE(s3.is_kei());
  CHECK_FALSE(builtin_biquandle("alexander-biquandle:5:2:3").is_quandle());
  CHECK_FALSE(builtin_biquandle("z2-biquandle").is_quandle());
}

TEST_CASE("under_inverse inverts columns") {
  auto x = builtin_biquandle("alexander:7:3");
  for (int a = 1; a <= 7; ++a)
    for (int b = 1; b <= 7; ++b) CHECK(x.under(x.under_inverse(a, b), b) == a);
}

TEST_CASE("homomorphisms agree with the exhaustive filter") {
  for (const char* spec : {"transposition3", "core:4", "alexander:5:2", "z2-biquandle", "alexander-biquandle:5:2:3"}) {
    CAPTURE(spec);
    auto x = builtin_biquandle(spec);
    auto fast = endomorphisms(x);
    auto slow = exhaustive_homs(x, x);
    std::sort(fast.begin(), fast.end());
    CHECK(fast == slow);
    for (const auto& f : fast)
      for (const auto& g : fast) CHECK(is_homomorphism(compose(f, g), x, x));
  }
  auto t3 = builtin_biquandle("transposition3");
  auto c4 = builtin_biquandle("core:4");
  auto h = homomorphisms(t3, c4);
  auto slow = exhaustive_homs(t3, c4);
  std::sort(h.begin(), h.end());
  CHECK(h == slow);
}

TEST_CASE("core of Z4 endomorphisms include the constant maps") {
  auto ends = endomorphisms(builtin_biquandle("core:4"));
  for (int c = 1; c <= 4; ++c) CHECK(std::find(ends.begin(), ends.end(), EndoMap{{c, c, c, c}}) != ends.end());
  CHECK(std::find(ends.begin(), ends.end(), identity_map(4)) != ends.end());
  CHECK(std::find(ends.begin(), ends.end(), EndoMap{{2, 4, 2, 4}}) != ends.end());
}

TEST_CASE("json round trip") {
  for (const char* spec : {"transposition3", "z2-biquandle", "alexander-biquandle:5:2:3"}) {
    auto x = builtin_biquandle(spec);
    CHECK(biquandle_from_json(to_json(x)) == x);
  }
  auto q = biquandle_from_json(nlohmann::json{{"n", 3}, {"under", {{1, 1, 2}, {2, 2, 1}, {3, 3, 3}}}});
  CHECK(q == builtin_biquandle("transposition3"));
  CHECK_THROWS_AS(biquandle_from_json(nlohmann::json{{"n", 2}, {"under", {{1, 3}, {2, 2}}}}), AlgebraError);
  CHECK_THROWS_AS(biquandle_from_json(nlohmann::json{{"n", 2}, {"under", {{1, 1}}}}), AlgebraError);
}

TEST_CASE("group tables") {
  auto s3 = symmetric_group_table(3);
  CHECK(s3.size() == 6);
  CHECK(s3[0] == std::vector<int>{1, 2, 3, 4, 5, 6});  // identity first
  auto z5 = cyclic_group_table(5);
  CHECK(z5[0][3] == 5);  // residues 1..m, m is the identity
  CHECK(z5[4][2] == 3);
}
