#include <doctest.h>

#include <random>

#include "qcq/cli.hpp"
#include "qcq/quiver.hpp"

using namespace qcq;

namespace {

DataVector transposition3_data() {
  DataVector dv;
  dv.x = builtin_biquandle("transposition3");
  dv.a = CoeffGroup::cyclic(3);
  dv.cocycles = {{{0, 1, 0, 1, 0, 0}}, {{0, 0, 1, 0, 0, 0}}, {{0, 0, 0, 0, 0, 1}}};
  dv.endos = {{{2, 2, 1}}};
  dv.require_cocycles = false;
  return dv;
}

DataVector core4_data() {
  DataVector dv;
  dv.x = builtin_biquandle("core:4");
  dv.a = CoeffGroup::cyclic(3);
  dv.cocycles = {{{1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}}, {{0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0}}};
  dv.endos = {{{2, 4, 2, 4}}, {{1, 1, 1, 1}}};
  return dv;
}

LinkDiagram l4a1() { return Catalog::load_default().diagram("L4a1"); }

RepQuiver relabelled(const RepQuiver& q, std::uint64_t seed) {
  std::vector<int> perm(q.vertices.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  RepQuiver r = q;
  for (std::size_t i = 0; i < perm.size(); ++i) r.vertices[perm[i]] = q.vertices[i];
  for (auto& e : r.edges) {
    e.source = perm[e.source];
    e.target = perm[e.target];
  }
  std::shuffle(r.edges.begin(), r.edges.end(), rng);
  return r;
}

}  // namespace

TEST_CASE("worked edge of the transposition quandle quiver") {
  auto q = build_representation(l4a1(), transposition3_data());
  CHECK(q.vertices.size() == 9);
  CHECK(q.edges.size() == 9);
  bool found = false;
  for (const auto& e : q.edges) {
    const auto& s = q.vertices[e.source];
    const auto& t = q.vertices[e.target];
    if (s.chain.coords != std::vector<std::int64_t>{0, 1, 0, 1, 1, 1}) continue;
    if (t.chain.coords != std::vector<std::int64_t>{2, 0, 2, 0, 0, 0}) continue;
    found = true;
    CHECK(e.matrix == IntMatrix({{0, 1, 1}, {0, 0, 0}, {1, 0, 0}}));
    CHECK(s.values == std::vector<std::int64_t>{2, 0, 1});
    CHECK(s.subspace == std::vector<std::int64_t>{0, 1, 2});
    CHECK(t.subspace == std::vector<std::int64_t>{0, 2});
  }
  CHECK(found);
}

TEST_CASE("every edge carries |C| units of mass") {
  for (const auto& dv : {transposition3_data(), core4_data()}) {
    auto q = build_representation(l4a1(), dv);
    CHECK(q.edges.size() == q.vertices.size() * dv.endos.size());
    for (const auto& e : q.edges) {
      std::int64_t mass = 0;
      for (auto v : e.matrix.data()) mass += v;
      CHECK(mass == static_cast<std::int64_t>(dv.cocycles.size()));
      const auto& src = q.vertices[e.source].values;
      for (int c = 0; c < e.matrix.cols(); ++c) {
        std::int64_t col = 0;
        for (int r = 0; r < e.matrix.rows(); ++r) col += e.matrix(r, c);
        CHECK(col == std::count(src.begin(), src.end(), c));
      }
    }
  }
}

TEST_CASE("coloring quiver edges follow push-forward") {
  auto x = builtin_biquandle("core:4");
  auto cq = build_coloring_quiver(l4a1(), x, {{{2, 4, 2, 4}}, identity_map(4)});
  CHECK(cq.vertices.size() == 16);
  for (const auto& e : cq.edges) {
    if (e.endo == 1) CHECK(e.source == e.target);
    for (std::size_t a = 0; a < cq.vertices[e.source].colors.size(); ++a) {
      int c = cq.vertices[e.source].colors[a];
      CHECK(cq.vertices[e.target].colors[a] == (e.endo == 1 ? c : (c % 2 ? 2 : 4)));
    }
  }
  CHECK_THROWS_AS(build_coloring_quiver(l4a1(), x, {}), QuiverError);
  CHECK_THROWS_AS(build_coloring_quiver(l4a1(), x, {{{2, 1, 3, 4}}}), QuiverError);
}

TEST_CASE("validation") {
  auto dv = transposition3_data();
  CHECK(validate(dv).empty());
  dv.require_cocycles = true;
  auto r = validate(dv);
  CHECK(r.size() == 2);
  CHECK(r[0] == "cocycle 1 fails the 2-cocycle condition");
  CHECK_THROWS_AS(build_representation(l4a1(), dv), QuiverError);
  dv = transposition3_data();
  dv.cocycles.push_back({{1, 2}});
  dv.endos.push_back({{3, 1, 2}});
  dv.ring = "Q";
  r = validate(dv);
  CHECK(r.size() == 3);
  dv = transposition3_data();
  dv.a = CoeffGroup::integers();
  CHECK_THROWS_AS(build_representation(l4a1(), dv), QuiverError);
}

TEST_CASE("isomorphism test") {
  auto q = build_representation(l4a1(), core4_data());
  CHECK(quiver_isomorphic(q, q));
  for (std::uint64_t seed : {1, 2, 3}) CHECK(quiver_isomorphic(q, relabelled(q, seed)));
  auto broken = relabelled(q, 4);
  broken.vertices[0].subspace.push_back(7);
  CHECK_FALSE(quiver_isomorphic(q, broken));
  auto rewired = q;
  // swap targets of two sigma edges with different targets
  int a = -1, b = -1;
  for (int i = 0; i < static_cast<int>(q.edges.size()) && b < 0; ++i)
    if (q.edges[i].endo == 0) {
      if (a < 0)
        a = i;
      else if (q.edges[i].target != q.edges[a].target && q.edges[i].matrix == q.edges[a].matrix)
        b = i;
    }
  if (b >= 0) {
    std::swap(rewired.edges[a].target, rewired.edges[b].target);
    auto sig = [](const RepQuiver& r) {
      std::vector<int> indeg(r.vertices.size());
      for (const auto& e : r.edges) ++indeg[e.target];
      std::sort(indeg.begin(), indeg.end());
      return indeg;
    };
    if (sig(rewired) != sig(q)) CHECK_FALSE(quiver_isomorphic(q, rewired));
  }
  auto other = build_representation(l4a1(), transposition3_data());
  CHECK_FALSE(quiver_isomorphic(q, other));
}

TEST_CASE("quivers of Reidemeister-equivalent diagrams are isomorphic") {
  auto d = l4a1();
  for (const auto& dv : {transposition3_data(), core4_data()}) {
    auto q = build_representation(d, dv);
    CHECK(quiver_isomorphic(q, build_representation(add_kink(d, 1, -1, true), dv)));
    CHECK(quiver_isomorphic(q, build_representation(add_bigon(d, 2, 6, true, 1), dv)));
  }
}

TEST_CASE("json round trip") {
  auto q = build_representation(l4a1(), core4_data());
  auto back = rep_quiver_from_json(nlohmann::json::parse(to_json(q).dump()));
  CHECK(to_json(back) == to_json(q));
  CHECK(quiver_isomorphic(q, back));
  auto j = to_json(q);
  j["edges"][0]["matrix"] = {1, 2};
  CHECK_THROWS_AS(rep_quiver_from_json(j), QuiverError);
  CHECK_THROWS_AS(rep_quiver_from_json(nlohmann::json{{"modulus", 3}}), QuiverError);
}
