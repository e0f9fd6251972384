#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qcq/cli.hpp"
#include "qcq/cohomology.hpp"
#include "qcq/diagram.hpp"

using namespace qcq;

namespace {

const char* kTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
const char* kHopf = "X[4,1,3,2] X[2,3,1,4]";

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

// Signed Gauss code read off a one-component diagram.
std::string gauss_of(const LinkDiagram& d) {
  std::string out;
  int arc = 0;
  for (int step = 0; step < 2 * d.crossing_count(); ++step) {
    for (int i = 0; i < d.crossing_count(); ++i) {
      const auto& c = d.crossings()[i];
      if (c.under_in == arc || c.over_in == arc) {
        out += (c.over_in == arc ? "O" : "U") + std::to_string(i + 1) + (c.sign > 0 ? "+" : "-");
        break;
      }
    }
    arc = d.successor()[arc];
  }
  return out;
}

std::multiset<std::int64_t> weights(const LinkDiagram& d, const Biquandle& x, const Cocycle& phi,
                                    const CoeffGroup& a) {
  std::multiset<std::int64_t> out;
  for (const auto& c : colorings(d, x)) out.insert(evaluate(phi, chain_vector(c, d, x), a));
  return out;
}

}  // namespace

TEST_CASE("validate reports structural problems") {
  CHECK(validate(std::vector<Crossing>{}) == std::vector<std::string>{"no crossings"});
  std::vector<Crossing> dup{{1, 0, 1, 2, 1}, {1, 1, 0, 1, 2}};
  auto r = validate(dup);
  CHECK(std::find(r.begin(), r.end(), "semiarc 1 duplicated in outgoing slots") != r.end());
  CHECK(std::find(r.begin(), r.end(), "orientation successor not a permutation") != r.end());
  CHECK_FALSE(validate(std::vector<Crossing>{{2, 0, 1, 1, 0}}).empty());
  CHECK(validate(std::vector<Crossing>{{1, 0, 1, 1, 0}}).empty());
}

TEST_CASE("parse_pd infers orientation and signs") {
  auto t = parse_pd(kTrefoil);
  CHECK(t.crossing_count() == 3);
  CHECK(t.semiarc_count() == 6);
  CHECK(t.component_count() == 1);
  CHECK(std::abs(writhe(t)) == 3);

  auto h = parse_pd(kHopf);
  CHECK(h.component_count() == 2);
  CHECK(std::abs(writhe(h)) == 2);

  auto wrapped = parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]  # trefoil");
  CHECK(wrapped == t);
}

TEST_CASE("parse_pd explicit signs agree with inference") {
  auto t = parse_pd(kTrefoil);
  CHECK(parse_pd(to_pd(t)) == t);
  auto m = mirror(t);
  CHECK(writhe(m) == -writhe(t));
}

TEST_CASE("parse_pd rejects malformed input") {
  CHECK_THROWS_WITH_AS(parse_pd("X[1,2,3]"), "crossing 0: expected 4 labels, got 3", DiagramError);
  CHECK_THROWS_AS(parse_pd(""), DiagramError);
  CHECK_THROWS_AS(parse_pd("X[1,2,2,1] hello"), DiagramError);
  CHECK_THROWS_AS(parse_pd("X[1,a,2,3]"), DiagramError);
  CHECK_THROWS_AS(parse_pd("X[1,5,2,4] X[3,1,4,6]"), DiagramError);
}

TEST_CASE("parse_gauss builds the virtual trefoil") {
  auto v = parse_gauss("O1-O2-U1-U2-");
  CHECK(v.crossing_count() == 2);
  CHECK(v.component_count() == 1);
  CHECK(writhe(v) == -2);
  CHECK_THROWS_WITH_AS(parse_gauss("O1-O2-U1-U2"), "sign flag missing for crossing 2", DiagramError);
  CHECK_THROWS_WITH_AS(parse_gauss("O1-U1-O1-"), "crossing 1 seen 3 times", DiagramError);
  CHECK_THROWS_WITH_AS(parse_gauss("O1-O1-"), "crossing 1: needs one O and one U", DiagramError);
  CHECK_THROWS_WITH_AS(parse_gauss("O1-U1+"), "crossing 1: sign flags disagree", DiagramError);
  CHECK_THROWS_AS(parse_gauss("X1-"), DiagramError);
}

TEST_CASE("PD and Gauss descriptions of the trefoil agree") {
  auto t = parse_pd(kTrefoil);
  auto g = parse_gauss(gauss_of(t));
  CHECK(g.crossing_count() == 3);
  CHECK(writhe(g) == writhe(t));
  for (const char* spec : {"core:3", "alexander:5:2", "conjugation-symmetric:3", "alexander-biquandle:5:2:3"}) {
    auto x = builtin_biquandle(spec);
    CHECK(counting_invariant(g, x) == counting_invariant(t, x));
    auto a = CoeffGroup::cyclic(5);
    for (const auto& phi : h2_generators(x, a).generators) CHECK(weights(g, x, phi, a) == weights(t, x, phi, a));
  }
}

TEST_CASE("mirror and reversal are involutions") {
  auto cat = Catalog::load_default();
  for (const auto& e : cat.entries()) {
    auto d = entry_diagram(e);
    CAPTURE(e.name);
    CHECK(mirror(mirror(d)) == d);
    std::vector<int> all(d.component_count());
    for (int i = 0; i < d.component_count(); ++i) all[i] = i;
    CHECK(reverse_components(reverse_components(d, all), all) == d);
    CHECK(writhe(reverse_components(d, all)) == writhe(d));
    CHECK(parse_pd(to_pd(d)) == d);
  }
}

TEST_CASE("reversing one component of the Hopf link flips linking") {
  auto h = parse_pd(kHopf);
  auto r = reverse_components(h, {0});
  CHECK(writhe(r) == -writhe(h));
  CHECK_THROWS_AS(reverse_components(h, {2}), DiagramError);
}

TEST_CASE("source labels survive derived diagrams") {
  auto d = parse_pd("X[6,1,7,2] X[8,3,5,4] X[2,5,3,6] X[4,7,1,8]");
  int c = component_of_source_label(d, 1);
  auto r = reverse_components(d, {c});
  CHECK(component_of_source_label(r, 1) == component_of_source_label(d, 1));
  auto m = mirror(d);
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b)
      CHECK((component_of_source_label(m, a) == component_of_source_label(m, b)) ==
            (component_of_source_label(d, a) == component_of_source_label(d, b)));
  CHECK_THROWS_AS(component_of_source_label(d, 99), DiagramError);
}

TEST_CASE("catalog entries parse with the expected component counts") {
  auto cat = Catalog::load_default();
  CHECK(cat.entries().size() >= 21);
  for (const auto& e : cat.entries()) {
    CAPTURE(e.name);
    auto d = entry_diagram(e);
    if (e.name[0] == 'L')
      CHECK(d.component_count() >= 2);
    else
      CHECK(d.component_count() == 1);
  }
  CHECK(cat.diagram("L6a4").component_count() == 3);
  CHECK(cat.diagram("3_1").crossing_count() == 3);
  CHECK(cat.diagram("4_1").crossing_count() == 4);
  CHECK_THROWS_AS(cat.diagram("L9z9"), JobError);
}

TEST_CASE("moves add crossings and keep components") {
  auto d = parse_pd(kTrefoil);
  for (int s : {1, -1})
    for (bool over : {true, false}) {
      auto k = add_kink(d, 2, s, over);
      CHECK(k.crossing_count() == 4);
      CHECK(k.component_count() == 1);
      CHECK(writhe(k) == writhe(d) + s);
    }
  auto b = add_bigon(d, 0, 3, true, 1);
  CHECK(b.crossing_count() == 5);
  CHECK(writhe(b) == writhe(d));
  CHECK_THROWS_AS(add_bigon(d, 1, 1, true, 1), DiagramError);
  CHECK_THROWS_AS(add_kink(d, 40, 1, true), DiagramError);
}

TEST_CASE("mirror preserves weights of the figure eight and counts of the trefoil") {
  auto cat = Catalog::load_default();
  auto fig8 = cat.diagram("4_1");
  auto tref = cat.diagram("3_1");
  for (const char* spec : {"alexander:5:2", "alexander:5:3", "conjugation-symmetric:3", "alexander:7:3"}) {
    auto x = builtin_biquandle(spec);
    for (std::int64_t m : {0, 3, 5, 7}) {
      auto a = m ? CoeffGroup::cyclic(m) : CoeffGroup::integers();
      for (const auto& phi : h2_generators(x, a).generators) {
        CHECK(weights(fig8, x, phi, a) == weights(mirror(fig8), x, phi, a));
        CHECK(counting_invariant(tref, x) == counting_invariant(mirror(tref), x));
      }
    }
  }
}
