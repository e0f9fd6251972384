#include "qcq/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qcq {

std::vector<std::string> validate(const DataVector& dv) {
  std::vector<std::string> report;
  if (dv.ring != "Z") report.push_back("coefficient ring must be Z, got " + dv.ring);
  for (const auto& msg : check_axioms(dv.x)) report.push_back("X: " + msg);
  const int p = PairBasis(dv.x.order()).size();
  for (std::size_t i = 0; i < dv.cocycles.size(); ++i) {
    const auto& phi = dv.cocycles[i];
    if (static_cast<int>(phi.values.size()) != p)
      report.push_back("cocycle " + std::to_string(i) + " has " + std::to_string(phi.values.size()) +
                       " entries, expected " + std::to_string(p));
    else if (dv.require_cocycles && !is_cocycle(phi, dv.x, dv.a))
      report.push_back("cocycle " + std::to_string(i) + " fails the 2-cocycle condition");
  }
  for (std::size_t i = 0; i < dv.endos.size(); ++i)
    if (!is_homomorphism(dv.endos[i], dv.x, dv.x))
      report.push_back("map " + std::to_string(i) + " is not an endomorphism");
  return report;
}

ColoringQuiver build_coloring_quiver(const LinkDiagram& d, const Biquandle& x,
                                     const std::vector<EndoMap>& endos) {
  if (endos.empty()) throw QuiverError("need at least one endomorphism");
  for (std::size_t i = 0; i < endos.size(); ++i)
    if (!is_homomorphism(endos[i], x, x))
      throw QuiverError("map " + std::to_string(i) + " is not an endomorphism");
  ColoringQuiver q;
  q.vertices = colorings(d, x);
  std::map<Coloring, int> index;
  for (int i = 0; i < static_cast<int>(q.vertices.size()); ++i) {
    index[q.vertices[i]] = i;
    q.chains.push_back(chain_vector(q.vertices[i], d, x));
  }
  for (int i = 0; i < static_cast<int>(q.vertices.size()); ++i)
    for (int s = 0; s < static_cast<int>(endos.size()); ++s) {
      auto it = index.find(push_forward(q.vertices[i], endos[s]));
      if (it == index.end()) throw QuiverError("push-forward left the homset");
      q.edges.push_back({i, it->second, s});
    }
  return q;
}

std::vector<std::int64_t> RepQuiver::labels() const {
  std::vector<std::int64_t> l(modulus);
  for (std::int64_t i = 0; i < modulus; ++i) l[i] = i;
  return l;
}

RepQuiver build_representation(const LinkDiagram& d, const DataVector& dv) {
  if (!dv.a.finite()) throw QuiverError("representation needs a finite coefficient group");
  auto report = validate(dv);
  if (!report.empty()) throw QuiverError(report.front());
  ColoringQuiver cq = build_coloring_quiver(d, dv.x, dv.endos);

  RepQuiver q;
  q.modulus = dv.a.modulus();
  q.cocycle_count = static_cast<int>(dv.cocycles.size());
  q.endo_count = static_cast<int>(dv.endos.size());
  for (std::size_t i = 0; i < cq.vertices.size(); ++i) {
    RepVertex v{cq.vertices[i], cq.chains[i], {}, {}};
    for (const auto& phi : dv.cocycles) v.values.push_back(evaluate(phi, v.chain, dv.a));
    std::set<std::int64_t> gens(v.values.begin(), v.values.end());
    v.subspace.assign(gens.begin(), gens.end());
    q.vertices.push_back(std::move(v));
  }
  const int m = static_cast<int>(q.modulus);
  for (const auto& e : cq.edges) {
    RepEdge re{e.source, e.target, e.endo, IntMatrix(m, m)};
    const auto& src = q.vertices[e.source].values;
    const auto& dst = q.vertices[e.target].values;
    for (std::size_t k = 0; k < src.size(); ++k) re.matrix(static_cast<int>(dst[k]), static_cast<int>(src[k])) += 1;
    q.edges.push_back(std::move(re));
  }
  return q;
}

namespace {

// out[v][endo] = edge index, or empty when some vertex lacks exactly one edge per endo
std::vector<std::vector<int>> out_table(const RepQuiver& q) {
  std::vector<std::vector<int>> out(q.vertices.size(), std::vector<int>(q.endo_count, -1));
  for (int i = 0; i < static_cast<int>(q.edges.size()); ++i) {
    const auto& e = q.edges[i];
    if (e.endo < 0 || e.endo >= q.endo_count || out[e.source][e.endo] >= 0) return {};
    out[e.source][e.endo] = i;
  }
  for (const auto& row : out)
    for (int x : row)
      if (x < 0) return {};
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const RepQuiver& a, const RepQuiver& b, std::vector<std::vector<int>> oa,
            std::vector<std::vector<int>> ob)
      : a_(a), b_(b), oa_(std::move(oa)), ob_(std::move(ob)) {
    const std::size_t n = a.vertices.size();
    fwd_.assign(n, -1);
    bwd_.assign(n, -1);
  }

  bool run() { return search(); }

 private:
  bool compatible(int i, int j) const {
    if (a_.vertices[i].subspace != b_.vertices[j].subspace) return false;
    for (int s = 0; s < a_.endo_count; ++s)
      if (a_.edges[oa_[i][s]].matrix != b_.edges[ob_[j][s]].matrix) return false;
    return true;
  }

  bool assign(int i, int j, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> stack{{i, j}};
    while (!stack.empty()) {
      auto [u, v] = stack.back();
      stack.pop_back();
      if (fwd_[u] >= 0 || bwd_[v] >= 0) {
        if (fwd_[u] != v || bwd_[v] != u) return false;
        continue;
      }
      if (!compatible(u, v)) return false;
      fwd_[u] = v;
      bwd_[v] = u;
      trail.push_back(u);
      for (int s = 0; s < a_.endo_count; ++s)
        stack.emplace_back(a_.edges[oa_[u][s]].target, b_.edges[ob_[v][s]].target);
    }
    return true;
  }

  void undo(std::vector<int>& trail) {
    for (int u : trail) {
      bwd_[fwd_[u]] = -1;
      fwd_[u] = -1;
    }
    trail.clear();
  }

  bool search() {
    auto it = std::find(fwd_.begin(), fwd_.end(), -1);
    if (it == fwd_.end()) return true;
    const int i = static_cast<int>(it - fwd_.begin());
    for (int j = 0; j < static_cast<int>(bwd_.size()); ++j) {
      if (bwd_[j] >= 0) continue;
      std::vector<int> trail;
      if (assign(i, j, trail) && search()) return true;
      undo(trail);
    }
    return false;
  }

  const RepQuiver& a_;
  const RepQuiver& b_;
  std::vector<std::vector<int>> oa_, ob_;
  std::vector<int> fwd_, bwd_;
};

}  // namespace

bool quiver_isomorphic(const RepQuiver& a, const RepQuiver& b) {
  if (a.modulus != b.modulus || a.endo_count != b.endo_count ||
      a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size())
    return false;
  auto oa = out_table(a);
  auto ob = out_table(b);
  if (oa.empty() != ob.empty()) return false;
  if (oa.empty() && !a.vertices.empty())
    throw QuiverError("isomorphism test needs exactly one out-edge per endomorphism");
  // cheap invariant: multiset of (subspace, out matrices)
  auto signature = [](const RepQuiver& q, const std::vector<std::vector<int>>& o) {
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<IntMatrix>>> sig;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      std::vector<IntMatrix> ms;
      for (int e : o[v]) ms.push_back(q.edges[e].matrix);
      sig.emplace_back(q.vertices[v].subspace, std::move(ms));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  if (signature(a, oa) != signature(b, ob)) return false;
  return IsoSearch(a, b, std::move(oa), std::move(ob)).run();
}

nlohmann::json to_json(const RepQuiver& q) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : q.vertices)
    vs.push_back({{"coloring", v.coloring.colors},
                  {"chain", v.chain.coords},
                  {"values", v.values},
                  {"subspace", v.subspace}});
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : q.edges)
    es.push_back({{"source", e.source}, {"target", e.target}, {"endo", e.endo}, {"matrix", e.matrix.data()}});
  return {{"modulus", q.modulus},
          {"cocycle_count", q.cocycle_count},
          {"endo_count", q.endo_count},
          {"vertices", vs},
          {"edges", es}};
}

RepQuiver rep_quiver_from_json(const nlohmann::json& j) {
  try {
    RepQuiver q;
    q.modulus = j.at("modulus").get<std::int64_t>();
    q.cocycle_count = j.at("cocycle_count").get<int>();
    q.endo_count = j.at("endo_count").get<int>();
    if (q.modulus < 1) throw QuiverError("quiver JSON: modulus must be positive");
    for (const auto& v : j.at("vertices")) {
      RepVertex rv;
      rv.coloring.colors = v.at("coloring").get<std::vector<int>>();
      rv.chain.coords = v.at("chain").get<std::vector<std::int64_t>>();
      rv.values = v.at("values").get<std::vector<std::int64_t>>();
      rv.subspace = v.at("subspace").get<std::vector<std::int64_t>>();
      q.vertices.push_back(std::move(rv));
    }
    const int m = static_cast<int>(q.modulus);
    const int nv = static_cast<int>(q.vertices.size());
    for (const auto& e : j.at("edges")) {
      RepEdge re{e.at("source").get<int>(), e.at("target").get<int>(), e.at("endo").get<int>(), IntMatrix(m, m)};
      if (re.source < 0 || re.source >= nv || re.target < 0 || re.target >= nv)
        throw QuiverError("quiver JSON: edge endpoint out of range");
      auto flat = e.at("matrix").get<std::vector<std::int64_t>>();
      if (static_cast<int>(flat.size()) != m * m) throw QuiverError("quiver JSON: matrix size mismatch");
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) re.matrix(r, c) = flat[static_cast<std::size_t>(r) * m + c];
      q.edges.push_back(std::move(re));
    }
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw QuiverError(std::string("bad quiver JSON: ") + e.what());
  }
}

}  // namespace qcq
