#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcq/algebra.hpp"
#include "qcq/cohomology.hpp"
#include "qcq/diagram.hpp"
#include "qcq/homset.hpp"
#include "qcq/matrix.hpp"

namespace qcq {

class QuiverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (X, A, C, k, S); k is always Z here.
struct DataVector {
  Biquandle x;
  CoeffGroup a = CoeffGroup::integers();
  std::vector<Cocycle> cocycles;
  std::string ring = "Z";
  std::vector<EndoMap> endos;
  // false skips the 2-cocycle condition on C (lengths are still checked);
  // the representation is then computed but carries no invariance guarantee
  bool require_cocycles = true;
};

std::vector<std::string> validate(const DataVector& dv);

struct ColoringQuiver {
  struct Edge {
    int source, target, endo;
  };
  std::vector<Coloring> vertices;
  std::vector<ChainVector> chains;
  std::vector<Edge> edges;  // vertex-major, then endo order
};

ColoringQuiver build_coloring_quiver(const LinkDiagram& d, const Biquandle& x,
                                     const std::vector<EndoMap>& endos);

struct RepVertex {
  Coloring coloring;
  ChainVector chain;
  std::vector<std::int64_t> values;    // phi(v) for each phi in C
  std::vector<std::int64_t> subspace;  // distinct values, ascending
};

struct RepEdge {
  int source = 0, target = 0, endo = 0;
  IntMatrix matrix;  // rows, columns indexed by A in residue order
};

struct RepQuiver {
  std::int64_t modulus = 0;
  int cocycle_count = 0;
  int endo_count = 0;
  std::vector<RepVertex> vertices;
  std::vector<RepEdge> edges;

  std::vector<std::int64_t> labels() const;  // 0..m-1
};

RepQuiver build_representation(const LinkDiagram& d, const DataVector& dv);

// Vertex bijection preserving endo-labelled edges, subspaces and matrices.
bool quiver_isomorphic(const RepQuiver& a, const RepQuiver& b);

nlohmann::json to_json(const RepQuiver& q);
RepQuiver rep_quiver_from_json(const nlohmann::json& j);

}  // namespace qcq
