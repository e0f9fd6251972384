#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qcq/matrix.hpp"
#include "qcq/polynomial.hpp"
#include "qcq/quiver.hpp"

namespace qcq {

class PathLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PathLimits {
  int max_edges = 512;
  std::int64_t max_steps = 20'000'000;  // DFS extensions before giving up
};

struct PathRecord {
  std::vector<int> edges;
  IntMatrix product;  // f_k ... f_2 f_1
  int length() const { return static_cast<int>(edges.size()); }
};

// Trails (no repeated edge) whose edge set is not strictly contained in the
// edge set of another trail. Every ordering of such a set that forms a trail
// is listed; order is by first edge, then DFS order.
std::vector<PathRecord> maximal_paths(const RepQuiver& q, const PathLimits& limits = {});

Polynomial edge_char_polynomial(const RepQuiver& q);
Polynomial edge_matrix_polynomial(const RepQuiver& q);
Polynomial path_char_polynomial(const RepQuiver& q, const std::vector<PathRecord>& paths);
Polynomial path_matrix_polynomial(const RepQuiver& q, const std::vector<PathRecord>& paths);

struct FourPolynomials {
  Polynomial edge_char, edge_matrix, path_char, path_matrix;
  int path_count = 0;
};

FourPolynomials four_polynomials(const RepQuiver& q, const PathLimits& limits = {});

}  // namespace qcq
