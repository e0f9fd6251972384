#include "qcq/invariants.hpp"

#include <algorithm>
#include <string>

namespace qcq {

namespace {

class TrailSearch {
 public:
  TrailSearch(const RepQuiver& q, const PathLimits& limits) : q_(q), limits_(limits) {
    out_.resize(q.vertices.size());
    in_.resize(q.vertices.size());
    for (int e = 0; e < static_cast<int>(q.edges.size()); ++e) {
      out_[q.edges[e].source].push_back(e);
      in_[q.edges[e].target].push_back(e);
    }
    used_.assign(q.edges.size(), false);
  }

  // trails that cannot be extended at either end
  std::vector<std::vector<int>> run() {
    for (int e = 0; e < static_cast<int>(q_.edges.size()); ++e) {
      trail_ = {e};
      used_[e] = true;
      extend();
      used_[e] = false;
    }
    return std::move(found_);
  }

 private:
  void extend() {
    if (++steps_ > limits_.max_steps)
      throw PathLimitExceeded("path enumeration exceeded " + std::to_string(limits_.max_steps) + " steps");
    bool extended = false;
    for (int e : out_[q_.edges[trail_.back()].target]) {
      if (used_[e]) continue;
      extended = true;
      used_[e] = true;
      trail_.push_back(e);
      extend();
      trail_.pop_back();
      used_[e] = false;
    }
    if (extended) return;
    const auto& head_in = in_[q_.edges[trail_.front()].source];
    if (std::all_of(head_in.begin(), head_in.end(), [&](int e) { return used_[e]; })) found_.push_back(trail_);
  }

  const RepQuiver& q_;
  const PathLimits& limits_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<bool> used_;
  std::vector<int> trail_;
  std::vector<std::vector<int>> found_;
  std::int64_t steps_ = 0;
};

}  // namespace

std::vector<PathRecord> maximal_paths(const RepQuiver& q, const PathLimits& limits) {
  if (static_cast<int>(q.edges.size()) > limits.max_edges)
    throw PathLimitExceeded("quiver has " + std::to_string(q.edges.size()) + " edges, cap is " +
                            std::to_string(limits.max_edges));
  auto trails = TrailSearch(q, limits).run();
  std::vector<std::vector<int>> sets;
  for (const auto& t : trails) {
    auto s = t;
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
  }
  std::vector<PathRecord> result;
  for (std::size_t i = 0; i < trails.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < trails.size() && !dominated; ++j)
      dominated = sets[j].size() > sets[i].size() &&
                  std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end());
    if (dominated) continue;
    PathRecord p{trails[i], q.edges[trails[i].front()].matrix};
    for (std::size_t k = 1; k < trails[i].size(); ++k) p.product = q.edges[trails[i][k]].matrix * p.product;
    result.push_back(std::move(p));
  }
  return result;
}

Polynomial edge_char_polynomial(const RepQuiver& q) {
  Polynomial p({{"t", 0}});
  for (const auto& e : q.edges) p += char_poly(e.matrix, "t");
  return p;
}

Polynomial edge_matrix_polynomial(const RepQuiver& q) {
  Polynomial p({{"x", q.modulus}, {"y", q.modulus}});
  for (const auto& e : q.edges) p += matrix_poly(e.matrix, q.labels(), q.modulus);
  return p;
}

Polynomial path_char_polynomial(const RepQuiver&, const std::vector<PathRecord>& paths) {
  Polynomial p({{"s", 0}, {"t", 0}});
  for (const auto& path : paths) {
    auto c = char_poly_coefficients(path.product);
    const auto n = static_cast<std::int64_t>(c.size()) - 1;
    for (std::int64_t i = 0; i <= n; ++i) p.add_term({path.length(), n - i}, c[i]);
  }
  return p;
}

// x indexes the source label (column), y the target label (row)
Polynomial path_matrix_polynomial(const RepQuiver& q, const std::vector<PathRecord>& paths) {
  Polynomial p({{"x", q.modulus}, {"y", q.modulus}, {"z", 0}});
  const auto labels = q.labels();
  for (const auto& path : paths) {
    const IntMatrix& m = path.product;
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) p.add_term({labels[c], labels[r], path.length()}, m(r, c));
  }
  return p;
}

FourPolynomials four_polynomials(const RepQuiver& q, const PathLimits& limits) {
  auto paths = maximal_paths(q, limits);
  return {edge_char_polynomial(q), edge_matrix_polynomial(q), path_char_polynomial(q, paths),
          path_matrix_polynomial(q, paths), static_cast<int>(paths.size())};
}

}  // namespace qcq
