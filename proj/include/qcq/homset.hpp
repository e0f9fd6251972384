#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qcq/algebra.hpp"
#include "qcq/diagram.hpp"

namespace qcq {

// Ordered basis of non-degenerate pairs (x,y), x != y, lexicographic.
class PairBasis {
 public:
  explicit PairBasis(int n) : n_(n) {}
  int order() const { return n_; }
  int size() const { return n_ * (n_ - 1); }
  int index(int x, int y) const { return (x - 1) * (n_ - 1) + (y - 1) - (y > x ? 1 : 0); }
  std::pair<int, int> pair(int i) const {
    int x = i / (n_ - 1) + 1;
    int y = i % (n_ - 1) + 1;
    if (y >= x) ++y;
    return {x, y};
  }

 private:
  int n_;
};

struct Coloring {
  std::vector<int> colors;  // colors[semiarc], elements 1..n

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

struct ChainVector {
  std::vector<std::int64_t> coords;  // over PairBasis

  friend bool operator==(const ChainVector&, const ChainVector&) = default;
  friend auto operator<=>(const ChainVector&, const ChainVector&) = default;
};

// Coloring convention. Every crossing is read in a frame with inputs
// (fu, fo) and outputs (fu ⊴ fo, fo ⊳̄ fu):
//   sign -1: inputs are (under_in, over_out)
//   sign +1: inputs are (under_out, over_in)
// and contributes -sign * (fu, fo) to the chain vector.
// For quandles the over strand keeps its color, so only the under side matters;
// swapping the two under slots mirrors every result.
struct CrossingFrame {
  int in_under, in_over, out_under, out_over;
  int weight;
};
CrossingFrame crossing_frame(const Crossing& c);

bool is_coloring(const Coloring& c, const LinkDiagram& d, const Biquandle& x);
std::vector<Coloring> colorings(const LinkDiagram& d, const Biquandle& x);
std::size_t counting_invariant(const LinkDiagram& d, const Biquandle& x);

ChainVector chain_vector(const Coloring& c, const LinkDiagram& d, const Biquandle& x);

Coloring push_forward(const Coloring& c, const EndoMap& sigma);
// induced map on non-degenerate pairs; degenerate images vanish
ChainVector push_forward(const ChainVector& v, const EndoMap& sigma);

}  // namespace qcq
