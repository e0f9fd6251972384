#include "qcq/homset.hpp"

#include <algorithm>

namespace qcq {

CrossingFrame crossing_frame(const Crossing& c) {
  if (c.sign < 0) return {c.under_in, c.over_out, c.under_out, c.over_in, 1};
  return {c.under_out, c.over_in, c.under_in, c.over_out, -1};
}

bool is_coloring(const Coloring& c, const LinkDiagram& d, const Biquandle& x) {
  if (static_cast<int>(c.colors.size()) != d.semiarc_count()) return false;
  for (int v : c.colors)
    if (v < 1 || v > x.order()) return false;
  for (const Crossing& cr : d.crossings()) {
    CrossingFrame f = crossing_frame(cr);
    int u = c.colors[f.in_under], o = c.colors[f.in_over];
    if (c.colors[f.out_under] != x.under(u, o) || c.colors[f.out_over] != x.over(o, u)) return false;
  }
  return true;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const LinkDiagram& d, const Biquandle& x) : x_(x), n_(x.order()) {
    for (const Crossing& c : d.crossings()) frames_.push_back(crossing_frame(c));
    touching_.resize(d.semiarc_count());
    for (int i = 0; i < static_cast<int>(frames_.size()); ++i) {
      const auto& f = frames_[i];
      for (int a : {f.in_under, f.in_over, f.out_under, f.out_over}) touching_[a].push_back(i);
    }
    colors_.assign(d.semiarc_count(), 0);
    // inverse of S(u, o) = (u ⊴ o, o ⊳̄ u) and of the single translations
    s_inv_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), {0, 0});
    beta_inv_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0);
    alpha_inv_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0);
    for (int u = 1; u <= n_; ++u)
      for (int o = 1; o <= n_; ++o) {
        s_inv_[key(x.under(u, o), x.over(o, u))] = {u, o};
        beta_inv_[key(x.under(u, o), o)] = u;
        alpha_inv_[key(x.over(o, u), u)] = o;
      }
  }

  std::vector<Coloring> run() {
    search();
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  std::size_t key(int a, int b) const { return static_cast<std::size_t>(a) * (n_ + 1) + b; }

  bool set(int arc, int v) {
    if (v == 0) return false;
    if (colors_[arc]) return colors_[arc] == v;
    colors_[arc] = v;
    trail_.push_back(arc);
    queue_.push_back(arc);
    return true;
  }

  bool settle(const CrossingFrame& f) {
    int& iu = colors_[f.in_under];
    int& io = colors_[f.in_over];
    int ou = colors_[f.out_under];
    int oo = colors_[f.out_over];
    if (iu && io) return set(f.out_under, x_.under(iu, io)) && set(f.out_over, x_.over(io, iu));
    if (ou && oo) {
      auto [u, o] = s_inv_[key(ou, oo)];
      return set(f.in_under, u) && set(f.in_over, o);
    }
    if (io && ou) return set(f.in_under, beta_inv_[key(ou, io)]);
    if (iu && oo) return set(f.in_over, alpha_inv_[key(oo, iu)]);
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      int arc = queue_.back();
      queue_.pop_back();
      for (int ci : touching_[arc])
        if (!settle(frames_[ci])) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      colors_[trail_.back()] = 0;
      trail_.pop_back();
    }
    queue_.clear();
  }

  void search() {
    auto it = std::find(colors_.begin(), colors_.end(), 0);
    if (it == colors_.end()) {
      out_.push_back({colors_});
      return;
    }
    const int arc = static_cast<int>(it - colors_.begin());
    for (int v = 1; v <= n_; ++v) {
      std::size_t mark = trail_.size();
      if (set(arc, v) && propagate()) search();
      undo(mark);
    }
  }

  const Biquandle& x_;
  int n_;
  std::vector<CrossingFrame> frames_;
  std::vector<std::vector<int>> touching_;
  std::vector<int> colors_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  std::vector<std::pair<int, int>> s_inv_;
  std::vector<int> beta_inv_;
  std::vector<int> alpha_inv_;
  std::vector<Coloring> out_;
};

}  // namespace

std::vector<Coloring> colorings(const LinkDiagram& d, const Biquandle& x) {
  return ColoringSearch(d, x).run();
}

std::size_t counting_invariant(const LinkDiagram& d, const Biquandle& x) {
  return colorings(d, x).size();
}

ChainVector chain_vector(const Coloring& c, const LinkDiagram& d, const Biquandle& x) {
  PairBasis basis(x.order());
  ChainVector v{std::vector<std::int64_t>(basis.size(), 0)};
  for (const Crossing& cr : d.crossings()) {
    CrossingFrame f = crossing_frame(cr);
    int a = c.colors[f.in_under], b = c.colors[f.in_over];
    if (a != b) v.coords[basis.index(a, b)] += f.weight;
  }
  return v;
}

Coloring push_forward(const Coloring& c, const EndoMap& sigma) {
  Coloring out;
  out.colors.reserve(c.colors.size());
  for (int v : c.colors) out.colors.push_back(sigma(v));
  return out;
}

ChainVector push_forward(const ChainVector& v, const EndoMap& sigma) {
  const int n = static_cast<int>(sigma.images.size());
  PairBasis basis(n);
  ChainVector out{std::vector<std::int64_t>(basis.size(), 0)};
  for (int i = 0; i < basis.size(); ++i) {
    if (!v.coords[i]) continue;
    auto [x, y] = basis.pair(i);
    int a = sigma(x), b = sigma(y);
    if (a != b) out.coords[basis.index(a, b)] += v.coords[i];
  }
  return out;
}

}  // namespace qcq
