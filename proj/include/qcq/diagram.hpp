#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcq {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Signs follow the right-hand rule. Labels index semiarcs.
struct Crossing {
  int sign = 1;
  int under_in = 0;
  int under_out = 0;
  int over_in = 0;
  int over_out = 0;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Violations found in a raw crossing list; empty when it forms a valid diagram.
std::vector<std::string> validate(std::span<const Crossing> crossings);

class LinkDiagram {
 public:
  // Validates and relabels semiarcs to 0..n-1 in first-appearance order
  // (crossing order, slots under_in, under_out, over_in, over_out).
  explicit LinkDiagram(std::vector<Crossing> crossings);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int semiarc_count() const { return semiarc_count_; }
  int component_count() const { return component_count_; }

  // next[a] = semiarc following a along the orientation
  const std::vector<int>& successor() const { return successor_; }
  // components numbered by their smallest semiarc label
  const std::vector<int>& component_of() const { return component_of_; }
  // label each semiarc carried in the text it was parsed from (identity if none)
  const std::vector<int>& source_labels() const { return source_labels_; }

  LinkDiagram with_source_labels(std::vector<int> labels) const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_;
  }

 private:
  std::vector<Crossing> crossings_;
  int semiarc_count_ = 0;
  int component_count_ = 0;
  std::vector<int> successor_;
  std::vector<int> component_of_;
  std::vector<int> source_labels_;
};

// One crossing per X-tuple; Xp/Xm carry the sign, plain X infers the
// over-strand direction from label continuity.
LinkDiagram parse_pd(std::string_view text);

// Signed oriented Gauss code of a one-component virtual knot, e.g. "O1-O2-U1-U2-".
LinkDiagram parse_gauss(std::string_view text);

LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<int>& components);

// Component holding the semiarc that carried `label` in the parsed text.
int component_of_source_label(const LinkDiagram& d, int label);

// Canonical Xp/Xm text; parse_pd(to_pd(d)) == d.
std::string to_pd(const LinkDiagram& d);

// Reidemeister I: a kink inserted on semiarc `arc`.
LinkDiagram add_kink(const LinkDiagram& d, int arc, int sign, bool over_first);

// Reidemeister II: `over_arc` pushed across `under_arc`, adding two crossings of
// signs first_sign, -first_sign in order along the over strand. The strands
// run side by side when `parallel`, head to head otherwise. Non-adjacent arcs
// pick up virtual crossings, which the model does not record.
LinkDiagram add_bigon(const LinkDiagram& d, int over_arc, int under_arc, bool parallel,
                      int first_sign);

}  // namespace qcq
