#include "qcq/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

namespace qcq {

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

int parse_int(std::string_view s, std::string_view what) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw DiagramError("bad label '" + std::string(s) + "' in " + std::string(what));
  return v;
}

}  // namespace

std::vector<std::string> validate(std::span<const Crossing> crossings) {
  std::vector<std::string> report;
  if (crossings.empty()) {
    report.emplace_back("no crossings");
    return report;
  }
  std::map<int, int> outs, ins;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const Crossing& c = crossings[i];
    if (c.sign != 1 && c.sign != -1)
      report.push_back("crossing " + std::to_string(i) + ": sign must be +1 or -1");
    for (int l : {c.under_in, c.under_out, c.over_in, c.over_out})
      if (l < 0) report.push_back("crossing " + std::to_string(i) + ": negative label");
    ++ins[c.under_in];
    ++ins[c.over_in];
    ++outs[c.under_out];
    ++outs[c.over_out];
  }
  std::map<int, bool> labels;
  for (auto& [l, _] : ins) labels[l] = true;
  for (auto& [l, _] : outs) labels[l] = true;
  bool broken = false;
  for (auto& [l, _] : labels) {
    int o = outs.count(l) ? outs[l] : 0;
    int n = ins.count(l) ? ins[l] : 0;
    if (o > 1) report.push_back("semiarc " + std::to_string(l) + " duplicated in outgoing slots");
    if (n > 1) report.push_back("semiarc " + std::to_string(l) + " duplicated in incoming slots");
    if (o != 1 || n != 1) broken = true;
  }
  if (broken) report.emplace_back("orientation successor not a permutation");
  return report;
}

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings) {
  auto report = validate(crossings);
  if (!report.empty()) throw DiagramError(join(report, "; "));

  std::map<int, int> relabel;
  std::vector<int> source;
  auto canon = [&](int& l) {
    auto [it, fresh] = relabel.emplace(l, static_cast<int>(relabel.size()));
    if (fresh) source.push_back(l);
    l = it->second;
  };
  for (Crossing& c : crossings) {
    canon(c.under_in);
    canon(c.under_out);
    canon(c.over_in);
    canon(c.over_out);
  }
  crossings_ = std::move(crossings);
  semiarc_count_ = static_cast<int>(relabel.size());
  source_labels_ = std::move(source);

  successor_.assign(semiarc_count_, -1);
  for (const Crossing& c : crossings_) {
    successor_[c.under_in] = c.under_out;
    successor_[c.over_in] = c.over_out;
  }
  component_of_.assign(semiarc_count_, -1);
  for (int a = 0; a < semiarc_count_; ++a) {
    if (component_of_[a] >= 0) continue;
    for (int b = a; component_of_[b] < 0; b = successor_[b]) component_of_[b] = component_count_;
    ++component_count_;
  }
}

LinkDiagram LinkDiagram::with_source_labels(std::vector<int> labels) const {
  if (static_cast<int>(labels.size()) != semiarc_count_)
    throw DiagramError("source label count mismatch");
  LinkDiagram d = *this;
  d.source_labels_ = std::move(labels);
  return d;
}

namespace {

struct RawTuple {
  char kind;  // 'p', 'm' or 0 for inferred
  int v[4];
};

std::vector<Crossing> orient_tuples(const std::vector<RawTuple>& tuples) {
  // over strand runs b->d (negative) or d->b (positive)
  const std::size_t n = tuples.size();
  std::vector<int> dir(n, 0);  // +1: d->b, -1: b->d
  std::map<int, int> ins, outs;
  auto commit = [&](std::size_t i, int s) {
    dir[i] = s;
    const auto& t = tuples[i].v;
    if (s > 0) {
      ++ins[t[3]];
      ++outs[t[1]];
    } else {
      ++ins[t[1]];
      ++outs[t[3]];
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    ++ins[tuples[i].v[0]];
    ++outs[tuples[i].v[2]];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (tuples[i].kind) commit(i, tuples[i].kind == 'p' ? 1 : -1);

  // a label already entering somewhere must leave here, and vice versa
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (dir[i]) continue;
      const auto& t = tuples[i].v;
      if (ins[t[1]] || outs[t[3]]) {
        commit(i, 1);
        changed = true;
      } else if (ins[t[3]] || outs[t[1]]) {
        commit(i, -1);
        changed = true;
      }
    }
  }
  // only strands never seen elsewhere remain; fall back to label continuity
  for (std::size_t i = 0; i < n; ++i) {
    if (dir[i]) continue;
    const auto& t = tuples[i].v;
    commit(i, (t[3] - t[1] == 1 || t[1] - t[3] > 1) ? -1 : 1);
  }

  std::vector<Crossing> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = tuples[i].v;
    if (dir[i] > 0)
      out.push_back({1, t[0], t[2], t[3], t[1]});
    else
      out.push_back({-1, t[0], t[2], t[1], t[3]});
  }
  return out;
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  std::string s(text);
  // strip comments
  std::string clean;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      clean += '\n';
    } else {
      clean += s[i];
    }
  }
  static const std::regex tuple_re(R"((X[pm]?)\s*\[([^\]]*)\])");
  std::vector<RawTuple> tuples;
  std::string rest;
  auto begin = std::sregex_iterator(clean.begin(), clean.end(), tuple_re);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    rest += clean.substr(last, m.position() - last);
    last = m.position() + m.length();
    std::string body = m[2].str();
    std::vector<std::string_view> parts;
    std::string_view bv(body);
    while (true) {
      auto comma = bv.find(',');
      parts.push_back(bv.substr(0, comma));
      if (comma == std::string_view::npos) break;
      bv.remove_prefix(comma + 1);
    }
    std::string where = "crossing " + std::to_string(tuples.size());
    if (parts.size() != 4)
      throw DiagramError(where + ": expected 4 labels, got " + std::to_string(parts.size()));
    RawTuple t{};
    std::string kind = m[1].str();
    t.kind = kind.size() == 2 ? kind[1] : 0;
    for (int k = 0; k < 4; ++k) t.v[k] = parse_int(parts[k], where);
    tuples.push_back(t);
  }
  rest += clean.substr(last);
  // allow an optional PD[...] wrapper and separators
  std::string leftover;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest.compare(i, 3, "PD[") == 0) {
      i += 2;
      continue;
    }
    char c = rest[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';' || c == ']') continue;
    leftover += c;
  }
  if (!leftover.empty()) throw DiagramError("unexpected text in PD code: '" + leftover + "'");
  if (tuples.empty()) throw DiagramError("no crossings");

  auto crossings = orient_tuples(tuples);
  auto report = validate(crossings);
  if (!report.empty()) throw DiagramError("inconsistent orientation cycle: " + join(report, "; "));
  return LinkDiagram(std::move(crossings));
}

LinkDiagram parse_gauss(std::string_view text) {
  struct Occ {
    bool over;
    int label;
    int sign;
  };
  std::vector<Occ> occs;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  for (skip(); i < text.size(); skip()) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (c != 'O' && c != 'U')
      throw DiagramError(std::string("expected O or U in Gauss code, got '") + text[i] + "'");
    ++i;
    skip();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw DiagramError("missing crossing label in Gauss code");
    int label = parse_int(text.substr(start, i - start), "Gauss code");
    skip();
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
      throw DiagramError("sign flag missing for crossing " + std::to_string(label));
    occs.push_back({c == 'O', label, text[i] == '+' ? 1 : -1});
    ++i;
  }
  if (occs.empty()) throw DiagramError("no crossings");

  std::map<int, std::vector<int>> where;
  std::vector<int> order;
  for (int p = 0; p < static_cast<int>(occs.size()); ++p) {
    auto& w = where[occs[p].label];
    if (w.empty()) order.push_back(occs[p].label);
    w.push_back(p);
  }
  const int n = static_cast<int>(occs.size());
  std::vector<Crossing> crossings;
  for (int label : order) {
    const auto& w = where[label];
    std::string name = "crossing " + std::to_string(label);
    if (w.size() != 2)
      throw DiagramError(name + " seen " + std::to_string(w.size()) + " times");
    const Occ& a = occs[w[0]];
    const Occ& b = occs[w[1]];
    if (a.over == b.over) throw DiagramError(name + ": needs one O and one U");
    if (a.sign != b.sign) throw DiagramError(name + ": sign flags disagree");
    int po = a.over ? w[0] : w[1];
    int pu = a.over ? w[1] : w[0];
    crossings.push_back({a.sign, (pu + n - 1) % n, pu, (po + n - 1) % n, po});
  }
  return LinkDiagram(std::move(crossings));
}

namespace {

// Builds a diagram from crossings labeled like `d`, keeping the parsed labels.
LinkDiagram derived(const LinkDiagram& d, std::vector<Crossing> crossings) {
  LinkDiagram out(std::move(crossings));
  std::vector<int> src;
  for (int old : out.source_labels())
    src.push_back(old < d.semiarc_count() ? d.source_labels()[old] : -1);
  return out.with_source_labels(std::move(src));
}

}  // namespace

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> out;
  for (const Crossing& c : d.crossings())
    out.push_back({-c.sign, c.over_in, c.over_out, c.under_in, c.under_out});
  return derived(d, std::move(out));
}

LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<int>& components) {
  std::vector<bool> flip(d.component_count(), false);
  for (int k : components) {
    if (k < 0 || k >= d.component_count())
      throw DiagramError("no component " + std::to_string(k));
    flip[k] = true;
  }
  const auto& comp = d.component_of();
  std::vector<Crossing> out;
  for (Crossing c : d.crossings()) {
    bool ru = flip[comp[c.under_in]];
    bool ro = flip[comp[c.over_in]];
    if (ru) std::swap(c.under_in, c.under_out);
    if (ro) std::swap(c.over_in, c.over_out);
    if (ru != ro) c.sign = -c.sign;
    out.push_back(c);
  }
  return derived(d, std::move(out));
}

int component_of_source_label(const LinkDiagram& d, int label) {
  const auto& src = d.source_labels();
  for (int a = 0; a < d.semiarc_count(); ++a)
    if (src[a] == label) return d.component_of()[a];
  throw DiagramError("label " + std::to_string(label) + " not in diagram");
}

std::string to_pd(const LinkDiagram& d) {
  std::ostringstream os;
  for (const Crossing& c : d.crossings()) {
    if (c.sign > 0)
      os << "Xp[" << c.under_in + 1 << ',' << c.over_out + 1 << ',' << c.under_out + 1 << ','
         << c.over_in + 1 << "]\n";
    else
      os << "Xm[" << c.under_in + 1 << ',' << c.over_in + 1 << ',' << c.under_out + 1 << ','
         << c.over_out + 1 << "]\n";
  }
  return os.str();
}

namespace {

// Rewires the crossing slot where `arc` enters so that `replacement` enters instead.
void redirect_entry(std::vector<Crossing>& cs, int arc, int replacement) {
  for (Crossing& c : cs) {
    if (c.under_in == arc) {
      c.under_in = replacement;
      return;
    }
    if (c.over_in == arc) {
      c.over_in = replacement;
      return;
    }
  }
  throw DiagramError("semiarc " + std::to_string(arc) + " has no entry slot");
}

void check_arc(const LinkDiagram& d, int arc) {
  if (arc < 0 || arc >= d.semiarc_count())
    throw DiagramError("no semiarc " + std::to_string(arc));
}

}  // namespace

LinkDiagram add_kink(const LinkDiagram& d, int arc, int sign, bool over_first) {
  check_arc(d, arc);
  if (sign != 1 && sign != -1) throw DiagramError("kink sign must be +1 or -1");
  std::vector<Crossing> cs = d.crossings();
  const int loop = d.semiarc_count();
  const int tail = loop + 1;
  redirect_entry(cs, arc, tail);
  if (over_first)
    cs.push_back({sign, loop, tail, arc, loop});
  else
    cs.push_back({sign, arc, loop, loop, tail});
  return derived(d, std::move(cs));
}

LinkDiagram add_bigon(const LinkDiagram& d, int over_arc, int under_arc, bool parallel,
                      int first_sign) {
  check_arc(d, over_arc);
  check_arc(d, under_arc);
  if (over_arc == under_arc) throw DiagramError("bigon needs two distinct semiarcs");
  if (first_sign != 1 && first_sign != -1) throw DiagramError("bigon sign must be +1 or -1");
  std::vector<Crossing> cs = d.crossings();
  const int a1 = d.semiarc_count(), a2 = a1 + 1, b1 = a1 + 2, b2 = a1 + 3;
  redirect_entry(cs, over_arc, a2);
  redirect_entry(cs, under_arc, b2);
  if (parallel) {
    cs.push_back({first_sign, under_arc, b1, over_arc, a1});
    cs.push_back({-first_sign, b1, b2, a1, a2});
  } else {
    cs.push_back({first_sign, b1, b2, over_arc, a1});
    cs.push_back({-first_sign, under_arc, b1, a1, a2});
  }
  return derived(d, std::move(cs));
}

}  // namespace qcq
