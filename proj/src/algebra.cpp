#include "qcq/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qcq {

namespace {

std::vector<int> flatten(const Table& t, int n, const char* name) {
  if (static_cast<int>(t.size()) != n)
    throw AlgebraError(std::string(name) + " table must have " + std::to_string(n) + " rows");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(t[r].size()) != n)
      throw AlgebraError(std::string(name) + " table row " + std::to_string(r + 1) +
                         " must have " + std::to_string(n) + " entries");
    for (int v : t[r]) {
      if (v < 1 || v > n)
        throw AlgebraError(std::string(name) + " table entry " + std::to_string(v) +
                           " out of range 1.." + std::to_string(n));
      out.push_back(v);
    }
  }
  return out;
}

// residue r in Z_m written as 1..m
int elem(long long r, int m) {
  long long v = ((r % m) + m) % m;
  return v == 0 ? m : static_cast<int>(v);
}

std::string tup(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

Biquandle::Biquandle(Table under, Table over) {
  n_ = static_cast<int>(under.size());
  if (n_ == 0) throw AlgebraError("empty operation table");
  under_ = flatten(under, n_, "under");
  over_ = flatten(over, n_, "over");
}

Biquandle Biquandle::quandle(Table op) {
  const int n = static_cast<int>(op.size());
  Table over(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) std::fill(over[x].begin(), over[x].end(), x + 1);
  return Biquandle(std::move(op), std::move(over));
}

bool Biquandle::is_quandle() const {
  for (int x = 1; x <= n_; ++x)
    for (int y = 1; y <= n_; ++y)
      if (over(x, y) != x) return false;
  return true;
}

bool Biquandle::is_kei() const {
  if (!is_quandle()) return false;
  for (int x = 1; x <= n_; ++x)
    for (int y = 1; y <= n_; ++y)
      if (under(under(x, y), y) != x) return false;
  return true;
}

int Biquandle::under_inverse(int x, int y) const {
  for (int z = 1; z <= n_; ++z)
    if (under(z, y) == x) return z;
  return 0;
}

Table Biquandle::under_table() const {
  Table t(n_, std::vector<int>(n_));
  for (int x = 1; x <= n_; ++x)
    for (int y = 1; y <= n_; ++y) t[x - 1][y - 1] = under(x, y);
  return t;
}

Table Biquandle::over_table() const {
  Table t(n_, std::vector<int>(n_));
  for (int x = 1; x <= n_; ++x)
    for (int y = 1; y <= n_; ++y) t[x - 1][y - 1] = over(x, y);
  return t;
}

std::vector<std::string> check_axioms(const Biquandle& b) {
  std::vector<std::string> report;
  const int n = b.order();
  for (int x = 1; x <= n; ++x)
    if (b.under(x, x) != b.over(x, x))
      report.push_back("axiom (i) fails at x=" + std::to_string(x));

  for (int y = 1; y <= n; ++y) {
    std::set<int> a, be;
    for (int x = 1; x <= n; ++x) {
      a.insert(b.over(x, y));
      be.insert(b.under(x, y));
    }
    if (static_cast<int>(a.size()) != n)
      report.push_back("axiom (ii) fails: alpha_" + std::to_string(y) + " not bijective");
    if (static_cast<int>(be.size()) != n)
      report.push_back("axiom (ii) fails: beta_" + std::to_string(y) + " not bijective");
  }
  std::set<std::pair<int, int>> images;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) images.emplace(b.over(y, x), b.under(x, y));
  if (static_cast<int>(images.size()) != n * n)
    report.emplace_back("axiom (ii) fails: S not bijective");

  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z) {
        auto u = [&](int p, int q) { return b.under(p, q); };
        auto o = [&](int p, int q) { return b.over(p, q); };
        if (u(u(x, y), u(z, y)) != u(u(x, z), o(y, z)))
          report.push_back("axiom (iii) first exchange law fails at " + tup({x, y, z}));
        if (o(u(x, y), u(z, y)) != u(o(x, z), o(y, z)))
          report.push_back("axiom (iii) second exchange law fails at " + tup({x, y, z}));
        if (o(o(x, y), o(z, y)) != o(o(x, z), u(y, z)))
          report.push_back("axiom (iii) third exchange law fails at " + tup({x, y, z}));
      }
  return report;
}

Biquandle trivial_quandle(int m) {
  if (m < 1) throw AlgebraError("order must be positive");
  Table t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x) std::fill(t[x].begin(), t[x].end(), x + 1);
  return Biquandle::quandle(std::move(t));
}

Biquandle core_cyclic(int m) {
  if (m < 1) throw AlgebraError("core_cyclic needs m >= 1");
  Table t(m, std::vector<int>(m));
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y) t[x - 1][y - 1] = elem(2LL * y - x, m);
  return Biquandle::quandle(std::move(t));
}

Biquandle alexander_cyclic(int m, int t) {
  if (m < 1) throw AlgebraError("alexander_cyclic needs m >= 1");
  if (std::gcd(((t % m) + m) % m, m) != 1)
    throw AlgebraError(std::to_string(t) + " is not a unit mod " + std::to_string(m));
  Table tab(m, std::vector<int>(m));
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      tab[x - 1][y - 1] = elem(static_cast<long long>(t) * x + (1LL - t) * y, m);
  return Biquandle::quandle(std::move(tab));
}

Biquandle alexander_biquandle(int m, int t, int s) {
  if (m < 1) throw AlgebraError("alexander_biquandle needs m >= 1");
  for (int u : {t, s})
    if (std::gcd(((u % m) + m) % m, m) != 1)
      throw AlgebraError(std::to_string(u) + " is not a unit mod " + std::to_string(m));
  Table under(m, std::vector<int>(m)), over(m, std::vector<int>(m));
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y) {
      under[x - 1][y - 1] = elem(static_cast<long long>(t) * x + static_cast<long long>(s - t) * y, m);
      over[x - 1][y - 1] = elem(static_cast<long long>(s) * x, m);
    }
  return Biquandle(std::move(under), std::move(over));
}

Biquandle constant_action_biquandle_z2() {
  Table t{{2, 2}, {1, 1}};
  return Biquandle(t, t);
}

Table cyclic_group_table(int m) {
  if (m < 1) throw AlgebraError("group order must be positive");
  Table t(m, std::vector<int>(m));
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y) t[x - 1][y - 1] = elem(x + y, m);
  return t;
}

Table symmetric_group_table(int k) {
  if (k < 1 || k > 5) throw AlgebraError("symmetric group degree must be in 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin()) + 1;
    }
  return t;
}

Biquandle conjugation_quandle(const Table& group, int n) {
  const int g = static_cast<int>(group.size());
  Biquandle check(group, group);  // shape and range validation
  (void)check;
  int e = 0;
  for (int a = 1; a <= g && !e; ++a) {
    bool ok = true;
    for (int b = 1; b <= g; ++b) ok = ok && group[a - 1][b - 1] == b && group[b - 1][a - 1] == b;
    if (ok) e = a;
  }
  if (!e) throw AlgebraError("group table has no identity");
  std::vector<int> inv(g + 1, 0);
  for (int a = 1; a <= g; ++a)
    for (int b = 1; b <= g; ++b)
      if (group[a - 1][b - 1] == e) inv[a] = b;
  auto mul = [&](int a, int b) { return group[a - 1][b - 1]; };
  auto power = [&](int a, int k) {
    int r = e;
    int base = k >= 0 ? a : inv[a];
    for (int i = 0; i < std::abs(k); ++i) r = mul(r, base);
    return r;
  };
  Table t(g, std::vector<int>(g));
  for (int x = 1; x <= g; ++x)
    for (int y = 1; y <= g; ++y) t[x - 1][y - 1] = mul(mul(power(y, -n), x), power(y, n));
  return Biquandle::quandle(std::move(t));
}

bool is_homomorphism(const EndoMap& f, const Biquandle& from, const Biquandle& to) {
  if (static_cast<int>(f.images.size()) != from.order()) return false;
  for (int v : f.images)
    if (v < 1 || v > to.order()) return false;
  for (int x = 1; x <= from.order(); ++x)
    for (int y = 1; y <= from.order(); ++y) {
      if (f(from.under(x, y)) != to.under(f(x), f(y))) return false;
      if (f(from.over(x, y)) != to.over(f(x), f(y))) return false;
    }
  return true;
}

namespace {

// Fills forced images; false on contradiction.
bool propagate(std::vector<int>& f, const Biquandle& from, const Biquandle& to) {
  const int n = from.order();
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 1; x <= n; ++x) {
      if (!f[x]) continue;
      for (int y = 1; y <= n; ++y) {
        if (!f[y]) continue;
        const int pairs[2][2] = {{from.under(x, y), to.under(f[x], f[y])},
                                 {from.over(x, y), to.over(f[x], f[y])}};
        for (const auto& pr : pairs) {
          int& slot = f[pr[0]];
          if (!slot) {
            slot = pr[1];
            changed = true;
          } else if (slot != pr[1]) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

void search(std::vector<int>& f, const Biquandle& from, const Biquandle& to,
            std::vector<EndoMap>& out) {
  const int n = from.order();
  int x = 1;
  while (x <= n && f[x]) ++x;
  if (x > n) {
    out.push_back({std::vector<int>(f.begin() + 1, f.end())});
    return;
  }
  for (int v = 1; v <= to.order(); ++v) {
    std::vector<int> g = f;
    g[x] = v;
    if (propagate(g, from, to)) search(g, from, to, out);
  }
}

}  // namespace

std::vector<EndoMap> homomorphisms(const Biquandle& from, const Biquandle& to) {
  std::vector<EndoMap> out;
  std::vector<int> f(from.order() + 1, 0);
  search(f, from, to, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EndoMap> endomorphisms(const Biquandle& x) { return homomorphisms(x, x); }

EndoMap identity_map(int n) {
  EndoMap m;
  m.images.resize(n);
  std::iota(m.images.begin(), m.images.end(), 1);
  return m;
}

EndoMap compose(const EndoMap& f, const EndoMap& g) {
  EndoMap h;
  for (int v : g.images) h.images.push_back(f(v));
  return h;
}

Biquandle biquandle_from_json(const nlohmann::json& j) {
  try {
    Table under = j.at("under").get<Table>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(under.size()))
      throw AlgebraError("field n disagrees with the under table");
    if (j.contains("over") && !j.at("over").is_null())
      return Biquandle(std::move(under), j.at("over").get<Table>());
    return Biquandle::quandle(std::move(under));
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(std::string("bad biquandle JSON: ") + e.what());
  }
}

nlohmann::json to_json(const Biquandle& b) {
  nlohmann::json j{{"n", b.order()}, {"under", b.under_table()}};
  if (!b.is_quandle()) j["over"] = b.over_table();
  return j;
}

Biquandle builtin_biquandle(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw AlgebraError("builtin '" + spec + "' is missing arguments");
    try {
      return std::stoi(parts[i]);
    } catch (const std::exception&) {
      throw AlgebraError("builtin '" + spec + "': bad integer '" + parts[i] + "'");
    }
  };
  const std::string& name = parts.empty() ? spec : parts[0];
  if (name == "core") return core_cyclic(arg(1));
  if (name == "alexander") return alexander_cyclic(arg(1), arg(2));
  if (name == "alexander-biquandle") return alexander_biquandle(arg(1), arg(2), arg(3));
  if (name == "trivial") return trivial_quandle(arg(1));
  if (name == "z2-biquandle") return constant_action_biquandle_z2();
  if (name == "conjugation-cyclic") return conjugation_quandle(cyclic_group_table(arg(1)));
  if (name == "conjugation-symmetric") return conjugation_quandle(symmetric_group_table(arg(1)));
  if (name == "transposition3") return Biquandle::quandle({{1, 1, 2}, {2, 2, 1}, {3, 3, 3}});
  throw AlgebraError("unknown builtin biquandle '" + spec + "'");
}

std::string format_table(const Biquandle& b) {
  std::ostringstream os;
  auto dump = [&](const char* title, const Table& t) {
    os << title << '\n';
    for (const auto& row : t) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
      os << '\n';
    }
  };
  dump("under", b.under_table());
  if (!b.is_quandle()) dump("over", b.over_table());
  return os.str();
}

}  // namespace qcq
