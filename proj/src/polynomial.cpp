#include "qcq/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qcq {

Polynomial Polynomial::constant(std::vector<Variable> vars, std::int64_t c) {
  Polynomial p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

Polynomial Polynomial::monomial(std::vector<Variable> vars, Exponents e, std::int64_t c) {
  Polynomial p(std::move(vars));
  p.add_term(std::move(e), c);
  return p;
}

std::int64_t Polynomial::coefficient(const Exponents& e) const {
  Exponents r = e;
  for (std::size_t i = 0; i < r.size() && i < vars_.size(); ++i) r[i] = reduce_mod(r[i], vars_[i].modulus);
  auto it = terms_.find(r);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Polynomial::coefficient_sum() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

int Polynomial::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  return -1;
}

void Polynomial::add_term(Exponents e, std::int64_t c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent tuple length mismatch");
  if (c == 0) return;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = reduce_mod(e[i], vars_[i].modulus);
  auto [it, fresh] = terms_.emplace(std::move(e), c);
  if (!fresh) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_vars(const Polynomial& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials over different variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, checked_sub(0, c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_vars(b);
  Polynomial p(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
      p.add_term(std::move(e), checked_mul(ca, cb));
    }
  return p;
}

Polynomial Polynomial::scaled(std::int64_t c) const {
  Polynomial p(vars_);
  for (const auto& [e, v] : terms_) p.add_term(e, checked_mul(v, c));
  return p;
}

namespace {

std::string render_term(const std::vector<Variable>& vars, const Polynomial::Exponents& e,
                        std::int64_t c, bool first) {
  std::string mono;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    mono += vars[i].name;
    if (e[i] != 1) mono += "^" + std::to_string(e[i]);
  }
  std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
  std::string s;
  if (first)
    s = c < 0 ? "-" : "";
  else
    s = c < 0 ? " - " : " + ";
  if (mag != 1 || mono.empty()) s += std::to_string(mag);
  return s + mono;
}

}  // namespace

std::string Polynomial::to_string(bool ascending) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  auto emit = [&](const auto& kv) {
    out += render_term(vars_, kv.first, kv.second, first);
    first = false;
  };
  if (ascending)
    for (auto it = terms_.begin(); it != terms_.end(); ++it) emit(*it);
  else
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) emit(*it);
  return out;
}

Polynomial parse_polynomial(std::string_view text, const std::vector<Variable>& vars) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s += ch;
  Polynomial p(vars);
  if (s == "0") return p;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected integer");
    return std::stoll(s.substr(start, i - start));
  };
  if (s.empty()) fail("empty");
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected + or -");
    }
    std::int64_t coef = 1;
    bool has_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = read_int();
      has_coef = true;
    }
    Polynomial::Exponents e(vars.size(), 0);
    bool has_var = false;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      std::size_t start = i;
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])) &&
             std::none_of(vars.begin(), vars.end(),
                          [&](const Variable& v) { return v.name == s.substr(start, i - start); }))
        ++i;
      std::string name = s.substr(start, i - start);
      auto it = std::find_if(vars.begin(), vars.end(), [&](const Variable& v) { return v.name == name; });
      if (it == vars.end()) fail("unknown variable '" + name + "'");
      std::int64_t ex = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        ex = read_int();
      }
      e[it - vars.begin()] += ex;
      has_var = true;
    }
    if (!has_coef && !has_var) fail("empty term");
    p.add_term(std::move(e), sign * coef);
  }
  return p;
}

std::vector<std::int64_t> char_poly_coefficients(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("char_poly needs a square matrix");
  const int n = a.rows();
  std::vector<std::int64_t> p{1};
  if (n == 0) return p;
  p.push_back(-a(0, 0));
  for (int k = 1; k < n; ++k) {
    // first column of the Toeplitz factor: 1, -a_kk, -R C, -R A C, ...
    std::vector<std::int64_t> q(k + 2, 0);
    q[0] = 1;
    q[1] = -a(k, k);
    std::vector<std::int64_t> w(k);
    for (int i = 0; i < k; ++i) w[i] = a(i, k);
    for (int j = 0; j < k; ++j) {
      std::int64_t rw = 0;
      for (int i = 0; i < k; ++i) rw = checked_add(rw, checked_mul(a(k, i), w[i]));
      q[j + 2] = checked_sub(0, rw);
      std::vector<std::int64_t> nw(k, 0);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) nw[r] = checked_add(nw[r], checked_mul(a(r, c), w[c]));
      w = std::move(nw);
    }
    std::vector<std::int64_t> np(k + 2, 0);
    for (int r = 0; r < k + 2; ++r)
      for (int c = 0; c <= std::min(r, k); ++c)
        np[r] = checked_add(np[r], checked_mul(q[r - c], p[c]));
    p = std::move(np);
  }
  return p;
}

Polynomial char_poly(const IntMatrix& m, const std::string& var) {
  auto coeffs = char_poly_coefficients(m);
  Polynomial p({{var, 0}});
  const auto n = static_cast<std::int64_t>(coeffs.size()) - 1;
  for (std::int64_t i = 0; i <= n; ++i) p.add_term({n - i}, coeffs[i]);
  return p;
}

Polynomial matrix_poly(const IntMatrix& m, const std::vector<std::int64_t>& labels,
                       std::int64_t modulus) {
  if (!m.square() || static_cast<int>(labels.size()) != m.rows())
    throw std::invalid_argument("matrix_poly: label count must match a square matrix");
  Polynomial p({{"x", modulus}, {"y", modulus}});
  for (int j = 0; j < m.rows(); ++j)
    for (int k = 0; k < m.cols(); ++k) p.add_term({labels[j], labels[k]}, m(j, k));
  return p;
}

IntMatrix matrix_from_poly(const Polynomial& p, const std::vector<std::int64_t>& labels) {
  const int n = static_cast<int>(labels.size());
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = p.coefficient({labels[j], labels[k]});
  return m;
}

Polynomial specialize(const Polynomial& p, const Specialization& spec) {
  const auto& vars = p.variables();
  // names absent from p are ignored, so p without s or z passes through
  int ix = p.index_of("x"), iy = p.index_of("y");
  if (spec.merge_xy && (ix < 0 || iy < 0))
    throw std::invalid_argument("merging xy needs both x and y");

  std::vector<Variable> out_vars;
  std::vector<int> keep;
  if (spec.merge_xy) out_vars.push_back({"q", vars[ix].modulus});
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (std::find(spec.set_to_one.begin(), spec.set_to_one.end(), vars[i].name) != spec.set_to_one.end())
      continue;
    keep.push_back(static_cast<int>(i));
    out_vars.push_back(vars[i]);
  }
  Polynomial out(out_vars);
  for (const auto& [e, c] : p.terms()) {
    Polynomial::Exponents f;
    Polynomial::Exponents g = e;
    if (spec.merge_xy) {
      std::int64_t k = std::min(g[ix], g[iy]);
      g[ix] -= k;
      g[iy] -= k;
      f.push_back(k);
    }
    for (int i : keep) f.push_back(g[i]);
    out.add_term(std::move(f), c);
  }
  return out;
}

bool same_polynomial(const Polynomial& a, const Polynomial& b) {
  auto named = [](const Polynomial& p) {
    std::map<std::map<std::string, std::int64_t>, std::int64_t> out;
    for (const auto& [e, c] : p.terms()) {
      std::map<std::string, std::int64_t> key;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) key[p.variables()[i].name] = e[i];
      out[key] += c;
    }
    return out;
  };
  return named(a) == named(b);
}

}  // namespace qcq
