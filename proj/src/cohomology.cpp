#include "qcq/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace qcq {

CoeffGroup CoeffGroup::cyclic(std::int64_t m) {
  if (m < 2) throw CohomologyError("cyclic coefficient group needs modulus >= 2");
  return CoeffGroup(m);
}

CoeffGroup CoeffGroup::parse(const std::string& spec) {
  if (spec == "Z") return integers();
  std::string digits;
  if (spec.size() > 1 && spec[0] == 'Z') {
    digits = spec.substr(1);
    if (!digits.empty() && (digits[0] == '_' || digits[0] == '/')) digits.erase(0, 1);
  }
  try {
    std::size_t used = 0;
    long long m = std::stoll(digits, &used);
    if (used == digits.size()) return cyclic(m);
  } catch (const std::logic_error&) {
  }
  throw CohomologyError("bad coefficient group '" + spec + "' (expected Z or Z<m>)");
}

std::string CoeffGroup::name() const { return m_ ? "Z" + std::to_string(m_) : "Z"; }

std::vector<std::array<int, 3>> triple_basis(int n) {
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        if (a != b && b != c) out.push_back({a, b, c});
  return out;
}

BoundaryMatrices boundary_matrices(const Biquandle& x) {
  const int n = x.order();
  PairBasis pairs(n);
  const auto triples = triple_basis(n);
  BoundaryMatrices m{IntMatrix(n, pairs.size()), IntMatrix(pairs.size(), static_cast<int>(triples.size()))};

  auto u = [&](int p, int q) { return x.under(p, q); };
  auto o = [&](int p, int q) { return x.over(p, q); };

  for (int i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs.pair(i);
    // k = 1: -[(b) - (b ⊳̄ a)];  k = 2: +[(a) - (a ⊴ b)]
    m.d2(b - 1, i) -= 1;
    m.d2(o(b, a) - 1, i) += 1;
    m.d2(a - 1, i) += 1;
    m.d2(u(a, b) - 1, i) -= 1;
  }
  for (int j = 0; j < static_cast<int>(triples.size()); ++j) {
    auto [a, b, c] = triples[j];
    auto put = [&](int p, int q, int coef) {
      if (p != q) m.d3(pairs.index(p, q), j) += coef;
    };
    put(b, c, -1);
    put(o(b, a), o(c, a), 1);
    put(a, c, 1);
    put(u(a, b), o(c, b), -1);
    put(a, b, -1);
    put(u(a, c), u(b, c), 1);
  }
  return m;
}

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Lifts the cocycle group to the lattice {phi in Z^P : d3^T phi = 0 mod m}
// with an explicit basis, and presents H^2 as a quotient of that lattice.
class H2Presentation {
 public:
  H2Presentation(const Biquandle& x, const CoeffGroup& a) : m_(a.modulus()) {
    const BoundaryMatrices bm = boundary_matrices(x);
    p_ = bm.d3.rows();
    d2t_ = bm.d2.transpose();
    d3t_ = bm.d3.transpose();

    SmithForm sf = smith_normal_form(d3t_);
    v_ = sf.v;
    v_inv_ = sf.v_inv;
    scale_.assign(p_, 1);
    for (int i = 0; i < p_; ++i) {
      std::int64_t d = sf.diag(i);
      if (d == 0) continue;
      scale_[i] = m_ ? m_ / gcd64(d, m_) : 0;
    }
    for (int i = 0; i < p_; ++i)
      if (scale_[i]) kept_.push_back(i);

    // relations: coboundaries, plus m Z^P when modular
    std::vector<std::vector<std::int64_t>> rel_cols;
    for (int j = 0; j < d2t_.cols(); ++j) rel_cols.push_back(d2t_.column(j));
    if (m_)
      for (int j = 0; j < p_; ++j) {
        std::vector<std::int64_t> e(p_, 0);
        e[j] = m_;
        rel_cols.push_back(std::move(e));
      }
    relation_rows_ = IntMatrix(static_cast<int>(rel_cols.size()), p_);
    for (int r = 0; r < static_cast<int>(rel_cols.size()); ++r)
      for (int c = 0; c < p_; ++c) relation_rows_(r, c) = rel_cols[r][c];

    const int k = rank();
    rel_coords_ = IntMatrix(k, static_cast<int>(rel_cols.size()));
    for (int j = 0; j < static_cast<int>(rel_cols.size()); ++j) {
      auto w = coordinates(rel_cols[j]).value();
      for (int i = 0; i < k; ++i) rel_coords_(i, j) = w[i];
    }
    quotient_ = smith_normal_form(rel_coords_);
  }

  int rank() const { return static_cast<int>(kept_.size()); }
  int pairs() const { return p_; }
  std::int64_t modulus() const { return m_; }

  std::vector<std::int64_t> basis_vector(int i) const {
    std::vector<std::int64_t> b(p_);
    for (int r = 0; r < p_; ++r) b[r] = checked_mul(v_(r, kept_[i]), scale_[kept_[i]]);
    return b;
  }

  std::vector<std::int64_t> combine(const std::vector<std::int64_t>& w) const {
    std::vector<std::int64_t> out(p_, 0);
    for (int i = 0; i < rank(); ++i) {
      if (!w[i]) continue;
      auto b = basis_vector(i);
      for (int r = 0; r < p_; ++r) out[r] = checked_add(out[r], checked_mul(w[i], b[r]));
    }
    return out;
  }

  // coordinates in the lattice basis, or nothing when phi is not a cocycle lift
  std::optional<std::vector<std::int64_t>> coordinates(const std::vector<std::int64_t>& phi) const {
    auto psi = v_inv_ * phi;
    std::vector<std::int64_t> w;
    for (int i = 0; i < p_; ++i) {
      if (!scale_[i]) {
        if (psi[i]) return std::nullopt;
        continue;
      }
      if (psi[i] % scale_[i]) return std::nullopt;
      w.push_back(psi[i] / scale_[i]);
    }
    return w;
  }

  const SmithForm& quotient() const { return quotient_; }
  const IntMatrix& relation_coordinates() const { return rel_coords_; }
  const IntMatrix& relation_rows() const { return relation_rows_; }
  const IntMatrix& d2t() const { return d2t_; }
  const IntMatrix& d3t() const { return d3t_; }

 private:
  std::int64_t m_;
  int p_ = 0;
  IntMatrix d2t_, d3t_, v_, v_inv_;
  std::vector<std::int64_t> scale_;
  std::vector<int> kept_;
  IntMatrix relation_rows_;
  IntMatrix rel_coords_;
  SmithForm quotient_;
};

void check_length(const Cocycle& phi, const Biquandle& x) {
  if (static_cast<int>(phi.values.size()) != PairBasis(x.order()).size())
    throw CohomologyError("cochain length " + std::to_string(phi.values.size()) +
                          " does not match the pair basis of size " +
                          std::to_string(PairBasis(x.order()).size()));
}

Cocycle reduced(std::vector<std::int64_t> v, const CoeffGroup& a) {
  for (auto& e : v) e = a.reduce(e);
  return {std::move(v)};
}

int matrix_rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return smith_normal_form(m).rank;
}

}  // namespace

std::vector<Cocycle> cocycle_space(const Biquandle& x, const CoeffGroup& a) {
  H2Presentation pres(x, a);
  std::vector<Cocycle> out;
  for (int i = 0; i < pres.rank(); ++i) {
    Cocycle c = reduced(pres.basis_vector(i), a);
    bool zero = std::all_of(c.values.begin(), c.values.end(), [](std::int64_t v) { return v == 0; });
    if (!zero) out.push_back(std::move(c));
  }
  return out;
}

std::string H2Result::structure() const {
  std::vector<std::string> parts;
  for (std::int64_t t : torsion) parts.push_back("Z_" + std::to_string(t));
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

H2Result h2_generators(const Biquandle& x, const CoeffGroup& a) {
  H2Presentation pres(x, a);
  H2Result res;
  const int k = pres.rank();
  if (k == 0) return res;
  const SmithForm& q = pres.quotient();
  IntMatrix hnf = hermite_rows(pres.relation_rows());
  std::vector<Cocycle> torsion_gens, free_gens;
  for (int i = 0; i < k; ++i) {
    std::int64_t e = q.diag(i);
    if (e == 1) continue;
    auto phi = pres.combine(q.u_inv.column(i));
    Cocycle c = reduced(reduce_by_hermite(std::move(phi), hnf), a);
    if (e == 0) {
      ++res.free_rank;
      free_gens.push_back(std::move(c));
    } else {
      res.torsion.push_back(e);
      torsion_gens.push_back(std::move(c));
    }
  }
  res.generators = std::move(torsion_gens);
  res.generators.insert(res.generators.end(), free_gens.begin(), free_gens.end());
  return res;
}

bool is_cocycle(const Cocycle& phi, const Biquandle& x, const CoeffGroup& a) {
  check_length(phi, x);
  if (phi.values.empty()) return true;
  const IntMatrix d3t = boundary_matrices(x).d3.transpose();
  for (std::int64_t v : d3t * phi.values)
    if (a.reduce(v) != 0) return false;
  return true;
}

Cocycle coboundary(const std::vector<std::int64_t>& psi, const Biquandle& x, const CoeffGroup& a) {
  if (static_cast<int>(psi.size()) != x.order())
    throw CohomologyError("1-cochain must have one value per element");
  const IntMatrix d2t = boundary_matrices(x).d2.transpose();
  return reduced(d2t * psi, a);
}

Cocycle canonical_representative(const Cocycle& phi, const Biquandle& x, const CoeffGroup& a) {
  check_length(phi, x);
  H2Presentation pres(x, a);
  IntMatrix hnf = hermite_rows(pres.relation_rows());
  return reduced(reduce_by_hermite(phi.values, hnf), a);
}

bool is_coboundary(const Cocycle& phi, const Biquandle& x, const CoeffGroup& a) {
  Cocycle r = canonical_representative(phi, x, a);
  return std::all_of(r.values.begin(), r.values.end(), [](std::int64_t v) { return v == 0; });
}

bool independent_mod_coboundaries(const std::vector<Cocycle>& phis, const Biquandle& x,
                                  const CoeffGroup& a) {
  for (const auto& phi : phis)
    if (!is_cocycle(phi, x, a)) return false;
  if (phis.empty()) return true;
  H2Presentation pres(x, a);
  const int k = static_cast<int>(phis.size());
  if (!a.finite()) {
    const IntMatrix& d2t = pres.d2t();
    IntMatrix both(d2t.rows(), d2t.cols() + k);
    for (int r = 0; r < d2t.rows(); ++r) {
      for (int c = 0; c < d2t.cols(); ++c) both(r, c) = d2t(r, c);
      for (int j = 0; j < k; ++j) both(r, d2t.cols() + j) = phis[j].values[r];
    }
    return matrix_rank(both) == matrix_rank(d2t) + k;
  }
  // Map Z_m^k into H^2 = sum Z/e_i, each summand embedded in Z_m by m/e_i;
  // injective iff the k-minors have gcd prime to m.
  const std::int64_t m = a.modulus();
  const SmithForm& q = pres.quotient();
  std::vector<int> comps;
  for (int i = 0; i < pres.rank(); ++i)
    if (q.diag(i) != 1) comps.push_back(i);
  IntMatrix w(static_cast<int>(comps.size()), k);
  for (int j = 0; j < k; ++j) {
    auto coords = pres.coordinates(phis[j].values).value();
    auto qc = q.u * coords;
    for (std::size_t r = 0; r < comps.size(); ++r) {
      std::int64_t e = q.diag(comps[r]);
      w(static_cast<int>(r), j) = reduce_mod(checked_mul(reduce_mod(qc[comps[r]], e), m / e), m);
    }
  }
  if (w.rows() < k) return false;
  SmithForm sf = smith_normal_form(w);
  if (sf.rank < k) return false;
  for (int i = 0; i < k; ++i)
    if (gcd64(sf.diag(i), m) != 1) return false;
  return true;
}

bool generates_h2(const std::vector<Cocycle>& phis, const Biquandle& x, const CoeffGroup& a) {
  for (const auto& phi : phis)
    if (!is_cocycle(phi, x, a)) return false;
  H2Presentation pres(x, a);
  const int k = pres.rank();
  if (k == 0) return true;
  const IntMatrix& rel = pres.relation_coordinates();
  IntMatrix all(k, rel.cols() + static_cast<int>(phis.size()));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < rel.cols(); ++j) all(i, j) = rel(i, j);
  for (std::size_t j = 0; j < phis.size(); ++j) {
    auto coords = pres.coordinates(phis[j].values).value();
    for (int i = 0; i < k; ++i) all(i, rel.cols() + static_cast<int>(j)) = coords[i];
  }
  SmithForm sf = smith_normal_form(all);
  for (int i = 0; i < k; ++i)
    if (sf.diag(i) != 1) return false;
  return true;
}

std::int64_t evaluate(const Cocycle& phi, const ChainVector& v, const CoeffGroup& a) {
  if (phi.values.size() != v.coords.size())
    throw CohomologyError("cocycle and chain vector use different bases");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.coords.size(); ++i)
    if (v.coords[i]) s = checked_add(s, checked_mul(phi.values[i], v.coords[i]));
  return a.reduce(s);
}

Polynomial cocycle_invariant(const LinkDiagram& d, const Biquandle& x, const Cocycle& phi,
                             const CoeffGroup& a) {
  check_length(phi, x);
  Polynomial p({{"q", a.modulus()}});
  for (const Coloring& c : colorings(d, x)) p.add_term({evaluate(phi, chain_vector(c, d, x), a)}, 1);
  return p;
}

int RootForm::degree() const {
  int s = 0;
  for (const auto& [r, k] : multiplicity) s += k;
  return s;
}

Polynomial RootForm::expand() const {
  std::vector<Variable> vars{{"q", 0}};
  Polynomial p = Polynomial::constant(vars, 1);
  for (const auto& [r, k] : multiplicity) {
    Polynomial f = Polynomial::monomial(vars, {1});
    f.add_term({0}, -r);
    for (int i = 0; i < k; ++i) p = p * f;
  }
  return p;
}

std::string RootForm::to_string() const {
  if (multiplicity.empty()) return "1";
  std::string s;
  for (const auto& [r, k] : multiplicity) {
    std::string factor;
    if (r == 0)
      factor = "q";
    else
      factor = "(q " + std::string(r < 0 ? "+ " : "- ") + std::to_string(r < 0 ? -r : r) + ")";
    s += factor;
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

RootForm root_form(const Polynomial& weights) {
  if (weights.variables().size() != 1) throw CohomologyError("root form needs a polynomial in q");
  RootForm rf;
  for (const auto& [e, c] : weights.terms()) {
    if (c < 0) throw CohomologyError("weight multiset has a negative count");
    rf.multiplicity[e[0]] = static_cast<int>(c);
  }
  return rf;
}

RootForm cocycle_invariant_root_form(const LinkDiagram& d, const Biquandle& x, const Cocycle& phi,
                                     const CoeffGroup& a) {
  return root_form(cocycle_invariant(d, x, phi, a));
}

}  // namespace qcq
