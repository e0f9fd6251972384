#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qcq/matrix.hpp"

namespace qcq {

// modulus 0: exponents are plain integers; otherwise residues mod `modulus`
struct Variable {
  std::string name;
  std::int64_t modulus = 0;

  friend bool operator==(const Variable&, const Variable&) = default;
};

// Sparse polynomial with exact integer coefficients over a fixed variable list.
class Polynomial {
 public:
  using Exponents = std::vector<std::int64_t>;

  Polynomial() = default;
  explicit Polynomial(std::vector<Variable> vars) : vars_(std::move(vars)) {}
  static Polynomial constant(std::vector<Variable> vars, std::int64_t c);
  static Polynomial monomial(std::vector<Variable> vars, Exponents e, std::int64_t c = 1);

  const std::vector<Variable>& variables() const { return vars_; }
  // keyed by exponent tuple; no zero coefficients
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Exponents& e) const;
  std::int64_t coefficient_sum() const;
  int index_of(std::string_view name) const;

  void add_term(Exponents e, std::int64_t c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(std::int64_t c) const;

  // Lexicographic in variable order; descending by default as in
  // "9t^3 - 13t^2 - 4t", ascending gives "8 + 8q".
  std::string to_string(bool ascending = false) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_vars(const Polynomial& o) const;
  std::vector<Variable> vars_;
  std::map<Exponents, std::int64_t> terms_;
};

// Reads the rendering grammar back, e.g. "5s^3t^3 - 39s^3t^2" over {s, t}.
Polynomial parse_polynomial(std::string_view text, const std::vector<Variable>& vars);

// Coefficients of det(tI - M), highest degree first, by Berkowitz' algorithm.
std::vector<std::int64_t> char_poly_coefficients(const IntMatrix& m);
// det(tI - M) as a polynomial in the single variable `var`
Polynomial char_poly(const IntMatrix& m, const std::string& var = "t");

// Sum of M[j][k] x^{labels[j]} y^{labels[k]}; exponents reduced mod `modulus`.
Polynomial matrix_poly(const IntMatrix& m, const std::vector<std::int64_t>& labels,
                       std::int64_t modulus);
// Inverse of matrix_poly for the same labels.
IntMatrix matrix_from_poly(const Polynomial& p, const std::vector<std::int64_t>& labels);

struct Specialization {
  std::vector<std::string> set_to_one;  // e.g. {"z"} or {"s"}
  bool merge_xy = false;                // replace each xy factor by q
};

// Output variables: q (when merging, modulus of x) followed by the survivors.
Polynomial specialize(const Polynomial& p, const Specialization& spec);

// Same polynomial up to variables that appear with exponent 0 everywhere.
bool same_polynomial(const Polynomial& a, const Polynomial& b);

}  // namespace qcq
