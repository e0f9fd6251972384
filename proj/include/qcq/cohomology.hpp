#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcq/algebra.hpp"
#include "qcq/diagram.hpp"
#include "qcq/homset.hpp"
#include "qcq/matrix.hpp"
#include "qcq/polynomial.hpp"

namespace qcq {

// Z (modulus 0) or Z_m; elements are canonical residues.
class CoeffGroup {
 public:
  static CoeffGroup integers() { return CoeffGroup(0); }
  static CoeffGroup cyclic(std::int64_t m);
  // "Z" or "Z3" / "Z_3"
  static CoeffGroup parse(const std::string& spec);

  std::int64_t modulus() const { return m_; }
  bool finite() const { return m_ != 0; }
  std::int64_t reduce(std::int64_t v) const { return reduce_mod(v, m_); }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(checked_add(a, b)); }
  std::string name() const;

  friend bool operator==(const CoeffGroup&, const CoeffGroup&) = default;

 private:
  explicit CoeffGroup(std::int64_t m) : m_(m) {}
  std::int64_t m_ = 0;
};

// Non-degenerate triples (x1,x2,x3), x1 != x2 != x3, lexicographic.
std::vector<std::array<int, 3>> triple_basis(int n);

struct BoundaryMatrices {
  IntMatrix d2;  // n x P, pairs -> singles
  IntMatrix d3;  // P x T, triples -> pairs
};

BoundaryMatrices boundary_matrices(const Biquandle& x);

struct Cocycle {
  std::vector<std::int64_t> values;  // over PairBasis

  friend bool operator==(const Cocycle&, const Cocycle&) = default;
  friend auto operator<=>(const Cocycle&, const Cocycle&) = default;
};

class CohomologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generators of Z^2 = ker(d3^T) over A.
std::vector<Cocycle> cocycle_space(const Biquandle& x, const CoeffGroup& a);

struct H2Result {
  std::vector<Cocycle> generators;  // one per nontrivial cyclic factor
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // orders of the finite cyclic factors
  std::string structure() const;      // e.g. "Z^2 + Z_2" or "0"
};

H2Result h2_generators(const Biquandle& x, const CoeffGroup& a);

bool is_cocycle(const Cocycle& phi, const Biquandle& x, const CoeffGroup& a);
// delta^1 psi for a 1-cochain psi over the elements 1..n
Cocycle coboundary(const std::vector<std::int64_t>& psi, const Biquandle& x, const CoeffGroup& a);
bool is_coboundary(const Cocycle& phi, const Biquandle& x, const CoeffGroup& a);
// Representative of the class of phi, canonical modulo coboundaries.
Cocycle canonical_representative(const Cocycle& phi, const Biquandle& x, const CoeffGroup& a);
// Over Z: rational independence modulo B^2. Over Z_m: the classes span a
// free Z_m-submodule of rank |phis|.
bool independent_mod_coboundaries(const std::vector<Cocycle>& phis, const Biquandle& x,
                                  const CoeffGroup& a);
// Classes of phis generate all of H^2.
bool generates_h2(const std::vector<Cocycle>& phis, const Biquandle& x, const CoeffGroup& a);

std::int64_t evaluate(const Cocycle& phi, const ChainVector& v, const CoeffGroup& a);

// Sum of q^<phi, v(c)> over the homset.
Polynomial cocycle_invariant(const LinkDiagram& d, const Biquandle& x, const Cocycle& phi,
                             const CoeffGroup& a);

// Product of (q - m) over the weight multiset, kept factored.
struct RootForm {
  std::map<std::int64_t, int> multiplicity;  // root -> count

  int degree() const;
  Polynomial expand() const;  // over Z, roots read as integers
  std::string to_string() const;
};

RootForm cocycle_invariant_root_form(const LinkDiagram& d, const Biquandle& x, const Cocycle& phi,
                                     const CoeffGroup& a);
RootForm root_form(const Polynomial& weights);

}  // namespace qcq
