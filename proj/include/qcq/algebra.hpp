#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qcq {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Table = std::vector<std::vector<int>>;

// Elements are 1..n. under(x,y) is x ⊴ y, over(x,y) is x ⊳̄ y.
class Biquandle {
 public:
  Biquandle() = default;
  // Checks shapes and ranges only; axioms are check_axioms' job.
  Biquandle(Table under, Table over);
  static Biquandle quandle(Table op);

  int order() const { return n_; }
  int under(int x, int y) const { return under_[idx(x, y)]; }
  int over(int x, int y) const { return over_[idx(x, y)]; }
  bool is_quandle() const;
  bool is_kei() const;

  // z with under(z, y) == x, or 0 when beta_y is not onto x
  int under_inverse(int x, int y) const;

  Table under_table() const;
  Table over_table() const;

  friend bool operator==(const Biquandle&, const Biquandle&) = default;

 private:
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x - 1) * n_ + (y - 1); }
  int n_ = 0;
  std::vector<int> under_;
  std::vector<int> over_;
};

// Each entry names the axiom and a witness tuple; empty iff b is a biquandle.
std::vector<std::string> check_axioms(const Biquandle& b);

Biquandle trivial_quandle(int m);
Biquandle core_cyclic(int m);
Biquandle alexander_cyclic(int m, int t);
// x ⊴ y = t x + (s - t) y, x ⊳̄ y = s x over Z_m
Biquandle alexander_biquandle(int m, int t, int s);
Biquandle constant_action_biquandle_z2();

// Group given by a 1-based multiplication table; x ⊳ y = y^-n x y^n.
Biquandle conjugation_quandle(const Table& group, int n = 1);
Table cyclic_group_table(int m);
// Elements are the permutations of 1..k in lexicographic order.
Table symmetric_group_table(int k);

struct EndoMap {
  std::vector<int> images;  // images[x-1] = sigma(x)

  int operator()(int x) const { return images[x - 1]; }
  friend bool operator==(const EndoMap&, const EndoMap&) = default;
  friend auto operator<=>(const EndoMap&, const EndoMap&) = default;
};

bool is_homomorphism(const EndoMap& f, const Biquandle& from, const Biquandle& to);
std::vector<EndoMap> homomorphisms(const Biquandle& from, const Biquandle& to);
std::vector<EndoMap> endomorphisms(const Biquandle& x);
EndoMap identity_map(int n);
// (f ∘ g)(x) = f(g(x))
EndoMap compose(const EndoMap& f, const EndoMap& g);

// {n, under, over?}; a missing `over` means a quandle
Biquandle biquandle_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Biquandle& b);

// Builtin names: core:M, alexander:M:T, alexander-biquandle:M:T:S, trivial:M,
// z2-biquandle, conjugation-cyclic:M, conjugation-symmetric:K, transposition3
// (the 3-element kei where 3 swaps 1 and 2).
Biquandle builtin_biquandle(const std::string& spec);

std::string format_table(const Biquandle& b);

}  // namespace qcq
