#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qcq {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

// canonical residue in [0, m); m == 0 leaves v alone
inline std::int64_t reduce_mod(std::int64_t v, std::int64_t m) {
  if (m == 0) return v;
  v %= m;
  return v < 0 ? v + m : v;
}

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  explicit IntMatrix(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::int64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix transpose() const;
  bool is_zero() const;
  std::vector<std::vector<std::int64_t>> to_rows() const;
  std::vector<std::int64_t> column(int j) const;
  const std::vector<std::int64_t>& data() const { return data_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::vector<std::int64_t> operator*(const IntMatrix& a, const std::vector<std::int64_t>& v);

// U * A * V == D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix d, u, u_inv, v, v_inv;
  int rank = 0;
  std::int64_t diag(int i) const { return i < d.rows() && i < d.cols() ? d(i, i) : 0; }
};

SmithForm smith_normal_form(const IntMatrix& a);

// Hermite normal form of the lattice spanned by the rows of `a`: nonzero rows
// only, positive pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_rows(const IntMatrix& a);

// Canonical representative of v modulo the row lattice of an HNF matrix.
std::vector<std::int64_t> reduce_by_hermite(std::vector<std::int64_t> v, const IntMatrix& h);

}  // namespace qcq
