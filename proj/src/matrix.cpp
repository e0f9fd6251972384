#include "qcq/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace qcq {

IntMatrix::IntMatrix(const std::vector<std::vector<std::int64_t>>& rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows[0].size()) : 0;
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_);
  for (int i = 0; i < rows_; ++i)
    out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                  data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
  return out;
}

std::vector<std::int64_t> IntMatrix::column(int j) const {
  std::vector<std::int64_t> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in product");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      std::int64_t aik = a(i, k);
      if (!aik) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
    }
  return c;
}

std::vector<std::int64_t> operator*(const IntMatrix& a, const std::vector<std::int64_t>& v) {
  if (a.cols() != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<std::int64_t> out(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) && v[j]) out[i] = checked_add(out[i], checked_mul(a(i, j), v[j]));
  return out;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : a_(a),
        u_(IntMatrix::identity(a.rows())),
        ui_(IntMatrix::identity(a.rows())),
        v_(IntMatrix::identity(a.cols())),
        vi_(IntMatrix::identity(a.cols())) {}

  SmithForm run() {
    const int m = a_.rows(), n = a_.cols();
    for (int t = 0; t < std::min(m, n); ++t) {
      if (!place_pivot(t)) break;
      while (true) {
        bool clean = true;
        for (int i = t + 1; i < m; ++i) {
          if (!a_(i, t)) continue;
          row_addmul(i, t, -(a_(i, t) / a_(t, t)));
          if (a_(i, t)) {
            row_swap(i, t);
            clean = false;
          }
        }
        for (int j = t + 1; j < n; ++j) {
          if (!a_(t, j)) continue;
          col_addmul(j, t, -(a_(t, j) / a_(t, t)));
          if (a_(t, j)) {
            col_swap(j, t);
            clean = false;
          }
        }
        if (!clean) continue;
        int bad = -1;
        for (int i = t + 1; i < m && bad < 0; ++i)
          for (int j = t + 1; j < n; ++j)
            if (a_(i, j) % a_(t, t)) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        row_addmul(t, bad, 1);
      }
      if (a_(t, t) < 0) row_negate(t);
    }
    SmithForm f{a_, u_, ui_, v_, vi_, 0};
    for (int i = 0; i < std::min(m, n); ++i)
      if (a_(i, i)) ++f.rank;
    return f;
  }

 private:
  bool place_pivot(int t) {
    int bi = -1, bj = -1;
    for (int i = t; i < a_.rows(); ++i)
      for (int j = t; j < a_.cols(); ++j)
        if (a_(i, j) && (bi < 0 || std::llabs(a_(i, j)) < std::llabs(a_(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi < 0) return false;
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
    return true;
  }

  void row_swap(int i, int j) {
    for (int c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (int c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
    for (int r = 0; r < ui_.rows(); ++r) std::swap(ui_(r, i), ui_(r, j));
  }
  // row dst += q * row src
  void row_addmul(int dst, int src, std::int64_t q) {
    if (!q) return;
    for (int c = 0; c < a_.cols(); ++c) a_(dst, c) = checked_add(a_(dst, c), checked_mul(q, a_(src, c)));
    for (int c = 0; c < u_.cols(); ++c) u_(dst, c) = checked_add(u_(dst, c), checked_mul(q, u_(src, c)));
    for (int r = 0; r < ui_.rows(); ++r) ui_(r, src) = checked_sub(ui_(r, src), checked_mul(q, ui_(r, dst)));
  }
  void row_negate(int i) {
    for (int c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    for (int c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
    for (int r = 0; r < ui_.rows(); ++r) ui_(r, i) = -ui_(r, i);
  }
  void col_swap(int i, int j) {
    for (int r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (int r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
    for (int c = 0; c < vi_.cols(); ++c) std::swap(vi_(i, c), vi_(j, c));
  }
  // col dst += q * col src
  void col_addmul(int dst, int src, std::int64_t q) {
    if (!q) return;
    for (int r = 0; r < a_.rows(); ++r) a_(r, dst) = checked_add(a_(r, dst), checked_mul(q, a_(r, src)));
    for (int r = 0; r < v_.rows(); ++r) v_(r, dst) = checked_add(v_(r, dst), checked_mul(q, v_(r, src)));
    for (int c = 0; c < vi_.cols(); ++c) vi_(src, c) = checked_sub(vi_(src, c), checked_mul(q, vi_(dst, c)));
  }

  IntMatrix a_, u_, ui_, v_, vi_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) { return SmithReducer(a).run(); }

IntMatrix hermite_rows(const IntMatrix& a) {
  std::vector<std::vector<std::int64_t>> rows = a.to_rows();
  const int n = a.cols();
  std::size_t r = 0;
  auto sub = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (int k = 0; k < n; ++k) rows[dst][k] = checked_sub(rows[dst][k], checked_mul(q, rows[src][k]));
  };
  for (int c = 0; c < n && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] && (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[best], rows[r]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (!rows[i][c]) continue;
        sub(i, r, rows[i][c] / rows[r][c]);
        if (rows[i][c]) clean = false;
      }
      if (clean) break;
    }
    if (!rows[r][c]) continue;
    if (rows[r][c] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) sub(i, r, floor_div(rows[i][c], rows[r][c]));
    ++r;
  }
  rows.resize(r);
  IntMatrix h(static_cast<int>(r), n);
  for (std::size_t i = 0; i < r; ++i)
    for (int k = 0; k < n; ++k) h(static_cast<int>(i), k) = rows[i][k];
  return h;
}

std::vector<std::int64_t> reduce_by_hermite(std::vector<std::int64_t> v, const IntMatrix& h) {
  for (int i = 0; i < h.rows(); ++i) {
    int p = 0;
    while (p < h.cols() && !h(i, p)) ++p;
    if (p == h.cols()) continue;
    std::int64_t q = floor_div(v[p], h(i, p));
    if (!q) continue;
    for (int k = 0; k < h.cols(); ++k) v[k] = checked_sub(v[k], checked_mul(q, h(i, k)));
  }
  return v;
}

}  // namespace qcq
