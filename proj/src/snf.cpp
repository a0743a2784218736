#include "gsv/snf.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <utility>

namespace gsv {

SparseIntMatrix SparseIntMatrix::identity(int n) {
  SparseIntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.col[i][i] = 1;
  return m;
}

Int SparseIntMatrix::get(int r, int c) const {
  auto it = col[c].find(r);
  return it == col[c].end() ? Int(0) : it->second;
}

void SparseIntMatrix::set(int r, int c, Int v) {
  if (v == 0)
    col[c].erase(r);
  else
    col[c][r] = std::move(v);
}

long long SparseIntMatrix::nnz() const {
  long long n = 0;
  for (const auto& c : col) n += static_cast<long long>(c.size());
  return n;
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& o) const {
  return rows == o.rows && cols == o.cols && col == o.col;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix product: shape mismatch");
  SparseIntMatrix out(rows, o.cols);
  for (int j = 0; j < o.cols; ++j) {
    std::map<int, Int> acc;
    for (const auto& [k, bkj] : o.col[j])
      for (const auto& [i, aik] : col[k]) {
        Int& e = acc[i];
        e += aik * bkj;
      }
    for (auto& [i, v] : acc)
      if (v != 0) out.col[j].emplace(i, std::move(v));
  }
  return out;
}

std::vector<Int> SparseIntMatrix::apply(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("apply: shape mismatch");
  std::vector<Int> y(rows, 0);
  for (int j = 0; j < cols; ++j) {
    if (x[j] == 0) continue;
    for (const auto& [i, v] : col[j]) y[i] += v * x[j];
  }
  return y;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix out(cols, rows);
  for (int j = 0; j < cols; ++j)
    for (const auto& [i, v] : col[j]) out.col[i][j] = v;
  return out;
}

Int SparseIntMatrix::determinant() const {
  if (rows != cols) throw std::invalid_argument("determinant: not square");
  const int n = rows;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
  for (int j = 0; j < n; ++j)
    for (const auto& [i, v] : col[j]) a[i][j] = v;
  // Bareiss fraction-free elimination.
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Quotient minimizing |a - q*p|.
Int rounded_div(const Int& a, const Int& p) {
  Int q = a / p;
  Int rem = a - q * p;
  if (2 * abs_int(rem) > abs_int(p)) q += ((rem < 0) == (p < 0)) ? 1 : -1;
  return q;
}

class SnfWorker {
 public:
  SnfWorker(const SparseIntMatrix& m, const SnfOptions& opt)
      : r_(m.rows), c_(m.cols), opt_(opt), rows_(m.rows), colocc_(m.cols) {
    for (int j = 0; j < c_; ++j)
      for (const auto& [i, v] : m.col[j]) {
        rows_[i][j] = v;
        colocc_[j].insert(i);
      }
    if (opt_.want_u_inv || opt_.want_v_inv) {
      opt_.want_u = opt_.want_v = true;
      opt_.want_u_inv = opt_.want_v_inv = true;
    }
    if (opt_.want_u) {
      u_rows_.resize(r_);
      for (int i = 0; i < r_; ++i) u_rows_[i][i] = 1;
    }
    if (opt_.want_u_inv) {
      ui_cols_.resize(r_);
      for (int i = 0; i < r_; ++i) ui_cols_[i][i] = 1;
    }
    if (opt_.want_v) {
      v_cols_.resize(c_);
      for (int j = 0; j < c_; ++j) v_cols_[j][j] = 1;
    }
    if (opt_.want_v_inv) {
      vi_rows_.resize(c_);
      for (int j = 0; j < c_; ++j) vi_rows_[j][j] = 1;
    }
  }

  SnfResult run(const SparseIntMatrix& original) {
    int t = 0;
    while (t < r_ && t < c_) {
      if (!place_pivot(t)) break;
      clean_stage(t);
      ++t;
    }
    const int rank = t;
    // Enforce the divisibility chain d_i | d_j for i < j.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < rank && !changed; ++i)
        for (int j = i + 1; j < rank && !changed; ++j)
          if (entry(j, j) % entry(i, i) != 0) {
            col_add(i, j, 1);
            clean_stage(i);
            changed = true;
          }
    }
    for (int i = 0; i < rank; ++i)
      if (entry(i, i) < 0) row_negate(i);

    SnfResult out;
    out.rank = rank;
    out.s = SparseIntMatrix(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (const auto& [j, v] : rows_[i]) out.s.col[j][i] = v;
    for (int i = 0; i < rank; ++i) out.diagonal.push_back(out.s.get(i, i));
    if (opt_.want_u) {
      out.u = SparseIntMatrix(r_, r_);
      for (int i = 0; i < r_; ++i)
        for (const auto& [j, v] : u_rows_[i]) out.u.col[j][i] = v;
    }
    if (opt_.want_v) {
      out.v = SparseIntMatrix(c_, c_);
      out.v.col = v_cols_;
    }
    if (opt_.want_u_inv) {
      out.u_inv = SparseIntMatrix(r_, r_);
      out.u_inv.col = ui_cols_;
    }
    if (opt_.want_v_inv) {
      out.v_inv = SparseIntMatrix(c_, c_);
      for (int i = 0; i < c_; ++i)
        for (const auto& [j, v] : vi_rows_[i]) out.v_inv.col[j][i] = v;
    }
    if (opt_.verify && opt_.want_u && opt_.want_v) {
      if (!(out.u * original * out.v == out.s))
        throw std::logic_error("SNF verification failed: S != U*M*V");
      if (opt_.want_u_inv) {
        if (!(out.u_inv * out.s * out.v_inv == original))
          throw std::logic_error("SNF verification failed: M != Uinv*S*Vinv");
      }
    }
    return out;
  }

 private:
  Int entry(int i, int j) const {
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? Int(0) : it->second;
  }

  void set_entry(int i, int j, Int v) {
    if (v == 0) {
      rows_[i].erase(j);
      colocc_[j].erase(i);
    } else {
      rows_[i][j] = std::move(v);
      colocc_[j].insert(i);
    }
  }

  void row_swap(int i, int j) {
    if (i == j) return;
    std::set<int> touched;
    for (const auto& [c, v] : rows_[i]) touched.insert(c);
    for (const auto& [c, v] : rows_[j]) touched.insert(c);
    std::swap(rows_[i], rows_[j]);
    for (int c : touched) {
      const bool in_i = rows_[i].count(c) > 0;
      const bool in_j = rows_[j].count(c) > 0;
      if (in_i)
        colocc_[c].insert(i);
      else
        colocc_[c].erase(i);
      if (in_j)
        colocc_[c].insert(j);
      else
        colocc_[c].erase(j);
    }
    if (opt_.want_u) std::swap(u_rows_[i], u_rows_[j]);
    if (opt_.want_u_inv) std::swap(ui_cols_[i], ui_cols_[j]);
  }

  // row i += q * row j
  void row_add(int i, int j, const Int& q) {
    for (const auto& [c, v] : rows_[j]) set_entry(i, c, entry(i, c) + q * v);
    if (opt_.want_u)
      for (const auto& [c, v] : u_rows_[j]) {
        Int nv = (u_rows_[i].count(c) ? u_rows_[i][c] : Int(0)) + q * v;
        if (nv == 0)
          u_rows_[i].erase(c);
        else
          u_rows_[i][c] = std::move(nv);
      }
    if (opt_.want_u_inv)
      for (const auto& [r, v] : ui_cols_[i]) {
        Int nv = (ui_cols_[j].count(r) ? ui_cols_[j][r] : Int(0)) - q * v;
        if (nv == 0)
          ui_cols_[j].erase(r);
        else
          ui_cols_[j][r] = std::move(nv);
      }
  }

  void col_swap(int a, int b) {
    if (a == b) return;
    std::set<int> touched = colocc_[a];
    for (int r : colocc_[b]) touched.insert(r);
    for (int r : touched) {
      Int va = entry(r, a), vb = entry(r, b);
      set_entry(r, a, vb);
      set_entry(r, b, va);
    }
    if (opt_.want_v) std::swap(v_cols_[a], v_cols_[b]);
    if (opt_.want_v_inv) std::swap(vi_rows_[a], vi_rows_[b]);
  }

  // col a += q * col b
  void col_add(int a, int b, const Int& q) {
    const std::set<int> rows_of_b = colocc_[b];
    for (int r : rows_of_b) set_entry(r, a, entry(r, a) + q * entry(r, b));
    if (opt_.want_v)
      for (const auto& [r, v] : v_cols_[b]) {
        Int nv = (v_cols_[a].count(r) ? v_cols_[a][r] : Int(0)) + q * v;
        if (nv == 0)
          v_cols_[a].erase(r);
        else
          v_cols_[a][r] = std::move(nv);
      }
    if (opt_.want_v_inv)
      for (const auto& [c, v] : vi_rows_[a]) {
        Int nv = (vi_rows_[b].count(c) ? vi_rows_[b][c] : Int(0)) - q * v;
        if (nv == 0)
          vi_rows_[b].erase(c);
        else
          vi_rows_[b][c] = std::move(nv);
      }
  }

  void row_negate(int i) {
    for (auto& [c, v] : rows_[i]) v = -v;
    if (opt_.want_u)
      for (auto& [c, v] : u_rows_[i]) v = -v;
    if (opt_.want_u_inv)
      for (auto& [r, v] : ui_cols_[i]) v = -v;
  }

  // Moves the best remaining pivot to (t,t). False if the submatrix is zero.
  bool place_pivot(int t) {
    int best_r = -1, best_c = -1;
    Int best_abs = 0;
    long long best_fill = 0;
    for (int j = t; j < c_; ++j) {
      for (int r : colocc_[j]) {
        const Int a = abs_int(entry(r, j));
        const long long fill =
            static_cast<long long>(rows_[r].size()) * static_cast<long long>(colocc_[j].size());
        if (best_r < 0 || a < best_abs || (a == best_abs && fill < best_fill)) {
          best_r = r;
          best_c = j;
          best_abs = a;
          best_fill = fill;
        }
      }
      if (best_r >= 0 && best_abs == 1 && best_fill <= 2) break;
    }
    if (best_r < 0) return false;
    row_swap(t, best_r);
    col_swap(t, best_c);
    return true;
  }

  // Euclidean reduction until row t and column t hold only the pivot.
  void clean_stage(int t) {
    while (true) {
      const Int p = entry(t, t);
      bool restart = false;
      const std::set<int> col_rows = colocc_[t];
      for (int r : col_rows) {
        if (r == t) continue;
        const Int a = entry(r, t);
        const Int q = rounded_div(a, p);
        if (q != 0) row_add(r, t, -q);
        if (entry(r, t) != 0) {
          row_swap(t, r);
          restart = true;
          break;
        }
      }
      if (restart) continue;
      std::vector<std::pair<int, Int>> row_entries(rows_[t].begin(), rows_[t].end());
      for (const auto& [c, val] : row_entries) {
        if (c == t) continue;
        const Int q = rounded_div(val, p);
        if (q != 0) col_add(c, t, -q);
        if (entry(t, c) != 0) {
          col_swap(t, c);
          restart = true;
          break;
        }
      }
      if (!restart) return;
    }
  }

  int r_, c_;
  SnfOptions opt_;
  std::vector<std::map<int, Int>> rows_;
  std::vector<std::set<int>> colocc_;
  std::vector<std::map<int, Int>> u_rows_;   // U, row-major
  std::vector<std::map<int, Int>> ui_cols_;  // U^-1, column-major
  std::vector<std::map<int, Int>> v_cols_;   // V, column-major
  std::vector<std::map<int, Int>> vi_rows_;  // V^-1, row-major
};

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opt) {
  SnfWorker worker(m, opt);
  return worker.run(m);
}

int integer_rank(const SparseIntMatrix& m) {
  return smith_normal_form(m).rank;
}

}  // namespace gsv
