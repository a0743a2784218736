#ifndef GSV_SNF_HPP
#define GSV_SNF_HPP

#include <map>
#include <vector>

#include "gsv/bigint.hpp"

namespace gsv {

// Column-major sparse matrix with exact integer entries.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::map<int, Int>> col;  // col[j]: row -> nonzero value

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), col(c) {}

  static SparseIntMatrix identity(int n);

  Int get(int r, int c) const;
  void set(int r, int c, Int v);  // erases on zero

  long long nnz() const;
  bool operator==(const SparseIntMatrix& o) const;

  SparseIntMatrix operator*(const SparseIntMatrix& o) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;  // M * x
  SparseIntMatrix transpose() const;

  // Fraction-free Gaussian elimination; intended for the small matrices
  // that appear in tests and unimodularity checks.
  Int determinant() const;
};

struct SnfOptions {
  bool want_u = true;
  bool want_v = true;
  bool want_u_inv = false;
  bool want_v_inv = false;
  // Re-check S == U * M * V after factoring (requires want_u and want_v).
  bool verify = true;
};

// S = U * M * V with U, V unimodular and S diagonal, d_1 | d_2 | ... >= 0,
// zeros trailing. u_inv and v_inv are the exact inverses when requested.
struct SnfResult {
  SparseIntMatrix u, s, v;
  SparseIntMatrix u_inv, v_inv;
  int rank = 0;
  std::vector<Int> diagonal;  // nonzero invariant factors, length == rank
};

SnfResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opt = {});

// Rank of the matrix over Q (equals the number of nonzero invariant factors).
int integer_rank(const SparseIntMatrix& m);

}  // namespace gsv

#endif
