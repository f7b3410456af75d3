#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

// Exact integer linear algebra on small dense matrices: products, kernels,
// determinants, Smith normal form. Everything is int64; the inputs this
// project produces (root data of rank <= 9, pairings bounded by Coxeter
// heights) stay far below overflow territory.

namespace affweyl {

using i64 = long long;
using IVec = std::vector<i64>;

i64 gcd_nonneg(i64 a, i64 b);

IVec vec_add(const IVec& a, const IVec& b);
IVec vec_sub(const IVec& a, const IVec& b);
IVec vec_neg(const IVec& a);
IVec vec_scaled(const IVec& a, i64 c);
i64 dot(const IVec& a, const IVec& b);
bool is_zero(const IVec& a);
std::string vec_to_string(const IVec& a);

struct IMat {
  int rows = 0;
  int cols = 0;
  std::vector<i64> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  static IMat identity(int n);

  i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  IMat mul(const IMat& o) const;
  IVec apply(const IVec& v) const;  // column-vector convention
  IMat transposed() const;
  IVec row(int r) const;
  IVec col(int c) const;
  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  // row_i -= q * row_j, col_i -= q * col_j
  void add_row(int i, int j, i64 q);
  void add_col(int i, int j, i64 q);

  bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const IMat& o) const { return !(*this == o); }
  bool is_identity() const;
};

// U * A * V = diag(d), U and V unimodular, d nonnegative with d[i] | d[i+1].
struct SmithForm {
  IMat U;
  IMat V;
  std::vector<i64> d;  // length min(rows, cols)
  int rank = 0;        // number of nonzero diagonal entries
};

SmithForm smith_form(IMat A);

// Basis of { x in Z^cols : A x = 0 }.
std::vector<IVec> integer_kernel(const IMat& A);

// Exact determinant (Bareiss).
i64 det(IMat A);

struct VecHash {
  size_t operator()(const IVec& v) const {
    size_t h = 1469598103934665603ull;
    for (i64 x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace affweyl
