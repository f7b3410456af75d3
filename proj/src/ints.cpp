#include "affweyl/ints.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace affweyl {

i64 gcd_nonneg(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

IVec vec_add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IVec vec_sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IVec vec_neg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IVec vec_scaled(const IVec& a, i64 c) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

i64 dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IVec& a) {
  for (i64 x : a)
    if (x != 0) return false;
  return true;
}

std::string vec_to_string(const IVec& a) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ']';
  return os.str();
}

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::mul(const IMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("IMat::mul: shape mismatch");
  IMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      i64 v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

IVec IMat::apply(const IVec& v) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("IMat::apply: shape mismatch");
  IVec r(rows, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IMat IMat::transposed() const {
  IMat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

IVec IMat::row(int r) const {
  IVec v(cols);
  for (int j = 0; j < cols; ++j) v[j] = at(r, j);
  return v;
}

IVec IMat::col(int c) const {
  IVec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, c);
  return v;
}

void IMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols; ++k) std::swap(at(i, k), at(j, k));
}

void IMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows; ++k) std::swap(at(k, i), at(k, j));
}

void IMat::add_row(int i, int j, i64 q) {
  for (int k = 0; k < cols; ++k) at(i, k) -= q * at(j, k);
}

void IMat::add_col(int i, int j, i64 q) {
  for (int k = 0; k < rows; ++k) at(k, i) -= q * at(k, j);
}

bool IMat::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

namespace {

// Clears row t and column t of A outside the pivot, tracking U and V.
void eliminate_at(IMat& A, IMat& U, IMat& V, int t) {
  const int r = A.rows, c = A.cols;
  for (;;) {
    bool clean = true;
    for (int i = t + 1; i < r; ++i) {
      if (A.at(i, t) == 0) continue;
      i64 q = A.at(i, t) / A.at(t, t);
      if (q != 0) {
        A.add_row(i, t, q);
        U.add_row(i, t, q);
      }
      if (A.at(i, t) != 0) {  // remainder smaller than pivot; promote it
        A.swap_rows(t, i);
        U.swap_rows(t, i);
        clean = false;
      }
    }
    for (int j = t + 1; j < c; ++j) {
      if (A.at(t, j) == 0) continue;
      i64 q = A.at(t, j) / A.at(t, t);
      if (q != 0) {
        A.add_col(j, t, q);
        V.add_col(j, t, q);
      }
      if (A.at(t, j) != 0) {
        A.swap_cols(t, j);
        V.swap_cols(t, j);
        clean = false;
      }
    }
    if (clean) {
      bool col_ok = true;
      for (int i = t + 1; i < r; ++i)
        if (A.at(i, t) != 0) col_ok = false;
      if (col_ok) break;
    }
  }
}

}  // namespace

SmithForm smith_form(IMat A) {
  const int r = A.rows, c = A.cols;
  const int m = std::min(r, c);
  SmithForm s;
  s.U = IMat::identity(r);
  s.V = IMat::identity(c);

  int t = 0;
  for (; t < m; ++t) {
    int pr = -1, pc = -1;
    i64 best = 0;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        i64 v = std::llabs(A.at(i, j));
        if (v != 0 && (pr < 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    A.swap_rows(t, pr);
    s.U.swap_rows(t, pr);
    A.swap_cols(t, pc);
    s.V.swap_cols(t, pc);
    eliminate_at(A, s.U, s.V, t);
  }
  const int rank = t;

  // Enforce the divisibility chain d[i] | d[i+1].
  for (;;) {
    int bad = -1;
    for (int i = 0; i + 1 < rank; ++i)
      if (A.at(i + 1, i + 1) % A.at(i, i) != 0) {
        bad = i;
        break;
      }
    if (bad < 0) break;
    A.add_col(bad, bad + 1, -1);  // col[bad] += col[bad+1]
    s.V.add_col(bad, bad + 1, -1);
    eliminate_at(A, s.U, s.V, bad);
  }

  for (int i = 0; i < rank; ++i) {
    if (A.at(i, i) < 0) {
      for (int k = 0; k < c; ++k) A.at(i, k) = -A.at(i, k);
      for (int k = 0; k < s.U.cols; ++k) s.U.at(i, k) = -s.U.at(i, k);
    }
  }
  // Stable sign for the free rows of U (rows past the rank): leading entry positive.
  for (int i = rank; i < r; ++i) {
    for (int k = 0; k < s.U.cols; ++k) {
      if (s.U.at(i, k) == 0) continue;
      if (s.U.at(i, k) < 0)
        for (int k2 = 0; k2 < s.U.cols; ++k2) s.U.at(i, k2) = -s.U.at(i, k2);
      break;
    }
  }

  s.d.assign(m, 0);
  for (int i = 0; i < rank; ++i) s.d[i] = A.at(i, i);
  s.rank = rank;
  return s;
}

std::vector<IVec> integer_kernel(const IMat& A) {
  SmithForm s = smith_form(A);
  std::vector<IVec> basis;
  for (int j = s.rank; j < A.cols; ++j) basis.push_back(s.V.col(j));
  return basis;
}

i64 det(IMat A) {
  if (A.rows != A.cols) throw std::invalid_argument("det: square matrix required");
  const int n = A.rows;
  if (n == 0) return 1;
  i64 sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (A.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      A.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / prev;
    prev = A.at(k, k);
  }
  return sign * A.at(n - 1, n - 1);
}

}  // namespace affweyl
