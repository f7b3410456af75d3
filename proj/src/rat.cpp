#include "affweyl/rat.hpp"

#include <cstdlib>

namespace affweyl {

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  i64 n = std::stoll(s.substr(0, slash));
  i64 d = std::stoll(s.substr(slash + 1));
  return Rat(n, d);
}

RatVec rat_vec(const IVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

RatVec rvec_add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec rvec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec rvec_scaled(const RatVec& a, const Rat& c) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

Rat rdot(const RatVec& a, const IVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * Rat(b[i]);
  return s;
}

bool rvec_is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool rvec_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

namespace {

// Gaussian elimination over Q on an augmented system; rows = equations.
// Returns reduced rows and pivot column indices.
struct RatRows {
  std::vector<RatVec> rows;
  std::vector<int> pivot_col;  // per reduced row
};

RatRows reduce(std::vector<RatVec> rows, int ncols) {
  RatRows out;
  int rank = 0;
  for (int c = 0; c < ncols; ++c) {
    int pivot = -1;
    for (int r = rank; r < (int)rows.size(); ++r) {
      if (!rows[r][c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Rat inv = Rat(1) / rows[rank][c];
    rows[rank] = rvec_scaled(rows[rank], inv);
    for (int r = 0; r < (int)rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      rows[r] = rvec_sub(rows[r], rvec_scaled(rows[rank], rows[r][c]));
    }
    out.pivot_col.push_back(c);
    ++rank;
    if (rank == (int)rows.size()) break;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

}  // namespace

std::optional<RatVec> solve_columns(const std::vector<IVec>& columns, const RatVec& b) {
  int n = (int)b.size();
  int k = (int)columns.size();
  // Augmented rows: one per coordinate of b.
  std::vector<RatVec> rows(n, RatVec(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) rows[i][j] = Rat(columns[j][i]);
    rows[i][k] = b[i];
  }
  RatRows red = reduce(std::move(rows), k);
  RatVec x(k, Rat(0));
  for (size_t r = 0; r < red.rows.size(); ++r) x[red.pivot_col[r]] = red.rows[r][k];
  // Check consistency (rows reduced only over first k columns).
  for (int i = 0; i < n; ++i) {
    Rat s(0);
    for (int j = 0; j < k; ++j) s = s + Rat(columns[j][i]) * x[j];
    if (!(s == b[i])) return std::nullopt;
  }
  return x;
}

std::optional<std::vector<RatVec>> rat_inverse(const IMat& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  std::vector<RatVec> rows(n, RatVec(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = Rat(m.at(i, j));
    rows[i][n + i] = Rat(1);
  }
  RatRows red = reduce(std::move(rows), n);
  if ((int)red.rows.size() != n) return std::nullopt;
  std::vector<RatVec> inv(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = red.rows[i][n + j];
  return inv;
}

IMat inverse_unimodular(const IMat& m) {
  auto inv = rat_inverse(m);
  if (!inv) throw std::invalid_argument("inverse_unimodular: singular matrix");
  IMat r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      const Rat& x = (*inv)[i][j];
      if (!x.is_integer()) throw std::invalid_argument("inverse_unimodular: inverse not integral");
      r.at(i, j) = x.num;
    }
  }
  return r;
}

}  // namespace affweyl
