#include "affweyl/newton.hpp"

#include <sstream>
#include <unordered_set>

namespace affweyl {

namespace {

RatVec mat_apply(const IMat& m, const RatVec& v) {
  RatVec out(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i) {
    Rat s(0);
    for (int j = 0; j < m.cols; ++j) s = s + Rat(m.at(i, j)) * v[j];
    out[i] = s;
  }
  return out;
}

// (n, x^{sigma,n}) with x^{sigma,n} a pure translation and sigma^n = id.
std::pair<int, AffElt> stabilized_power(const Group& g, const AffElt& x) {
  const int d = g.sigma.order;
  AffElt y = twisted_power(g, x, d);
  // x^{sigma, k d} = y^k; the finite parts walk the cyclic group <u_y>.
  AffElt z = y;
  int k = 1;
  std::unordered_set<size_t> seen;
  while (!z.u.is_identity()) {
    if (!seen.insert(WeylHash{}(z.u)).second)
      throw internal_error("stabilized_power: finite parts cycled without reaching identity");
    z = aff_mul(z, y);
    ++k;
  }
  return {k * d, z};
}

}  // namespace

bool sigma_class_less(const SigmaClass& a, const SigmaClass& b) {
  if (a.scope != b.scope) return a.scope < b.scope;
  if (a.kappa != b.kappa) return a.kappa < b.kappa;
  return rvec_less(a.nu, b.nu);
}

std::string class_key(const SigmaClass& c) {
  std::ostringstream os;
  os << "nu:[";
  for (size_t i = 0; i < c.nu.size(); ++i) os << (i ? "," : "") << c.nu[i].to_string();
  os << "];k:[";
  for (size_t i = 0; i < c.kappa.size(); ++i) os << (i ? "," : "") << c.kappa[i];
  os << "]";
  return os.str();
}

AffElt twisted_power(const Group& g, const AffElt& x, int n) {
  if (n < 1) throw std::invalid_argument("twisted_power: n must be >= 1");
  AffElt acc = x;
  AffElt cur = x;
  for (int k = 1; k < n; ++k) {
    cur = frobenius_apply(g.sigma, cur);
    acc = aff_mul(acc, cur);
  }
  return acc;
}

int newton_exponent(const Group& g, const AffElt& x) { return stabilized_power(g, x).first; }

RatVec newton_point(const Group& g, const AffElt& x) {
  auto [n, z] = stabilized_power(g, x);
  RatVec nu(g.rd.dim, Rat(0));
  for (int i = 0; i < g.rd.dim; ++i) nu[i] = Rat(z.lambda[i], n);
  return g.rd.dominant_representative(nu).first;
}

std::optional<RatVec> newton_point_at(const Group& g, const AffElt& x, int n) {
  if (n < 1 || n % g.sigma.order != 0) return std::nullopt;
  AffElt z = twisted_power(g, x, n);
  if (!z.u.is_identity()) return std::nullopt;
  RatVec nu(g.rd.dim, Rat(0));
  for (int i = 0; i < g.rd.dim; ++i) nu[i] = Rat(z.lambda[i], n);
  return g.rd.dominant_representative(nu).first;
}

std::vector<i64> kottwitz_point(const Group& g, const AffElt& x) {
  return g.kott.residues(x.lambda);
}

SigmaClass class_of(const Group& g, const AffElt& x) {
  return SigmaClass{newton_point(g, x), kottwitz_point(g, x), g.fingerprint};
}

bool dominance_leq(const Group& g, const SigmaClass& c1, const SigmaClass& c2) {
  if (c1.scope != c2.scope)
    throw std::invalid_argument("dominance_leq: classes from different scopes");
  if (c1.kappa != c2.kappa) return false;
  RatVec diff = rvec_sub(c2.nu, c1.nu);
  if (rvec_is_zero(diff)) return true;
  auto sol = solve_columns(g.rd.simple_coroots, diff);
  if (!sol) return false;
  for (const Rat& c : *sol)
    if (c < Rat(0)) return false;
  return true;
}

bool is_basic(const Group& g, const SigmaClass& c) {
  for (int j = 0; j < g.rd.nsimple; ++j)
    if (!rdot(c.nu, g.rd.simple_roots[j]).is_zero()) return false;
  return true;
}

SigmaClass basic_class_with_kappa(const Group& g, const AffElt& x) {
  const RootDatum& rd = g.rd;
  // Project lambda onto the Phi-perpendicular subspace: subtract
  // sum_i c_i alpha_i^vee where sum_i c_i <alpha_i^vee, alpha_j> = <lambda, alpha_j>.
  RatVec z = rat_vec(x.lambda);
  if (rd.nsimple > 0) {
    RatVec p(rd.nsimple, Rat(0));
    for (int j = 0; j < rd.nsimple; ++j) p[j] = Rat(dot(x.lambda, rd.simple_roots[j]));
    std::vector<IVec> cartan_rows;
    for (int i = 0; i < rd.nsimple; ++i) cartan_rows.push_back(rd.cartan.row(i));
    auto c = solve_columns(cartan_rows, p);
    if (!c) throw internal_error("basic_class_with_kappa: Cartan system inconsistent");
    for (int i = 0; i < rd.nsimple; ++i)
      z = rvec_sub(z, rvec_scaled(rat_vec(rd.simple_coroots[i]), (*c)[i]));
  }
  RatVec acc = z;
  RatVec cur = z;
  for (int k = 1; k < g.sigma.order; ++k) {
    cur = mat_apply(g.sigma.on_cochar, cur);
    acc = rvec_add(acc, cur);
  }
  SigmaClass out;
  out.nu = rvec_scaled(acc, Rat(1, g.sigma.order));
  out.kappa = kottwitz_point(g, x);
  out.scope = g.fingerprint;
  if (!is_basic(g, out)) throw internal_error("basic_class_with_kappa: projection not central");
  return out;
}

SigmaClass embed_levi_class(const Group& g, const Group& m, const SigmaClass& c) {
  if (c.scope != m.fingerprint)
    throw std::invalid_argument("embed_levi_class: class does not belong to the given Levi");
  if (m.rd.dim != g.rd.dim)
    throw std::invalid_argument("embed_levi_class: Levi lattice differs from ambient");
  IVec lam = m.kott.preimage(c.kappa);
  SigmaClass out;
  out.nu = g.rd.dominant_representative(c.nu).first;
  out.kappa = g.kott.residues(lam);
  out.scope = g.fingerprint;
  return out;
}

}  // namespace affweyl
