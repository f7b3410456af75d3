#include "affweyl/group.hpp"

#include <algorithm>
#include <sstream>

#include "affweyl/rat.hpp"

namespace affweyl {

std::vector<i64> KPresentation::residues(const IVec& lambda) const {
  if (static_cast<int>(lambda.size()) != u.cols)
    throw internal_error("KPresentation::residues: dimension mismatch");
  IVec y = u.apply(lambda);
  std::vector<i64> out;
  out.reserve(factors.size());
  for (size_t k = 0; k < factors.size(); ++k) {
    i64 v = y[row_of[k]];
    if (factors[k] != 0) {
      v %= factors[k];
      if (v < 0) v += factors[k];
    }
    out.push_back(v);
  }
  return out;
}

IVec KPresentation::preimage(const std::vector<i64>& res) const {
  if (res.size() != factors.size())
    throw internal_error("KPresentation::preimage: residue count mismatch");
  IVec y(u.rows, 0);
  for (size_t k = 0; k < factors.size(); ++k) y[row_of[k]] = res[k];
  return u_inv.apply(y);
}

KPresentation build_kpresentation(const RootDatum& rd, const Frobenius& sigma) {
  const int n = rd.dim;
  // Columns: the simple coroots, then (sigma - 1) applied to a lattice basis.
  IMat a(n, rd.nsimple + n);
  for (int j = 0; j < rd.nsimple; ++j)
    for (int i = 0; i < n; ++i) a.at(i, j) = rd.simple_coroots[j][i];
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      a.at(i, rd.nsimple + j) = sigma.on_cochar.at(i, j) - (i == j ? 1 : 0);

  SmithForm sf = smith_form(a);
  KPresentation kp;
  kp.u = sf.U;
  kp.u_inv = inverse_unimodular(sf.U);
  for (int i = 0; i < n; ++i) {
    i64 d = (i < sf.rank) ? sf.d[i] : 0;
    if (d == 1) continue;
    kp.factors.push_back(d);
    kp.row_of.push_back(i);
  }
  return kp;
}

Group make_group(const RootDatum& rd, const Frobenius& sigma, const std::string& scope) {
  Group g;
  g.rd = rd;
  g.sigma = sigma;
  g.sys = build_affine_system(rd);
  g.sigma_saff = saff_sigma_perm(rd, g.sys, sigma);
  g.kott = build_kpresentation(rd, sigma);
  g.scope = scope;
  std::ostringstream fp;
  fp << rd.type_string << "|" << rd.lattice_string << "|sigma:";
  for (size_t i = 0; i < sigma.node_perm.size(); ++i)
    fp << (i ? "," : "") << sigma.node_perm[i];
  fp << "|dim:" << rd.dim << "|" << scope;
  g.fingerprint = fp.str();
  return g;
}

Group make_levi_group(const Group& g, const std::vector<int>& J) {
  std::vector<int> js = J;
  std::sort(js.begin(), js.end());
  RootDatum m = g.rd.levi(js);
  Frobenius sm = restrict_frobenius(g.rd, g.sigma, js);
  std::ostringstream sc;
  sc << "levi{";
  for (size_t i = 0; i < js.size(); ++i) sc << (i ? "," : "") << js[i];
  sc << "}";
  return make_group(m, sm, sc.str());
}

}  // namespace affweyl
