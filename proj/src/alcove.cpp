#include "affweyl/alcove.hpp"

#include <algorithm>
#include <set>

namespace affweyl {

i64 iwahori_level(const RootDatum& rd, int root_idx) {
  if (root_idx < 0 || root_idx >= 2 * rd.npos)
    throw std::invalid_argument("iwahori_level: not a root index");
  return rd.is_positive(root_idx) ? 1 : 0;
}

namespace {

bool is_sigma_stable(const Group& g, const std::vector<int>& J) {
  std::set<int> s(J.begin(), J.end());
  for (int j : J)
    if (!s.count(g.sigma.node_perm[j])) return false;
  return true;
}

void require_sigma_stable(const Group& g, const std::vector<int>& J) {
  if (!is_sigma_stable(g, J))
    throw std::invalid_argument("alcove: J is not sigma-stable");
}

}  // namespace

AlcoveDiag alcove_diagnose(const Group& g, const AffElt& x, const std::vector<int>& J,
                           const WeylElt& w) {
  require_sigma_stable(g, J);
  const RootDatum& rd = g.rd;

  AlcoveDiag diag;
  AffElt xt = aff_mul(aff_mul(aff_from_weyl(w.inverse()), x),
                      frobenius_apply(g.sigma, aff_from_weyl(w)));
  diag.cond_a = rd.in_parabolic(xt.u, J);

  // (b): the alcove x.A must lie weakly on the positive side of the base
  // alcove in every gamma = w alpha direction (alpha in Phi+ \ Phi_J):
  // inf gamma(x.A) = <lambda, gamma> - c_I(u^{-1} gamma) must be >= inf
  // gamma(A) = -c_I(gamma), i.e. c_I(gamma) + <lambda, gamma> >= c_I(u^{-1} gamma).
  std::vector<int> levi = rd.levi_positive_roots(J);
  std::set<int> in_levi(levi.begin(), levi.end());
  WeylElt uinv = x.u.inverse();
  diag.cond_b = true;
  for (int a = 0; a < rd.npos; ++a) {
    if (in_levi.count(a)) continue;
    int gamma = rd.act_on_root(w, a);
    i64 lhs = iwahori_level(rd, gamma) + dot(x.lambda, rd.roots[gamma]);
    if (lhs < iwahori_level(rd, rd.act_on_root(uinv, gamma))) {
      diag.cond_b = false;
      diag.witness_root = a;
      break;
    }
  }
  return diag;
}

bool is_alcove_element(const Group& g, const AffElt& x, const std::vector<int>& J,
                       const WeylElt& w) {
  return alcove_diagnose(g, x, J, w).pass();
}

NormalizedPair normalize_pair(const Group& g, const AffElt& x, const std::vector<int>& J,
                              const WeylElt& w) {
  if (!is_alcove_element(g, x, J, w))
    throw std::invalid_argument("normalize_pair: not an alcove triple");
  std::vector<int> js = J;
  std::sort(js.begin(), js.end());
  AlcovePair p;
  p.J = js;
  p.w = g.rd.min_coset_representative(w, js);
  p.trivial = static_cast<int>(js.size()) == g.rd.nsimple;
  return NormalizedPair{p, conjugated_element(g, x, p)};
}

AffElt conjugated_element(const Group& g, const AffElt& x, const AlcovePair& p) {
  return aff_mul(aff_mul(aff_from_weyl(p.w.inverse()), x),
                 frobenius_apply(g.sigma, aff_from_weyl(p.w)));
}

std::vector<std::vector<int>> sigma_stable_subsets(const Group& g) {
  const int n = g.rd.nsimple;
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) J.push_back(i);
    if (is_sigma_stable(g, J)) out.push_back(std::move(J));
  }
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<AlcovePair> enumerate_alcove_pairs(const Group& g, const AffElt& x) {
  std::vector<AlcovePair> out;
  for (const std::vector<int>& J : sigma_stable_subsets(g)) {
    bool trivial = static_cast<int>(J.size()) == g.rd.nsimple;
    for (const WeylElt& w : g.rd.min_coset_reps(J))
      if (is_alcove_element(g, x, J, w)) out.push_back(AlcovePair{J, w, trivial});
  }
  return out;
}

SigmaSupport sigma_support(const Group& g, const AffElt& x) {
  auto [omega, word] = omega_word(g.rd, g.sys, x);
  std::vector<int> omega_perm = saff_omega_perm(g.rd, g.sys, omega);
  // composite automorphism s -> sigma(omega s omega^{-1}) as an index map
  std::vector<int> step(g.sys.s_aff.size());
  for (size_t i = 0; i < step.size(); ++i) step[i] = g.sigma_saff[omega_perm[i]];

  std::set<int> nodes(word.begin(), word.end());
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : std::vector<int>(nodes.begin(), nodes.end()))
      if (nodes.insert(step[i]).second) grew = true;
  }

  SigmaSupport s;
  s.nodes.assign(nodes.begin(), nodes.end());
  s.spherical = true;
  for (const std::vector<int>& comp : g.sys.component_nodes) {
    bool misses = false;
    for (int n : comp)
      if (!nodes.count(n)) {
        misses = true;
        break;
      }
    if (!misses) {
      s.spherical = false;
      break;
    }
  }
  return s;
}

bool sigma_connected(const Group& g) {
  const auto& comps = g.rd.components;
  if (comps.size() <= 1) return true;
  std::vector<int> comp_of(g.rd.nsimple, -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int node : comps[c]) comp_of[node] = static_cast<int>(c);
  std::set<int> seen{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    int c = frontier.back();
    frontier.pop_back();
    int image = comp_of[g.sigma.node_perm[comps[c][0]]];
    if (seen.insert(image).second) frontier.push_back(image);
  }
  return seen.size() == comps.size();
}

}  // namespace affweyl
