#include "affweyl/affine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace affweyl {

AffElt aff_identity(const RootDatum& rd) {
  return AffElt{IVec(static_cast<size_t>(rd.dim), 0), rd.identity_weyl()};
}

AffElt aff_translation(const IVec& lambda, const RootDatum& rd) {
  if (static_cast<int>(lambda.size()) != rd.dim)
    throw std::invalid_argument("translation vector has wrong dimension");
  return AffElt{lambda, rd.identity_weyl()};
}

AffElt aff_from_weyl(const WeylElt& u) {
  return AffElt{IVec(static_cast<size_t>(u.on_cochar.rows), 0), u};
}

AffElt aff_mul(const AffElt& a, const AffElt& b) {
  return AffElt{vec_add(a.lambda, a.u.act_cochar(b.lambda)), a.u.mul(b.u)};
}

AffElt aff_inverse(const AffElt& a) {
  WeylElt ui = a.u.inverse();
  return AffElt{vec_neg(ui.act_cochar(a.lambda)), ui};
}

AffElt frobenius_apply(const Frobenius& sigma, const AffElt& x) {
  return AffElt{sigma.apply_cochar(x.lambda), sigma.conj_weyl(x.u)};
}

int aff_length(const RootDatum& rd, const AffElt& x) {
  WeylElt uinv = x.u.inverse();
  i64 len = 0;
  for (int k = 0; k < rd.npos; ++k) {
    i64 c = dot(x.lambda, rd.roots[static_cast<size_t>(k)]);
    if (!rd.is_positive(rd.act_on_root(uinv, k))) c += 1;
    len += c < 0 ? -c : c;
  }
  return static_cast<int>(len);
}

std::string aff_key(const RootDatum& rd, const AffElt& x) {
  std::string s = "l:";
  for (size_t i = 0; i < x.lambda.size(); ++i)
    s += (i ? "," : "") + std::to_string(x.lambda[i]);
  s += ";u:";
  std::vector<int> word = rd.canonical_word(x.u);
  for (size_t i = 0; i < word.size(); ++i) s += (i ? "." : "") + std::to_string(word[i]);
  return s;
}

AffineRoot affine_root_action(const RootDatum& rd, const AffElt& x, const AffineRoot& a) {
  int img = rd.act_on_root(x.u, a.root_idx);
  return AffineRoot{img, a.level + dot(x.lambda, rd.roots[static_cast<size_t>(img)])};
}

AffineSystem build_affine_system(const RootDatum& rd) {
  AffineSystem sys;
  sys.ncomp = static_cast<int>(rd.components.size());
  for (int c = 0; c < sys.ncomp; ++c) {
    int theta = rd.highest_root[static_cast<size_t>(c)];
    AffElt s0{vec_neg(rd.coroots[static_cast<size_t>(theta)]), rd.reflection(theta)};
    sys.s_aff.push_back(s0);
    sys.component_of.push_back(c);
  }
  std::vector<int> comp_of_simple(static_cast<size_t>(rd.nsimple), -1);
  for (int c = 0; c < sys.ncomp; ++c)
    for (int j : rd.components[static_cast<size_t>(c)]) comp_of_simple[static_cast<size_t>(j)] = c;
  for (int i = 0; i < rd.nsimple; ++i) {
    sys.s_aff.push_back(aff_from_weyl(rd.simple_reflection(i)));
    sys.component_of.push_back(comp_of_simple[static_cast<size_t>(i)]);
  }
  sys.component_nodes.assign(static_cast<size_t>(sys.ncomp), {});
  for (size_t i = 0; i < sys.s_aff.size(); ++i)
    sys.component_nodes[static_cast<size_t>(sys.component_of[i])].push_back(static_cast<int>(i));
  return sys;
}

int saff_index(const AffineSystem& sys, const AffElt& x) {
  for (size_t i = 0; i < sys.s_aff.size(); ++i)
    if (sys.s_aff[i] == x) return static_cast<int>(i);
  return -1;
}

std::vector<int> saff_sigma_perm(const RootDatum& rd, const AffineSystem& sys,
                                 const Frobenius& sigma) {
  (void)rd;
  std::vector<int> perm;
  for (const AffElt& s : sys.s_aff) {
    int img = saff_index(sys, frobenius_apply(sigma, s));
    if (img < 0) throw internal_error("sigma does not permute the simple affine system");
    perm.push_back(img);
  }
  return perm;
}

std::vector<int> saff_omega_perm(const RootDatum& rd, const AffineSystem& sys,
                                 const AffElt& omega) {
  if (aff_length(rd, omega) != 0)
    throw std::invalid_argument("omega conjugation requires a length-zero element");
  AffElt inv = aff_inverse(omega);
  std::vector<int> perm;
  for (const AffElt& s : sys.s_aff) {
    int img = saff_index(sys, aff_mul(aff_mul(omega, s), inv));
    if (img < 0) throw internal_error("length-zero element does not normalize S_aff");
    perm.push_back(img);
  }
  return perm;
}

std::pair<AffElt, std::vector<int>> omega_word(const RootDatum& rd, const AffineSystem& sys,
                                               const AffElt& x) {
  std::vector<int> raw;
  AffElt cur = x;
  int len = aff_length(rd, cur);
  while (len > 0) {
    int pick = -1;
    for (size_t i = 0; i < sys.s_aff.size(); ++i) {
      if (aff_length(rd, aff_mul(sys.s_aff[i], cur)) < len) {
        pick = static_cast<int>(i);
        break;
      }
    }
    if (pick < 0) throw internal_error("no left descent on a positive-length element");
    raw.push_back(pick);
    cur = aff_mul(sys.s_aff[static_cast<size_t>(pick)], cur);
    --len;
  }
  // x = s_{raw_1} ... s_{raw_l} omega; rewrite as omega * conjugated letters.
  AffElt omega = cur;
  AffElt omega_inv = aff_inverse(omega);
  std::vector<int> word;
  for (int i : raw) {
    int j = saff_index(sys, aff_mul(aff_mul(omega_inv, sys.s_aff[static_cast<size_t>(i)]), omega));
    if (j < 0) throw internal_error("omega conjugate of a simple reflection left S_aff");
    word.push_back(j);
  }
  return {omega, word};
}

namespace {

// Basis of { c : <c, alpha> = 0 for all roots, sigma(c) = c }.
std::vector<IVec> central_invariant_basis(const RootDatum& rd, const Frobenius& sigma) {
  IMat stack(rd.nsimple + rd.dim, rd.dim);
  for (int j = 0; j < rd.nsimple; ++j)
    for (int k = 0; k < rd.dim; ++k) stack.at(j, k) = rd.simple_roots[static_cast<size_t>(j)][static_cast<size_t>(k)];
  for (int r = 0; r < rd.dim; ++r)
    for (int k = 0; k < rd.dim; ++k)
      stack.at(rd.nsimple + r, k) = sigma.on_cochar.at(r, k) - (r == k ? 1 : 0);
  return integer_kernel(stack);
}

}  // namespace

std::vector<AffElt> omega_reps(const RootDatum& rd, const AffineSystem& sys,
                               const Frobenius& sigma) {
  std::vector<IVec> central = central_invariant_basis(rd, sigma);
  IMat a(rd.dim, rd.nsimple + static_cast<int>(central.size()));
  for (int i = 0; i < rd.nsimple; ++i)
    for (int r = 0; r < rd.dim; ++r) a.at(r, i) = rd.simple_coroots[static_cast<size_t>(i)][static_cast<size_t>(r)];
  for (size_t c = 0; c < central.size(); ++c)
    for (int r = 0; r < rd.dim; ++r) a.at(r, rd.nsimple + static_cast<int>(c)) = central[c][static_cast<size_t>(r)];
  SmithForm sf = smith_form(a);
  if (sf.rank < rd.dim)
    throw std::invalid_argument(
        "Omega is infinite modulo central sigma-invariant translations; cannot enumerate");
  IMat uinv = inverse_unimodular(sf.U);
  std::vector<IVec> residues{{}};
  for (int i = 0; i < rd.dim; ++i) {
    std::vector<IVec> grown;
    for (const IVec& r : residues)
      for (i64 v = 0; v < sf.d[static_cast<size_t>(i)]; ++v) {
        IVec r2 = r;
        r2.push_back(v);
        grown.push_back(r2);
      }
    residues = grown;
  }
  std::vector<AffElt> reps;
  for (const IVec& r : residues) {
    AffElt x = aff_translation(uinv.apply(r), rd);
    // peel to the length-zero coset representative
    int len = aff_length(rd, x);
    while (len > 0) {
      bool moved = false;
      for (size_t i = 0; i < sys.s_aff.size(); ++i) {
        if (aff_length(rd, aff_mul(sys.s_aff[i], x)) < len) {
          x = aff_mul(sys.s_aff[i], x);
          --len;
          moved = true;
          break;
        }
      }
      if (!moved) throw internal_error("no descent while reducing an Omega representative");
    }
    reps.push_back(x);
  }
  return reps;
}

std::vector<AffElt> enumerate_elements(const RootDatum& rd, const AffineSystem& sys,
                                       const Frobenius& sigma, int max_length) {
  std::vector<AffElt> out;
  std::unordered_set<std::string> seen;
  std::deque<std::pair<AffElt, int>> queue;
  for (const AffElt& w : omega_reps(rd, sys, sigma)) {
    if (seen.insert(aff_key(rd, w)).second) queue.push_back({w, 0});
  }
  while (!queue.empty()) {
    auto [x, len] = queue.front();
    queue.pop_front();
    out.push_back(x);
    if (len == max_length) continue;
    for (const AffElt& s : sys.s_aff) {
      AffElt y = aff_mul(x, s);
      if (aff_length(rd, y) != len + 1) continue;
      if (seen.insert(aff_key(rd, y)).second) queue.push_back({y, len + 1});
    }
  }
  std::sort(out.begin(), out.end(), [&](const AffElt& a, const AffElt& b) {
    int la = aff_length(rd, a), lb = aff_length(rd, b);
    if (la != lb) return la < lb;
    return aff_key(rd, a) < aff_key(rd, b);
  });
  return out;
}

}  // namespace affweyl
