#pragma once

#include <string>
#include <utility>
#include <vector>

#include "affweyl/root_datum.hpp"

// Extended affine Weyl group X_*(T) x| W. Elements are written t^lambda u.
// The base alcove is the antidominant one: every positive root evaluates in
// (-1,0) on it, and the extra simple reflection of each irreducible
// component is s_0 = t^{-theta^vee} s_theta for the highest root theta.

namespace affweyl {

struct AffElt {
  IVec lambda;
  WeylElt u;

  bool operator==(const AffElt& o) const { return lambda == o.lambda && u == o.u; }
  bool operator!=(const AffElt& o) const { return !(*this == o); }
  bool is_identity() const { return is_zero(lambda) && u.is_identity(); }
};

struct AffHash {
  size_t operator()(const AffElt& x) const {
    size_t h = VecHash{}(x.lambda);
    h ^= WeylHash{}(x.u) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

AffElt aff_identity(const RootDatum& rd);
AffElt aff_translation(const IVec& lambda, const RootDatum& rd);
AffElt aff_from_weyl(const WeylElt& u);
AffElt aff_mul(const AffElt& a, const AffElt& b);
AffElt aff_inverse(const AffElt& a);
AffElt frobenius_apply(const Frobenius& sigma, const AffElt& x);

// Number of affine hyperplanes separating the base alcove from x(base
// alcove), summed in closed form per positive root.
int aff_length(const RootDatum& rd, const AffElt& x);

// Deterministic element key: translation part plus the canonical word of the
// finite part ("l:-2;u:0").
std::string aff_key(const RootDatum& rd, const AffElt& x);

// Affine root beta + k delta, with beta stored as a root index.
struct AffineRoot {
  int root_idx;
  i64 level;
  bool operator==(const AffineRoot& o) const {
    return root_idx == o.root_idx && level == o.level;
  }
};

// x (beta,k) = (u beta, k + <lambda, u beta>): transport of root-subgroup
// filtration levels under conjugation.
AffineRoot affine_root_action(const RootDatum& rd, const AffElt& x, const AffineRoot& a);

// Simple affine system: per irreducible component the reflection
// s_0 = t^{-theta^vee} s_theta first (indices 0..ncomp-1), then the finite
// simple reflections (ncomp + i for simple root i).
struct AffineSystem {
  int ncomp = 0;
  std::vector<AffElt> s_aff;
  std::vector<int> component_of;                // per s_aff index
  std::vector<std::vector<int>> component_nodes;  // per component, s_aff indices
};

AffineSystem build_affine_system(const RootDatum& rd);

// Index of an element within s_aff, or -1.
int saff_index(const AffineSystem& sys, const AffElt& x);

// Permutation of S_aff induced by the Frobenius.
std::vector<int> saff_sigma_perm(const RootDatum& rd, const AffineSystem& sys,
                                 const Frobenius& sigma);

// Permutation of S_aff induced by conjugation s -> omega s omega^{-1}.
std::vector<int> saff_omega_perm(const RootDatum& rd, const AffineSystem& sys,
                                 const AffElt& omega);

// x = omega * s_{i_1} ... s_{i_l} with l = length(x), greedy left-descent
// word, omega of length zero.
std::pair<AffElt, std::vector<int>> omega_word(const RootDatum& rd, const AffineSystem& sys,
                                               const AffElt& x);

// Representatives of the length-zero elements Omega, modulo translations by
// central sigma-invariant cocharacters (all sweep predicates are invariant
// under those). Throws std::invalid_argument when infinite even after that.
std::vector<AffElt> omega_reps(const RootDatum& rd, const AffineSystem& sys,
                               const Frobenius& sigma);

// All elements with length <= max_length, modulo central sigma-invariant
// translations; sorted by (length, key).
std::vector<AffElt> enumerate_elements(const RootDatum& rd, const AffineSystem& sys,
                                       const Frobenius& sigma, int max_length);

}  // namespace affweyl
