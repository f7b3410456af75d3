#pragma once

#include <vector>

#include "affweyl/newton.hpp"

// (J,w,sigma)-alcove elements: detection via root-subgroup filtration
// transport, normalization to minimal coset representatives, enumeration
// over sigma-stable J, and sigma-support / sphericity.

namespace affweyl {

// Filtration level of U_beta at the base (antidominant) alcove: the affine
// root (beta, k) is nonnegative there iff k >= c_I(beta).
i64 iwahori_level(const RootDatum& rd, int root_idx);

struct AlcovePair {
  std::vector<int> J;  // sorted sigma-stable subset of the simple nodes
  WeylElt w;
  bool trivial = false;  // J = Delta: always an alcove pair, excluded from the criterion
};

struct AlcoveDiag {
  bool cond_a = false;    // finite part of w^{-1} x sigma(w) lies in W_J
  bool cond_b = false;    // filtration containment for all alpha in Phi+ \ Phi_J
  int witness_root = -1;  // first positive root index violating (b), -1 if none
  bool pass() const { return cond_a && cond_b; }
};

// Throws std::invalid_argument unless sigma(J) = J.
AlcoveDiag alcove_diagnose(const Group& g, const AffElt& x, const std::vector<int>& J,
                           const WeylElt& w);
bool is_alcove_element(const Group& g, const AffElt& x, const std::vector<int>& J,
                       const WeylElt& w);

// Replace w by its minimal coset representative and conjugate:
// x~ = w_min^{-1} x sigma(w_min). Throws if (x,J,w) is not an alcove triple.
struct NormalizedPair {
  AlcovePair pair;
  AffElt conjugated;
};
NormalizedPair normalize_pair(const Group& g, const AffElt& x, const std::vector<int>& J,
                              const WeylElt& w);

AffElt conjugated_element(const Group& g, const AffElt& x, const AlcovePair& p);

// sigma-stable subsets of the simple nodes, ordered by (size, lex).
std::vector<std::vector<int>> sigma_stable_subsets(const Group& g);

// All normalized alcove pairs of x: sigma-stable J (J = Delta included,
// tagged trivial) crossed with minimal coset representatives of W/W_J.
std::vector<AlcovePair> enumerate_alcove_pairs(const Group& g, const AffElt& x);

// Closure of the canonical-word letters under s -> sigma(omega s omega^{-1});
// spherical iff the support misses at least one node in every irreducible
// affine component (such subsets generate finite reflection groups).
struct SigmaSupport {
  std::vector<int> nodes;  // s_aff indices, sorted
  bool spherical = false;
};
SigmaSupport sigma_support(const Group& g, const AffElt& x);

// sigma permutes the irreducible diagram components transitively.
bool sigma_connected(const Group& g);

}  // namespace affweyl
