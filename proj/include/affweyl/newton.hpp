#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affweyl/group.hpp"

// sigma-conjugacy class invariants. A class is identified by its dominant
// Newton point (exact rationals) and its Kottwitz point (residues in the
// SNF presentation of X_* / (Z Phi^vee + (sigma - 1) X_*)).

namespace affweyl {

struct SigmaClass {
  RatVec nu;                // dominant for the scope's simple system
  std::vector<i64> kappa;   // residues against KPresentation::factors
  std::string scope;        // fingerprint of the group it lives in

  bool operator==(const SigmaClass& o) const {
    return nu == o.nu && kappa == o.kappa && scope == o.scope;
  }
  bool operator!=(const SigmaClass& o) const { return !(*this == o); }
};

// Deterministic total order / serialization key (scope-free; scopes never mix
// inside one container).
bool sigma_class_less(const SigmaClass& a, const SigmaClass& b);
std::string class_key(const SigmaClass& c);

// x sigma(x) sigma^2(x) ... sigma^{n-1}(x). Satisfies
// x^{sigma,m+n} = x^{sigma,m} sigma^m(x^{sigma,n}).
AffElt twisted_power(const Group& g, const AffElt& x, int n);

// Smallest n = k * ord(sigma) such that x^{sigma,n} is a pure translation.
// The finite parts of the k-step walk live in a cyclic subgroup of W, so this
// terminates; a repeated finite part before the identity is an internal error.
int newton_exponent(const Group& g, const AffElt& x);

// Dominant representative of lambda(x^{sigma,n}) / n at n = newton_exponent.
RatVec newton_point(const Group& g, const AffElt& x);

// Same via an explicit exponent; nullopt unless sigma^n = id and x^{sigma,n}
// is a pure translation (any multiple of newton_exponent qualifies).
std::optional<RatVec> newton_point_at(const Group& g, const AffElt& x, int n);

// Image of the translation part in the presented coinvariant quotient.
std::vector<i64> kottwitz_point(const Group& g, const AffElt& x);

SigmaClass class_of(const Group& g, const AffElt& x);

// kappa(c1) == kappa(c2) and nu(c2) - nu(c1) a nonnegative rational
// combination of simple coroots.
bool dominance_leq(const Group& g, const SigmaClass& c1, const SigmaClass& c2);

// Central Newton point: pairs to zero with every simple (hence every) root.
bool is_basic(const Group& g, const SigmaClass& c);

// The unique basic class with kappa = kottwitz_point(x): nu is the
// sigma-average of the projection of lambda to the Phi-perpendicular
// subspace. Depends only on kappa(x).
SigmaClass basic_class_with_kappa(const Group& g, const AffElt& x);

// Transport of a Levi class into the ambient group: dominantize nu, push
// kappa through a lattice lift. Requires the Levi to share g's lattice.
SigmaClass embed_levi_class(const Group& g, const Group& m, const SigmaClass& c);

}  // namespace affweyl
