#pragma once

// Convention oracles used only by tests: independent geometric computations
// that the closed-form production code must reproduce.

#include "affweyl/affine.hpp"
#include "affweyl/rat.hpp"
#include "affweyl/root_datum.hpp"
#include "doctest.h"

namespace affweyl::oracles {

inline i64 rat_floor(const Rat& r) {
  i64 q = r.num / r.den;
  if (r.num < 0 && r.num % r.den != 0) --q;
  return q;
}

// An exact interior point of the antidominant base alcove:
// p = -2rho^vee / (H+1) with H = max over positive beta of <2rho^vee, beta>.
inline RatVec base_alcove_interior(const RootDatum& rd) {
  i64 h = 0;
  for (int k = 0; k < rd.npos; ++k) h = std::max(h, dot(rd.two_rho_check, rd.roots[k]));
  RatVec p(rd.dim, Rat(0));
  for (int i = 0; i < rd.dim; ++i) p[i] = Rat(-rd.two_rho_check[i], h + 1);
  for (int k = 0; k < rd.npos; ++k) {
    Rat v = rdot(p, rd.roots[k]);
    REQUIRE(v > Rat(-1));
    REQUIRE(v < Rat(0));
  }
  return p;
}

// Hyperplane-separation count between the base alcove and x(base alcove):
// for each positive root, the number of integers strictly between the values
// of the root at an interior point and at its image.
inline int length_by_separation(const RootDatum& rd, const AffElt& x) {
  RatVec p = base_alcove_interior(rd);
  RatVec xp = x.u.act_cochar(p);
  for (int i = 0; i < rd.dim; ++i) xp[i] = xp[i] + Rat(x.lambda[i]);
  i64 total = 0;
  for (int k = 0; k < rd.npos; ++k) {
    Rat a = rdot(p, rd.roots[k]);
    Rat b = rdot(xp, rd.roots[k]);
    REQUIRE_FALSE(a.is_integer());
    REQUIRE_FALSE(b.is_integer());
    i64 d = rat_floor(b) - rat_floor(a);
    total += d < 0 ? -d : d;
  }
  return static_cast<int>(total);
}

}  // namespace affweyl::oracles
