#pragma once

#include <string>
#include <vector>

#include "affweyl/affine.hpp"
#include "affweyl/root_datum.hpp"

namespace affweyl {

// Smith-normal-form presentation of X_* / (Z Phi^vee + (sigma - 1) X_*).
// Residues are reported against the invariant factors > 1 followed by the
// free coordinates (factor 0 = a Z summand).
struct KPresentation {
  IMat u;        // unimodular row transform from the SNF
  IMat u_inv;
  std::vector<i64> factors;   // kept invariant factors (>1), then 0 per free row
  std::vector<int> row_of;    // U-row index backing each kept factor
  std::vector<i64> residues(const IVec& lambda) const;
  IVec preimage(const std::vector<i64>& residues) const;  // some lattice lift
};

KPresentation build_kpresentation(const RootDatum& rd, const Frobenius& sigma);

// Everything needed to compute with one group: datum, Frobenius, simple
// affine system with its sigma action, and the Kottwitz quotient.
struct Group {
  RootDatum rd;
  Frobenius sigma;
  AffineSystem sys;
  std::vector<int> sigma_saff;  // sigma as a permutation of s_aff indices
  KPresentation kott;
  std::string scope;        // "G" for an ambient group, "levi{..}" for a Levi
  std::string fingerprint;  // identifies (type, lattice, sigma, scope)

  int length(const AffElt& x) const { return aff_length(rd, x); }
  std::string key(const AffElt& x) const { return aff_key(rd, x); }
};

Group make_group(const RootDatum& rd, const Frobenius& sigma, const std::string& scope = "G");

// The standard Levi on simple subset J with the restricted Frobenius
// (requires sigma(J) = J). Same lattice and ambient coordinates.
Group make_levi_group(const Group& g, const std::vector<int>& J);

}  // namespace affweyl
