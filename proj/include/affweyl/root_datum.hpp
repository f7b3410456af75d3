#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affweyl/ints.hpp"
#include "affweyl/rat.hpp"

// Based root data over an explicit cocharacter lattice Z^dim. Simple coroots
// live in cocharacter coordinates, simple roots in the dual (character)
// coordinates; the pairing is the standard dot product. Lattice choices:
//   sc     X_* = coroot lattice (basis = simple coroots)
//   ad     X_* = coweight lattice (basis = fundamental coweights)
//   gl     X_* = Z^n with type A_{n-1} roots e_i - e_{i+1} (GL_n)
//   basis: rows of an explicit matrix, in fundamental-coweight coordinates
//          (semisimple types only; must contain all coroots)

namespace affweyl {

// Raised on violated internal invariants (not user input); the CLI maps it
// to its own exit code.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& m) : std::logic_error(m) {}
};

// Finite Weyl group element as its action on both sides of the pairing.
// on_char = (on_cochar^{-1})^T, so inversion is transposition.
struct WeylElt {
  IMat on_cochar;
  IMat on_char;

  bool operator==(const WeylElt& o) const { return on_cochar == o.on_cochar; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }
  bool is_identity() const { return on_cochar.is_identity(); }
  WeylElt inverse() const { return WeylElt{on_char.transposed(), on_cochar.transposed()}; }
  WeylElt mul(const WeylElt& o) const {
    return WeylElt{on_cochar.mul(o.on_cochar), on_char.mul(o.on_char)};
  }
  IVec act_cochar(const IVec& v) const { return on_cochar.apply(v); }
  IVec act_char(const IVec& v) const { return on_char.apply(v); }
  RatVec act_cochar(const RatVec& v) const;
};

struct WeylHash {
  size_t operator()(const WeylElt& w) const {
    return VecHash{}(w.on_cochar.a);
  }
};

struct RootDatum {
  std::string type_string;     // "A2", "A1xA1", "GL2", "A2|levi{0}", ...
  std::string lattice_string;  // "sc", "ad", "gl", "basis:..."
  int dim = 0;                 // rank of the cocharacter lattice
  int nsimple = 0;

  std::vector<IVec> simple_roots;    // character coordinates
  std::vector<IVec> simple_coroots;  // cocharacter coordinates
  IMat cartan;                       // cartan(i,j) = <coroot_i, root_j>

  // All roots; index k < npos is positive, index npos+k is -roots[k].
  int npos = 0;
  std::vector<IVec> roots;          // character coordinates
  std::vector<IVec> coroots;        // cocharacter coordinates
  std::vector<IVec> root_scoords;   // coordinates in the simple-root basis

  std::vector<std::vector<int>> components;  // connected components of Delta
  std::vector<int> highest_root;             // per component, index < npos
  IVec two_rho;                              // sum of positive roots
  IVec two_rho_check;                        // sum of positive coroots

  // --- queries -------------------------------------------------------------
  int root_index(const IVec& root_char) const;  // -1 if not a root
  int negate_root(int idx) const { return idx < npos ? idx + npos : idx - npos; }
  bool is_positive(int idx) const { return idx < npos; }
  bool semisimple() const { return dim == nsimple; }

  WeylElt identity_weyl() const;
  WeylElt simple_reflection(int i) const;
  WeylElt reflection(int root_idx) const;
  int act_on_root(const WeylElt& w, int root_idx) const;

  int finite_length(const WeylElt& w) const;  // inversion count
  std::vector<int> canonical_word(const WeylElt& w) const;
  WeylElt from_word(const std::vector<int>& word) const;

  bool is_dominant(const IVec& v) const;
  bool is_dominant(const RatVec& v) const;
  // Greedy first-descent; returns (dominant vector, witness w with w v = dom).
  std::pair<IVec, WeylElt> dominant_representative(const IVec& v) const;
  std::pair<RatVec, WeylElt> dominant_representative(const RatVec& v) const;

  WeylElt min_coset_representative(WeylElt w, const std::vector<int>& J) const;
  bool in_parabolic(const WeylElt& w, const std::vector<int>& J) const;
  std::vector<WeylElt> enumerate_weyl() const;
  std::vector<WeylElt> min_coset_reps(const std::vector<int>& J) const;

  // Positive roots lying in span(J); returned as indices < npos.
  std::vector<int> levi_positive_roots(const std::vector<int>& J) const;
  IVec two_rho_levi(const std::vector<int>& J) const;

  // Sub-datum on the simple set J (same lattice and ambient coordinates).
  RootDatum levi(const std::vector<int>& J) const;
};

// type: one or more factors joined by 'x', each A<n>|B<n>|C<n>|D<n>|E<6-8>|
// F4|G2, or GL<n> (single factor only, forces the gl lattice).
// lattice: "sc" (default), "ad", "gl", or "basis:[[..],[..]]" rows in
// fundamental-coweight coordinates.
RootDatum build_root_datum(const std::string& type, const std::string& lattice = "sc");

// Frobenius, modeled as a diagram automorphism acting on the lattice.
struct Frobenius {
  std::vector<int> node_perm;  // image of each simple index
  IMat on_cochar;
  IMat on_cochar_inv;
  IMat on_char;  // contragredient
  IMat on_char_inv;
  int order = 1;

  bool is_identity() const { return on_cochar.is_identity(); }
  IVec apply_cochar(const IVec& v) const { return on_cochar.apply(v); }
  IVec apply_char(const IVec& v) const { return on_char.apply(v); }
  WeylElt conj_weyl(const WeylElt& w) const {
    return WeylElt{on_cochar.mul(w.on_cochar).mul(on_cochar_inv),
                   on_char.mul(w.on_char).mul(on_char_inv)};
  }
};

// node_perm empty means identity. Throws std::invalid_argument if the
// permutation does not preserve the Cartan matrix or the lattice.
Frobenius build_frobenius(const RootDatum& rd, const std::vector<int>& node_perm = {});

// Restriction to a Levi on simple set J (requires node_perm(J) = J);
// same lattice action, node indices rebased to positions in J.
Frobenius restrict_frobenius(const RootDatum& rd, const Frobenius& sigma,
                             const std::vector<int>& J);

}  // namespace affweyl
