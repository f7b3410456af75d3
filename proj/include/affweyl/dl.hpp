#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "affweyl/newton.hpp"

// Deligne-Lusztig reduction: walk the constant-length sigma-conjugation
// orbit until a pivot s with len(s y sigma(s)) = len(y) - 2 appears, then
// split into (s y, s y sigma(s)); minimal elements are leaves carrying their
// own class. The recursion computes, per element: the leaf class set
// ("B(G)_x"), class polynomials, and dimensions.

namespace affweyl {

// Integer polynomial in q: ascending coefficients, no trailing zeros.
struct Poly {
  std::vector<i64> c;

  static Poly one() { return Poly{{1}}; }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  i64 at_one() const;
  Poly plus(const Poly& o) const;
  Poly times_q() const;
  Poly times_q_minus_one() const;
  std::string to_string() const;
  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
};

// Reduction result for one element. Classes are sorted by sigma_class_less;
// polys and dims are aligned with classes.
struct DLRecord {
  int length = 0;
  std::vector<SigmaClass> classes;
  std::vector<Poly> polys;
  std::vector<i64> dims;

  bool operator==(const DLRecord& o) const {
    return length == o.length && classes == o.classes && polys == o.polys && dims == o.dims;
  }
  bool operator!=(const DLRecord& o) const { return !(*this == o); }
  int find(const SigmaClass& c) const;  // index or -1
};

// Minimal-length certification: either the closed constant-length orbit or
// the first length-dropping pivot in deterministic scan order (BFS by
// canonical key, pivots by index).
struct Minimality {
  bool minimal = false;
  std::vector<std::string> orbit;  // canonical keys, sorted; full orbit iff minimal
  AffElt base;                     // element carrying the drop (when not minimal)
  int pivot = -1;                  // s_aff index
};

Minimality minimality(const Group& g, const AffElt& x, bool pivot_descending = false);

struct DLStats {
  i64 reductions = 0;    // memo misses that ran an orbit scan
  i64 memo_hits = 0;
  i64 cache_loaded = 0;  // records adopted from a cache file
};

class DLEngine {
 public:
  explicit DLEngine(Group g, bool pivot_descending = false)
      : g_(std::move(g)), pivot_descending_(pivot_descending) {}

  const Group& group() const { return g_; }
  const DLRecord& analyze(const AffElt& x);
  const DLStats& stats() const { return stats_; }
  size_t memo_size() const { return memo_.size(); }

  // Union of another engine's memo table; existing entries win (idempotent).
  void merge_from(const DLEngine& other);

  // JSON-lines persistence, first line a fingerprint header; sorted by key.
  void save_cache(const std::string& path) const;
  // Number of records loaded; fingerprint mismatch loads nothing and warns.
  int load_cache(const std::string& path);

 private:
  Group g_;
  bool pivot_descending_;
  std::unordered_map<std::string, DLRecord> memo_;
  DLStats stats_;
};

std::vector<SigmaClass> b_of_x(DLEngine& e, const AffElt& x);

// The dominance maximum of the leaf classes; throws internal_error with the
// maximal antichain if no single maximum exists.
SigmaClass generic_class(DLEngine& e, const AffElt& x);

}  // namespace affweyl
