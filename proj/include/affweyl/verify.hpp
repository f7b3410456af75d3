#pragma once

#include <string>
#include <vector>

#include "affweyl/alcove.hpp"
#include "affweyl/dl.hpp"
#include "json.hpp"

// Sweep harness: enumerate all elements up to a length bound and check, per
// element, the Levi-transfer bijection ("theorem1"), the Newton-point
// congruence and pairing identity ("corollary"), the emptiness criterion for
// the basic stratum ("lim"), and the class-polynomial transfer ("classpoly").

namespace affweyl {

// Group selection by name: Cartan type ("A1", "A1xA1", "C2", "GL2", ...),
// lattice scheme ("sc", "ad", "gl"), sigma as a permutation of the simple
// nodes (empty = identity).
struct GroupConfig {
  std::string type = "A1";
  std::string lattice = "sc";
  std::vector<int> sigma;
};

Group group_from_config(const GroupConfig& c);

struct SweepConfig {
  GroupConfig group;
  int max_length = 6;
  std::vector<std::string> checks{"theorem1", "corollary", "lim", "classpoly"};
  int workers = 1;
  std::string cache_path;       // empty: in-memory only
  bool pivot_descending = false;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::vector<nlohmann::json> counterexamples;  // sorted by serialized form
  nlohmann::json data = nlohmann::json::object();  // reported, not asserted
};

struct VerificationReport {
  nlohmann::json config;
  i64 elements_swept = 0;
  i64 alcove_pairs = 0;      // normalized pairs summed over swept elements
  i64 classes_computed = 0;  // distinct classes across all b_of_x sets
  std::vector<CheckResult> checks;
  nlohmann::json cache_stats;
  double seconds = 0.0;

  bool all_pass() const;
  // Deterministic for a fixed config except for the "timing" and
  // "cache_stats" keys (warm and cold caches do different amounts of work).
  nlohmann::json to_json() const;
};

// Runs the checks selected in cfg.checks (normalized to the canonical order
// theorem1, corollary, lim, classpoly). Throws std::invalid_argument for an
// unknown check name, and for "lim" when the diagram is not sigma-connected.
VerificationReport run_checks(const SweepConfig& cfg);

// Single-check conveniences.
VerificationReport verify_theorem1(SweepConfig cfg);
VerificationReport verify_corollary(SweepConfig cfg);
VerificationReport verify_lim(SweepConfig cfg);
VerificationReport verify_classpoly_correspondence(SweepConfig cfg);

}  // namespace affweyl
