#include "affweyl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace affweyl {

namespace {

using nlohmann::json;

const std::vector<std::string> kCheckOrder{"theorem1", "corollary", "lim", "classpoly"};

std::vector<std::string> normalize_checks(const std::vector<std::string>& requested) {
  for (const auto& c : requested) {
    if (std::find(kCheckOrder.begin(), kCheckOrder.end(), c) == kCheckOrder.end())
      throw std::invalid_argument("unknown check: " + c);
  }
  std::vector<std::string> out;
  for (const auto& c : kCheckOrder) {
    if (std::find(requested.begin(), requested.end(), c) != requested.end()) out.push_back(c);
  }
  if (out.empty()) throw std::invalid_argument("no checks selected");
  return out;
}

json nu_json(const RatVec& nu) {
  json a = json::array();
  for (const auto& r : nu) a.push_back(r.to_string());
  return a;
}

json class_json(const SigmaClass& c) { return json{{"nu", nu_json(c.nu)}, {"kappa", c.kappa}}; }

Rat pair_with(const RatVec& v, const IVec& w) {
  Rat s(0);
  for (size_t i = 0; i < v.size(); ++i) s = s + v[i] * Rat(w[i]);
  return s;
}

struct Flags {
  bool theorem1 = false;
  bool corollary = false;
  bool lim = false;
  bool classpoly = false;
};

// Per-worker accumulator. The ambient engine starts as a copy of the warm
// seed engine; Levi engines are created on demand per subset J.
struct WorkerState {
  DLEngine engine;
  std::vector<std::pair<std::vector<int>, DLEngine>> levis;
  std::map<std::string, std::vector<json>> cex;
  std::set<std::string> class_keys;
  i64 pairs = 0;
  i64 t1_pairs = 0;
  i64 cp_pairs = 0;
  i64 integral_holds = 0;
  i64 integral_fails = 0;
  std::string integral_witness;  // serialized; lexicographic minimum kept
  i64 empty_strata = 0;

  explicit WorkerState(const DLEngine& seed) : engine(seed) {}
};

DLEngine& levi_engine(WorkerState& ws, const Group& g, const std::vector<int>& J,
                      bool pivot_descending) {
  for (auto& kv : ws.levis) {
    if (kv.first == J) return kv.second;
  }
  ws.levis.emplace_back(J, DLEngine(make_levi_group(g, J), pivot_descending));
  return ws.levis.back().second;
}

void note_witness(WorkerState& ws, const json& j) {
  std::string s = j.dump();
  if (ws.integral_witness.empty() || s < ws.integral_witness) ws.integral_witness = std::move(s);
}

// The Levi-transfer checks for one normalized pair: kappa_M constancy on
// B(M)_xt, injectivity of the embedding, image set = B(G)_x, and exact
// Newton-point preservation (the M-dominant point is already G-dominant).
void check_theorem1(WorkerState& ws, const Group& g, const Group& m, const DLRecord& rec,
                    const DLRecord& mrec, const AffElt& xt, const json& pairj) {
  auto& out = ws.cex["theorem1"];
  std::vector<i64> kx = kottwitz_point(m, xt);
  for (const auto& c : mrec.classes) {
    if (c.kappa != kx) {
      json j = pairj;
      j["kind"] = "kappa_m_not_constant";
      j["m_class"] = class_json(c);
      j["kappa_m_of_element"] = kx;
      out.push_back(std::move(j));
    }
  }

  std::vector<SigmaClass> image;
  image.reserve(mrec.classes.size());
  for (const auto& c : mrec.classes) {
    SigmaClass e = embed_levi_class(g, m, c);
    if (e.nu != c.nu) {
      json j = pairj;
      j["kind"] = "newton_point_changed";
      j["m_class"] = class_json(c);
      j["g_class"] = class_json(e);
      out.push_back(std::move(j));
    }
    image.push_back(std::move(e));
  }
  std::sort(image.begin(), image.end(), sigma_class_less);
  for (size_t i = 1; i < image.size(); ++i) {
    if (image[i] == image[i - 1]) {
      json j = pairj;
      j["kind"] = "not_injective";
      j["g_class"] = class_json(image[i]);
      out.push_back(std::move(j));
      break;
    }
  }
  bool same = image.size() == rec.classes.size();
  for (size_t i = 0; same && i < image.size(); ++i) same = image[i] == rec.classes[i];
  if (!same) {
    json mi = json::array();
    for (const auto& c : image) mi.push_back(class_json(c));
    json gi = json::array();
    for (const auto& c : rec.classes) gi.push_back(class_json(c));
    json j = pairj;
    j["kind"] = "image_mismatch";
    j["m_image"] = std::move(mi);
    j["bgx"] = std::move(gi);
    out.push_back(std::move(j));
  }
}

// Pushforward of the Levi class polynomials must reproduce the ambient ones
// as a map SigmaClass -> polynomial.
void check_classpoly_pair(WorkerState& ws, const Group& g, const Group& m, const DLRecord& rec,
                          const DLRecord& mrec, const json& pairj) {
  std::map<std::string, Poly> pushed;
  for (size_t i = 0; i < mrec.classes.size(); ++i) {
    SigmaClass e = embed_levi_class(g, m, mrec.classes[i]);
    auto [it, fresh] = pushed.emplace(class_key(e), mrec.polys[i]);
    if (!fresh) it->second = it->second.plus(mrec.polys[i]);
  }
  std::map<std::string, Poly> ambient;
  for (size_t i = 0; i < rec.classes.size(); ++i)
    ambient.emplace(class_key(rec.classes[i]), rec.polys[i]);
  if (pushed == ambient) return;

  json diff = json::array();
  auto note = [&diff](const std::string& key, const Poly* mp, const Poly* gp) {
    diff.push_back(json{{"class", key},
                        {"pushed", mp ? mp->to_string() : "absent"},
                        {"ambient", gp ? gp->to_string() : "absent"}});
  };
  for (const auto& [key, poly] : pushed) {
    auto it = ambient.find(key);
    if (it == ambient.end())
      note(key, &poly, nullptr);
    else if (!(it->second == poly))
      note(key, &poly, &it->second);
  }
  for (const auto& [key, poly] : ambient) {
    if (pushed.find(key) == pushed.end()) note(key, nullptr, &poly);
  }
  json j = pairj;
  j["kind"] = "polynomial_mismatch";
  j["mismatches"] = std::move(diff);
  ws.cex["classpoly"].push_back(std::move(j));
}

// Ambient per-element polynomial invariants: no zero polynomial (the support
// is exactly b_of_x), degrees bounded by the length, and sum 1 at q = 1.
void check_classpoly_element(WorkerState& ws, const DLRecord& rec, const json& elemj) {
  auto& out = ws.cex["classpoly"];
  i64 sum = 0;
  for (size_t i = 0; i < rec.polys.size(); ++i) {
    sum += rec.polys[i].at_one();
    if (rec.polys[i].is_zero()) {
      json j = elemj;
      j["kind"] = "zero_polynomial";
      j["class"] = class_json(rec.classes[i]);
      out.push_back(std::move(j));
    }
    if (rec.polys[i].degree() > rec.length) {
      json j = elemj;
      j["kind"] = "degree_exceeds_length";
      j["class"] = class_json(rec.classes[i]);
      j["poly"] = rec.polys[i].to_string();
      out.push_back(std::move(j));
    }
  }
  if (sum != 1) {
    json j = elemj;
    j["kind"] = "at_one_sum";
    j["sum"] = sum;
    out.push_back(std::move(j));
  }
}

// Newton-point congruence per subset J carrying an alcove pair: pairwise
// differences inside b_of_x lie in the rational span of the J-coroots, and
// the generic class pairs to zero with 2rho - 2rho_J against every class.
// Whether the differences lie in the integral coroot lattice of J is tallied
// as data, not asserted. Witness existence over all w reduces to the
// normalized enumeration because the conditions are W_J-coset invariant.
void check_corollary(WorkerState& ws, const Group& g, const DLRecord& rec, const SigmaClass& top,
                     const std::vector<int>& J, const WeylElt& witness, const json& elemj) {
  auto& out = ws.cex["corollary"];
  json pairj = elemj;
  pairj["J"] = J;
  pairj["w"] = g.rd.canonical_word(witness);

  std::vector<IVec> columns;
  columns.reserve(J.size());
  for (int j : J) columns.push_back(g.rd.simple_coroots[static_cast<size_t>(j)]);
  for (size_t a = 0; a < rec.classes.size(); ++a) {
    for (size_t b = a + 1; b < rec.classes.size(); ++b) {
      RatVec diff = rvec_sub(rec.classes[b].nu, rec.classes[a].nu);
      auto sol = solve_columns(columns, diff);
      if (!sol) {
        json j = pairj;
        j["kind"] = "not_in_levi_span";
        j["classes"] = json::array({class_json(rec.classes[a]), class_json(rec.classes[b])});
        out.push_back(std::move(j));
        continue;
      }
      bool integral = true;
      for (const auto& r : *sol) integral = integral && r.is_integer();
      if (integral) {
        ++ws.integral_holds;
      } else {
        ++ws.integral_fails;
        json j = pairj;
        j["classes"] = json::array({class_json(rec.classes[a]), class_json(rec.classes[b])});
        note_witness(ws, j);
      }
    }
  }

  IVec rho_diff = g.rd.two_rho;
  IVec rho_j = g.rd.two_rho_levi(J);
  for (size_t i = 0; i < rho_diff.size(); ++i) rho_diff[i] -= rho_j[i];
  for (const auto& c : rec.classes) {
    if (!pair_with(rvec_sub(top.nu, c.nu), rho_diff).is_zero()) {
      json j = pairj;
      j["kind"] = "pairing_nonzero";
      j["generic"] = class_json(top);
      j["class"] = class_json(c);
      out.push_back(std::move(j));
    }
  }
}

// Emptiness of the basic stratum iff (support not spherical) and (a proper
// alcove pair exists).
void check_lim(WorkerState& ws, const Group& g, const DLRecord& rec, const AffElt& x,
               const std::vector<AlcovePair>& pairs, const json& elemj) {
  SigmaClass basic = basic_class_with_kappa(g, x);
  bool empty_stratum = rec.find(basic) < 0;
  bool spherical = sigma_support(g, x).spherical;
  bool proper = false;
  for (const auto& p : pairs) proper = proper || static_cast<int>(p.J.size()) < g.rd.nsimple;
  if (empty_stratum != (!spherical && proper)) {
    json j = elemj;
    j["kind"] = "criterion_mismatch";
    j["basic"] = class_json(basic);
    j["empty_stratum"] = empty_stratum;
    j["spherical_support"] = spherical;
    j["proper_alcove_pair"] = proper;
    ws.cex["lim"].push_back(std::move(j));
  }
  if (empty_stratum) ++ws.empty_strata;
}

void process_element(WorkerState& ws, const Group& g, const SweepConfig& cfg, const Flags& want,
                     const AffElt& x) {
  const DLRecord rec = ws.engine.analyze(x);
  for (const auto& c : rec.classes) ws.class_keys.insert(class_key(c));
  json elemj{{"element", g.key(x)}};

  std::vector<AlcovePair> pairs = enumerate_alcove_pairs(g, x);
  ws.pairs += static_cast<i64>(pairs.size());

  if (want.theorem1 || want.classpoly) {
    for (const auto& p : pairs) {
      DLEngine& me = levi_engine(ws, g, p.J, cfg.pivot_descending);
      const Group& m = me.group();
      AffElt xt = conjugated_element(g, x, p);
      const DLRecord mrec = me.analyze(xt);
      json pairj = elemj;
      pairj["J"] = p.J;
      pairj["w"] = g.rd.canonical_word(p.w);
      if (want.theorem1) {
        ++ws.t1_pairs;
        check_theorem1(ws, g, m, rec, mrec, xt, pairj);
      }
      if (want.classpoly) {
        ++ws.cp_pairs;
        check_classpoly_pair(ws, g, m, rec, mrec, pairj);
      }
    }
  }
  if (want.classpoly) check_classpoly_element(ws, rec, elemj);

  if (want.corollary) {
    SigmaClass top = generic_class(ws.engine, x);
    std::set<std::vector<int>> seen;
    for (const auto& p : pairs) {
      if (seen.insert(p.J).second) check_corollary(ws, g, rec, top, p.J, p.w, elemj);
    }
  }

  if (want.lim) check_lim(ws, g, rec, x, pairs, elemj);
}

}  // namespace

Group group_from_config(const GroupConfig& c) {
  RootDatum rd = build_root_datum(c.type, c.lattice);
  return make_group(rd, build_frobenius(rd, c.sigma));
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) {
    cs.push_back(json{{"name", c.name},
                      {"pass", c.pass},
                      {"counterexamples", c.counterexamples},
                      {"data", c.data}});
  }
  return json{{"config", config},
              {"elements_swept", elements_swept},
              {"alcove_pairs", alcove_pairs},
              {"classes_computed", classes_computed},
              {"checks", cs},
              {"cache_stats", cache_stats},
              {"timing", json{{"seconds", seconds}}}};
}

VerificationReport run_checks(const SweepConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> checks = normalize_checks(cfg.checks);
  if (cfg.max_length < 0) throw std::invalid_argument("max_length must be >= 0");
  Group g = group_from_config(cfg.group);

  Flags want;
  want.theorem1 = std::find(checks.begin(), checks.end(), "theorem1") != checks.end();
  want.corollary = std::find(checks.begin(), checks.end(), "corollary") != checks.end();
  want.lim = std::find(checks.begin(), checks.end(), "lim") != checks.end();
  want.classpoly = std::find(checks.begin(), checks.end(), "classpoly") != checks.end();
  if (want.lim && !sigma_connected(g))
    throw std::invalid_argument(
        "lim requires sigma to act transitively on the diagram components");

  std::vector<AffElt> elems = enumerate_elements(g.rd, g.sys, g.sigma, cfg.max_length);

  DLEngine seed(g, cfg.pivot_descending);
  i64 loaded = 0;
  if (!cfg.cache_path.empty()) loaded = seed.load_cache(cfg.cache_path);

  size_t nworkers = static_cast<size_t>(std::max(1, cfg.workers));
  nworkers = std::min(nworkers, std::max<size_t>(elems.size(), 1));

  std::vector<WorkerState> states;
  states.reserve(nworkers);
  for (size_t w = 0; w < nworkers; ++w) states.emplace_back(seed);

  auto run = [&](size_t w) {
    for (size_t i = w; i < elems.size(); i += nworkers)
      process_element(states[w], g, cfg, want, elems[i]);
  };
  if (nworkers == 1) {
    run(0);
  } else {
    std::vector<std::exception_ptr> errors(nworkers);
    std::vector<std::thread> threads;
    threads.reserve(nworkers);
    for (size_t w = 0; w < nworkers; ++w) {
      threads.emplace_back([&, w] {
        try {
          run(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  WorkerState& total = states[0];
  i64 reductions = 0;
  i64 memo_hits = 0;
  for (size_t w = 0; w < nworkers; ++w) {
    reductions += states[w].engine.stats().reductions;
    memo_hits += states[w].engine.stats().memo_hits;
  }
  for (size_t w = 1; w < nworkers; ++w) {
    const WorkerState& s = states[w];
    total.engine.merge_from(s.engine);
    for (const auto& [name, list] : s.cex) {
      auto& dst = total.cex[name];
      dst.insert(dst.end(), list.begin(), list.end());
    }
    total.class_keys.insert(s.class_keys.begin(), s.class_keys.end());
    total.pairs += s.pairs;
    total.t1_pairs += s.t1_pairs;
    total.cp_pairs += s.cp_pairs;
    total.integral_holds += s.integral_holds;
    total.integral_fails += s.integral_fails;
    total.empty_strata += s.empty_strata;
    if (!s.integral_witness.empty() &&
        (total.integral_witness.empty() || s.integral_witness < total.integral_witness))
      total.integral_witness = s.integral_witness;
  }
  if (!cfg.cache_path.empty()) total.engine.save_cache(cfg.cache_path);

  VerificationReport rep;
  rep.config = json{{"type", cfg.group.type},
                    {"lattice", cfg.group.lattice},
                    {"sigma", g.sigma.node_perm},
                    {"max_length", cfg.max_length},
                    {"checks", checks},
                    {"workers", cfg.workers},
                    {"cache", cfg.cache_path},
                    {"pivot_descending", cfg.pivot_descending},
                    {"fingerprint", g.fingerprint}};
  rep.elements_swept = static_cast<i64>(elems.size());
  rep.alcove_pairs = total.pairs;
  rep.classes_computed = static_cast<i64>(total.class_keys.size());
  for (const auto& name : checks) {
    CheckResult cr;
    cr.name = name;
    auto it = total.cex.find(name);
    if (it != total.cex.end()) {
      cr.counterexamples = it->second;
      std::sort(cr.counterexamples.begin(), cr.counterexamples.end(),
                [](const json& a, const json& b) { return a.dump() < b.dump(); });
    }
    cr.pass = cr.counterexamples.empty();
    if (name == "theorem1") cr.data = json{{"pairs_checked", total.t1_pairs}};
    if (name == "classpoly") cr.data = json{{"pairs_checked", total.cp_pairs}};
    if (name == "lim") cr.data = json{{"empty_basic_strata", total.empty_strata}};
    if (name == "corollary") {
      json w = total.integral_witness.empty() ? json(nullptr)
                                              : json::parse(total.integral_witness);
      cr.data = json{{"integral_congruence", json{{"holds", total.integral_holds},
                                                  {"fails", total.integral_fails},
                                                  {"witness", std::move(w)}}}};
    }
    rep.checks.push_back(std::move(cr));
  }
  rep.cache_stats = json{{"cache_loaded", loaded},
                         {"reductions", reductions},
                         {"memo_hits", memo_hits},
                         {"memo_size", total.engine.memo_size()}};
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

VerificationReport verify_theorem1(SweepConfig cfg) {
  cfg.checks = {"theorem1"};
  return run_checks(cfg);
}

VerificationReport verify_corollary(SweepConfig cfg) {
  cfg.checks = {"corollary"};
  return run_checks(cfg);
}

VerificationReport verify_lim(SweepConfig cfg) {
  cfg.checks = {"lim"};
  return run_checks(cfg);
}

VerificationReport verify_classpoly_correspondence(SweepConfig cfg) {
  cfg.checks = {"classpoly"};
  return run_checks(cfg);
}

}  // namespace affweyl
