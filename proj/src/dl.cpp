#include "affweyl/dl.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace affweyl {

namespace {

// a + s * b, trailing zeros trimmed
Poly axpy(const Poly& a, const Poly& b, i64 s) {
  Poly out;
  out.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] += s * b.c[i];
  while (!out.c.empty() && out.c.back() == 0) out.c.pop_back();
  return out;
}

}  // namespace

i64 Poly::at_one() const {
  i64 s = 0;
  for (i64 v : c) s += v;
  return s;
}

Poly Poly::plus(const Poly& o) const { return axpy(*this, o, 1); }

Poly Poly::times_q() const {
  if (is_zero()) return {};
  Poly out;
  out.c.reserve(c.size() + 1);
  out.c.push_back(0);
  out.c.insert(out.c.end(), c.begin(), c.end());
  return out;
}

Poly Poly::times_q_minus_one() const { return axpy(times_q(), *this, -1); }

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    i64 v = c[p];
    if (v == 0) continue;
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? "-" : "+");
    }
    first = false;
    i64 m = std::llabs(v);
    if (m != 1 || p == 0) os << m;
    if (p > 0) {
      os << "q";
      if (p > 1) os << "^" << p;
    }
  }
  return os.str();
}

int DLRecord::find(const SigmaClass& c) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == c) return static_cast<int>(i);
  return -1;
}

namespace {

struct ScanResult {
  bool dropped = false;
  AffElt base;
  int pivot = -1;
  std::string memo_hit;                // key whose record covers the orbit
  std::map<std::string, AffElt> seen;  // every discovered orbit member
};

ScanResult scan_orbit(const Group& g, const AffElt& x, bool descending,
                      const std::unordered_map<std::string, DLRecord>* memo) {
  const int L = aff_length(g.rd, x);
  const int nS = static_cast<int>(g.sys.s_aff.size());
  ScanResult res;
  std::map<std::string, AffElt> pending;
  pending.emplace(aff_key(g.rd, x), x);
  std::map<std::string, AffElt>& seen = res.seen;
  seen = pending;
  while (!pending.empty()) {
    auto it = pending.begin();
    AffElt y = it->second;
    std::string ykey = it->first;
    pending.erase(it);
    if (memo && memo->count(ykey) && !(y == x)) {
      res.memo_hit = ykey;
      return res;
    }
    for (int step = 0; step < nS; ++step) {
      int i = descending ? nS - 1 - step : step;
      AffElt z = aff_mul(aff_mul(g.sys.s_aff[i], y), g.sys.s_aff[g.sigma_saff[i]]);
      int lz = aff_length(g.rd, z);
      if (lz == L - 2) {
        res.dropped = true;
        res.base = y;
        res.pivot = i;
        return res;
      }
      if (lz == L) {
        std::string zkey = aff_key(g.rd, z);
        if (!seen.count(zkey)) {
          seen.emplace(zkey, z);
          pending.emplace(zkey, std::move(z));
        }
      }
    }
  }
  return res;
}

}  // namespace

Minimality minimality(const Group& g, const AffElt& x, bool pivot_descending) {
  ScanResult s = scan_orbit(g, x, pivot_descending, nullptr);
  Minimality m;
  m.minimal = !s.dropped;
  if (s.dropped) {
    m.base = s.base;
    m.pivot = s.pivot;
  } else {
    for (const auto& [k, y] : s.seen) m.orbit.push_back(k);
  }
  return m;
}

const DLRecord& DLEngine::analyze(const AffElt& x) {
  const std::string key = g_.key(x);
  if (auto it = memo_.find(key); it != memo_.end()) {
    ++stats_.memo_hits;
    return it->second;
  }
  ++stats_.reductions;

  ScanResult scan = scan_orbit(g_, x, pivot_descending_, &memo_);
  DLRecord rec;
  if (!scan.memo_hit.empty()) {
    // another member of the same orbit is already solved
    rec = memo_.at(scan.memo_hit);
  } else if (!scan.dropped) {
    rec.length = aff_length(g_.rd, x);
    SigmaClass c = class_of(g_, x);
    Rat dim = Rat(rec.length) - rdot(c.nu, g_.rd.two_rho);
    if (!dim.is_integer() || dim < Rat(0))
      throw internal_error("leaf dimension " + dim.to_string() + " at " + key);
    rec.classes = {std::move(c)};
    rec.polys = {Poly::one()};
    rec.dims = {dim.num};
  } else {
    rec.length = aff_length(g_.rd, x);
    AffElt c1 = aff_mul(g_.sys.s_aff[scan.pivot], scan.base);
    AffElt c2 = aff_mul(c1, g_.sys.s_aff[g_.sigma_saff[scan.pivot]]);
    const DLRecord r1 = analyze(c1);  // copies: recursion may grow the memo
    const DLRecord r2 = analyze(c2);
    if (r1.length != rec.length - 1 || r2.length != rec.length - 2)
      throw internal_error("split children have unexpected lengths at " + key);

    std::map<std::string, size_t> where;
    for (size_t i = 0; i < r1.classes.size(); ++i) {
      where[class_key(r1.classes[i])] = rec.classes.size();
      rec.classes.push_back(r1.classes[i]);
      rec.polys.push_back(r1.polys[i].times_q_minus_one());
      rec.dims.push_back(r1.dims[i] + 1);
    }
    for (size_t i = 0; i < r2.classes.size(); ++i) {
      auto it = where.find(class_key(r2.classes[i]));
      if (it == where.end()) {
        rec.classes.push_back(r2.classes[i]);
        rec.polys.push_back(r2.polys[i].times_q());
        rec.dims.push_back(r2.dims[i] + 1);
      } else {
        rec.polys[it->second] = rec.polys[it->second].plus(r2.polys[i].times_q());
        rec.dims[it->second] = std::max(rec.dims[it->second], r2.dims[i] + 1);
      }
    }
    // canonical class order
    std::vector<size_t> order(rec.classes.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return sigma_class_less(rec.classes[a], rec.classes[b]);
    });
    DLRecord sorted;
    sorted.length = rec.length;
    for (size_t i : order) {
      sorted.classes.push_back(std::move(rec.classes[i]));
      sorted.polys.push_back(std::move(rec.polys[i]));
      sorted.dims.push_back(rec.dims[i]);
    }
    rec = std::move(sorted);
  }

  // the record is valid for every discovered orbit member
  for (const auto& [k, y] : scan.seen) memo_[k] = rec;
  memo_[key] = std::move(rec);
  return memo_.at(key);
}

void DLEngine::merge_from(const DLEngine& other) {
  for (const auto& [k, r] : other.memo_) memo_.emplace(k, r);
}

void DLEngine::save_cache(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file: " + path);
  out << nlohmann::json{{"fingerprint", g_.fingerprint}}.dump() << "\n";
  std::map<std::string, const DLRecord*> sorted;
  for (const auto& [k, r] : memo_) sorted.emplace(k, &r);
  for (const auto& [k, r] : sorted) {
    nlohmann::json rec;
    rec["key"] = k;
    rec["length"] = r->length;
    nlohmann::json classes = nlohmann::json::array();
    for (const SigmaClass& c : r->classes) {
      std::vector<std::string> nu;
      for (const Rat& v : c.nu) nu.push_back(v.to_string());
      classes.push_back({{"nu", nu}, {"kappa", c.kappa}});
    }
    rec["classes"] = std::move(classes);
    nlohmann::json polys = nlohmann::json::array();
    for (const Poly& p : r->polys) polys.push_back(p.c);
    rec["polys"] = std::move(polys);
    rec["dims"] = r->dims;
    out << rec.dump() << "\n";
  }
}

int DLEngine::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  std::string line;
  if (!std::getline(in, line)) return 0;
  nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.contains("fingerprint") ||
      header["fingerprint"] != g_.fingerprint) {
    std::cerr << "warning: ignoring cache with foreign fingerprint: " << path << "\n";
    return 0;
  }
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      std::cerr << "warning: skipping malformed cache line in " << path << "\n";
      continue;
    }
    DLRecord r;
    r.length = j.at("length").get<int>();
    for (const nlohmann::json& cj : j.at("classes")) {
      SigmaClass c;
      for (const std::string& s : cj.at("nu").get<std::vector<std::string>>())
        c.nu.push_back(Rat::parse(s));
      c.kappa = cj.at("kappa").get<std::vector<i64>>();
      c.scope = g_.fingerprint;
      r.classes.push_back(std::move(c));
    }
    for (const nlohmann::json& pj : j.at("polys")) r.polys.push_back(Poly{pj.get<std::vector<i64>>()});
    r.dims = j.at("dims").get<std::vector<i64>>();
    if (memo_.emplace(j.at("key").get<std::string>(), std::move(r)).second) ++n;
  }
  stats_.cache_loaded += n;
  return n;
}

std::vector<SigmaClass> b_of_x(DLEngine& e, const AffElt& x) { return e.analyze(x).classes; }

SigmaClass generic_class(DLEngine& e, const AffElt& x) {
  const DLRecord rec = e.analyze(x);
  const Group& g = e.group();
  for (const SigmaClass& cand : rec.classes) {
    bool top = true;
    for (const SigmaClass& other : rec.classes)
      if (!dominance_leq(g, other, cand)) {
        top = false;
        break;
      }
    if (top) return cand;
  }
  std::ostringstream msg;
  msg << "generic_class: no dominance maximum; maximal antichain:";
  for (const SigmaClass& cand : rec.classes) {
    bool maximal = true;
    for (const SigmaClass& other : rec.classes)
      if (!(other == cand) && dominance_leq(g, cand, other)) {
        maximal = false;
        break;
      }
    if (maximal) msg << " " << class_key(cand);
  }
  throw internal_error(msg.str());
}

}  // namespace affweyl
