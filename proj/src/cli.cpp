#include "affweyl/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "affweyl/verify.hpp"

namespace affweyl {

namespace {

using nlohmann::json;

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Splice "--config FILE" (key=value lines, # comments) into the argument
// stream at its position, so config keys address whatever command the flag
// was given to.
std::vector<std::string> expand_config(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (size_t i = 0; i < in.size(); ++i) {
    std::string path;
    if (in[i] == "--config") {
      if (i + 1 >= in.size()) throw std::invalid_argument("--config requires a file path");
      path = in[++i];
    } else if (in[i].rfind("--config=", 0) == 0) {
      path = in[i].substr(9);
    } else {
      out.push_back(in[i]);
      continue;
    }
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config file: " + path);
    std::string line;
    while (std::getline(f, line)) {
      line = trimmed(line);
      if (line.empty() || line[0] == '#') continue;
      size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("config line is not key=value: " + line);
      std::string key = trimmed(line.substr(0, eq));
      std::string val = trimmed(line.substr(eq + 1));
      if (key.empty()) throw std::invalid_argument("config line has an empty key: " + line);
      out.push_back("--" + key + "=" + val);
    }
  }
  return out;
}

std::vector<int> parse_csv_ints(const std::string& csv, const std::string& what) {
  std::vector<int> out;
  if (trimmed(csv).empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(trimmed(item), &used);
      if (used != trimmed(item).size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad " + what + " entry: '" + item + "'");
    }
  }
  return out;
}

std::vector<std::string> parse_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trimmed(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

i64 require_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw std::invalid_argument(what + " must be an integer");
  return v.get<i64>();
}

// Element literal: any of the keys lambda (cocharacter), u (word in the
// finite simple reflections), omega (index into the length-zero
// representatives), word (word in the affine simple reflections); the element
// is t^lambda * u * omega * word with identity defaults.
AffElt parse_element(const Group& g, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("element literal is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("element literal must be a JSON object");
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "lambda" && key != "u" && key != "omega" && key != "word")
      throw std::invalid_argument("unknown element literal key: " + key);
  }
  const RootDatum& rd = g.rd;
  AffElt x = aff_identity(rd);
  if (j.contains("lambda")) {
    const json& arr = j["lambda"];
    if (!arr.is_array() || static_cast<int>(arr.size()) != rd.dim)
      throw std::invalid_argument("lambda must be an array of " + std::to_string(rd.dim) +
                                  " integers");
    IVec lam(static_cast<size_t>(rd.dim));
    for (size_t i = 0; i < lam.size(); ++i) lam[i] = require_int(arr[i], "lambda entry");
    x = aff_mul(x, aff_translation(lam, rd));
  }
  if (j.contains("u")) {
    const json& arr = j["u"];
    if (!arr.is_array()) throw std::invalid_argument("u must be an array of simple indices");
    WeylElt u = rd.identity_weyl();
    for (const auto& e : arr) {
      i64 i = require_int(e, "u entry");
      if (i < 0 || i >= rd.nsimple) throw std::invalid_argument("u index out of range");
      u = u.mul(rd.simple_reflection(static_cast<int>(i)));
    }
    x = aff_mul(x, aff_from_weyl(u));
  }
  if (j.contains("omega")) {
    std::vector<AffElt> reps = omega_reps(rd, g.sys, g.sigma);
    i64 k = require_int(j["omega"], "omega");
    if (k < 0 || k >= static_cast<i64>(reps.size()))
      throw std::invalid_argument("omega index out of range (have " +
                                  std::to_string(reps.size()) + " representatives)");
    x = aff_mul(x, reps[static_cast<size_t>(k)]);
  }
  if (j.contains("word")) {
    const json& arr = j["word"];
    if (!arr.is_array()) throw std::invalid_argument("word must be an array of affine indices");
    for (const auto& e : arr) {
      i64 i = require_int(e, "word entry");
      if (i < 0 || i >= static_cast<i64>(g.sys.s_aff.size()))
        throw std::invalid_argument("word index out of range");
      x = aff_mul(x, g.sys.s_aff[static_cast<size_t>(i)]);
    }
  }
  return x;
}

json element_json(const Group& g, const AffElt& x) {
  return json{{"lambda", x.lambda}, {"u_word", g.rd.canonical_word(x.u)}};
}

json nu_json(const RatVec& nu) {
  json a = json::array();
  for (const auto& r : nu) a.push_back(r.to_string());
  return a;
}

std::string join_rats(const RatVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s.empty() ? "-" : s;
}

template <typename T>
std::string join_ints(const std::vector<T>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s.empty() ? "-" : s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct CommonFlags {
  std::string type = "A1";
  std::string lattice = "sc";
  std::string sigma_csv;
  std::string format = "json";

  Group group() const {
    return group_from_config(GroupConfig{type, lattice, parse_csv_ints(sigma_csv, "--sigma")});
  }
  bool tsv() const { return format == "tsv"; }
};

void add_common(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--type", f.type, "Cartan type: A1, A2, C2, G2, A1xA1, GL2, ...");
  sub->add_option("--lattice", f.lattice, "cocharacter lattice: sc, ad, gl");
  sub->add_option("--sigma", f.sigma_csv,
                  "Frobenius as a comma-separated permutation of the simple nodes");
  sub->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
}

int cmd_element(const CommonFlags& f, const std::string& literal) {
  Group g = f.group();
  AffElt x = parse_element(g, literal);
  SigmaClass c = class_of(g, x);
  if (f.tsv()) {
    std::cout << "key\tlength\tnewton\tkottwitz\n";
    std::cout << g.key(x) << "\t" << g.length(x) << "\t" << join_rats(c.nu) << "\t"
              << join_ints(c.kappa) << "\n";
    return 0;
  }
  emit(json{{"element", element_json(g, x)},
            {"key", g.key(x)},
            {"length", g.length(x)},
            {"newton", nu_json(c.nu)},
            {"kottwitz", c.kappa},
            {"class_key", class_key(c)}});
  return 0;
}

int cmd_bgx(const CommonFlags& f, const std::string& literal, const std::string& cache,
            bool pivot_descending, bool with_dims) {
  Group g = f.group();
  AffElt x = parse_element(g, literal);
  DLEngine engine(g, pivot_descending);
  if (!cache.empty()) engine.load_cache(cache);
  const DLRecord rec = engine.analyze(x);
  SigmaClass top = generic_class(engine, x);
  if (!cache.empty()) engine.save_cache(cache);

  if (f.tsv()) {
    std::cout << (with_dims ? "newton\tkottwitz\tpoly\tdim\n" : "newton\tkottwitz\tpoly\n");
    for (size_t i = 0; i < rec.classes.size(); ++i) {
      std::cout << join_rats(rec.classes[i].nu) << "\t" << join_ints(rec.classes[i].kappa)
                << "\t" << rec.polys[i].to_string();
      if (with_dims) std::cout << "\t" << rec.dims[i];
      std::cout << "\n";
    }
    return 0;
  }
  json classes = json::array();
  for (size_t i = 0; i < rec.classes.size(); ++i) {
    json c{{"nu", nu_json(rec.classes[i].nu)},
           {"kappa", rec.classes[i].kappa},
           {"key", class_key(rec.classes[i])},
           {"poly", rec.polys[i].to_string()},
           {"coeffs", rec.polys[i].c}};
    if (with_dims) c["dim"] = rec.dims[i];
    classes.push_back(std::move(c));
  }
  emit(json{{"element", element_json(g, x)},
            {"key", g.key(x)},
            {"length", rec.length},
            {"classes", classes},
            {"generic", class_key(top)}});
  return 0;
}

int cmd_alcoves(const CommonFlags& f, const std::string& literal) {
  Group g = f.group();
  AffElt x = parse_element(g, literal);
  json rows = json::array();
  int passing = 0;
  for (const auto& J : sigma_stable_subsets(g)) {
    for (const auto& w : g.rd.min_coset_reps(J)) {
      AlcoveDiag d = alcove_diagnose(g, x, J, w);
      AlcovePair p{J, w, static_cast<int>(J.size()) == g.rd.nsimple};
      json row{{"J", J},
               {"w", g.rd.canonical_word(w)},
               {"cond_a", d.cond_a},
               {"cond_b", d.cond_b},
               {"witness_root", d.witness_root < 0
                                    ? json(nullptr)
                                    : json(g.rd.roots[static_cast<size_t>(d.witness_root)])},
               {"pass", d.pass()},
               {"trivial", p.trivial}};
      if (d.pass()) {
        row["conjugated"] = g.key(conjugated_element(g, x, p));
        ++passing;
      }
      rows.push_back(std::move(row));
    }
  }
  if (f.tsv()) {
    std::cout << "J\tw\tcond_a\tcond_b\tpass\tconjugated\n";
    for (const auto& r : rows) {
      std::vector<int> J = r["J"].get<std::vector<int>>();
      std::vector<int> w = r["w"].get<std::vector<int>>();
      std::cout << join_ints(J) << "\t" << join_ints(w) << "\t" << int(r["cond_a"].get<bool>())
                << "\t" << int(r["cond_b"].get<bool>()) << "\t" << int(r["pass"].get<bool>())
                << "\t" << (r.contains("conjugated") ? r["conjugated"].get<std::string>() : "-")
                << "\n";
    }
    return 0;
  }
  emit(json{{"element", element_json(g, x)},
            {"key", g.key(x)},
            {"pairs", rows},
            {"passing", passing}});
  return 0;
}

int cmd_verify(const CommonFlags& f, int max_length, const std::string& checks_csv, int workers,
               const std::string& cache, bool pivot_descending) {
  SweepConfig cfg;
  cfg.group = GroupConfig{f.type, f.lattice, parse_csv_ints(f.sigma_csv, "--sigma")};
  cfg.max_length = max_length;
  cfg.checks = parse_csv(checks_csv);
  cfg.workers = workers;
  cfg.cache_path = cache;
  cfg.pivot_descending = pivot_descending;
  VerificationReport rep = run_checks(cfg);
  if (f.tsv()) {
    std::cout << "# elements_swept=" << rep.elements_swept << " alcove_pairs=" << rep.alcove_pairs
              << " classes_computed=" << rep.classes_computed << "\n";
    std::cout << "check\tpass\tcounterexamples\n";
    for (const auto& c : rep.checks)
      std::cout << c.name << "\t" << int(c.pass) << "\t" << c.counterexamples.size() << "\n";
  } else {
    emit(rep.to_json());
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact sigma-conjugacy invariants for extended affine Weyl groups"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string literal;
  std::string cache;
  std::string checks_csv = "theorem1,corollary,lim,classpoly";
  int max_length = 6;
  int workers = 1;
  bool pivot_descending = false;

  CLI::App* s_element = app.add_subcommand(
      "element", "canonical form, length, Newton and Kottwitz points of one element");
  add_common(s_element, flags);
  s_element->add_option("--element", literal, "element literal, e.g. '{\"lambda\":[-2],\"u\":[0]}'")
      ->required();

  CLI::App* s_bgx =
      app.add_subcommand("bgx", "classes meeting the double coset, with polynomials and dimensions");
  add_common(s_bgx, flags);
  s_bgx->add_option("--element", literal, "element literal")->required();
  s_bgx->add_option("--cache", cache, "reduction cache file (read and updated)");
  s_bgx->add_flag("--pivot-descending", pivot_descending, "scan pivot indices high to low");

  CLI::App* s_alcoves =
      app.add_subcommand("alcoves", "alcove-pair diagnostics over all sigma-stable subsets");
  add_common(s_alcoves, flags);
  s_alcoves->add_option("--element", literal, "element literal")->required();

  CLI::App* s_classpoly = app.add_subcommand("classpoly", "class polynomials of one element");
  add_common(s_classpoly, flags);
  s_classpoly->add_option("--element", literal, "element literal")->required();
  s_classpoly->add_option("--cache", cache, "reduction cache file (read and updated)");
  s_classpoly->add_flag("--pivot-descending", pivot_descending, "scan pivot indices high to low");

  CLI::App* s_verify = app.add_subcommand("verify", "sweep all elements up to a length bound");
  add_common(s_verify, flags);
  s_verify->add_option("--max-length", max_length, "length bound for the sweep");
  s_verify->add_option("--checks", checks_csv,
                       "comma-separated subset of theorem1,corollary,lim,classpoly");
  s_verify->add_option("--workers", workers, "worker threads");
  s_verify->add_option("--cache", cache, "reduction cache file (read and updated)");
  s_verify->add_flag("--pivot-descending", pivot_descending, "scan pivot indices high to low");

  std::vector<std::string> expanded;
  try {
    expanded = expand_config(args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::reverse(expanded.begin(), expanded.end());
  try {
    app.parse(std::move(expanded));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (s_element->parsed()) return cmd_element(flags, literal);
    if (s_bgx->parsed()) return cmd_bgx(flags, literal, cache, pivot_descending, true);
    if (s_alcoves->parsed()) return cmd_alcoves(flags, literal);
    if (s_classpoly->parsed()) return cmd_bgx(flags, literal, cache, pivot_descending, false);
    if (s_verify->parsed())
      return cmd_verify(flags, max_length, checks_csv, workers, cache, pivot_descending);
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace affweyl
