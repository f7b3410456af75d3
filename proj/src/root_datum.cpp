#include "affweyl/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace affweyl {

RatVec WeylElt::act_cochar(const RatVec& v) const {
  RatVec r(static_cast<size_t>(on_cochar.rows), Rat(0));
  for (int i = 0; i < on_cochar.rows; ++i)
    for (int j = 0; j < on_cochar.cols; ++j)
      r[i] = r[i] + Rat(on_cochar.at(i, j)) * v[j];
  return r;
}

namespace {

struct Factor {
  char letter;
  int rank;
};

// cartan(i,j) = <alpha_i^vee, alpha_j>, Bourbaki numbering.
IMat factor_cartan(const Factor& f) {
  int n = f.rank;
  auto chain = [&](IMat& c) {
    for (int i = 0; i + 1 < n; ++i) {
      c.at(i, i + 1) = -1;
      c.at(i + 1, i) = -1;
    }
  };
  IMat c(n, n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  switch (f.letter) {
    case 'A':
      if (n < 1) throw std::invalid_argument("type A needs rank >= 1");
      chain(c);
      return c;
    case 'B':  // alpha_n short
      if (n < 2) throw std::invalid_argument("type B needs rank >= 2");
      chain(c);
      c.at(n - 1, n - 2) = -2;
      return c;
    case 'C':  // alpha_n long
      if (n < 2) throw std::invalid_argument("type C needs rank >= 2");
      chain(c);
      c.at(n - 2, n - 1) = -2;
      return c;
    case 'D':
      if (n < 3) throw std::invalid_argument("type D needs rank >= 3");
      for (int i = 0; i + 2 < n; ++i) {
        c.at(i, i + 1) = -1;
        c.at(i + 1, i) = -1;
      }
      c.at(n - 3, n - 1) = -1;
      c.at(n - 1, n - 3) = -1;
      return c;
    case 'E': {
      if (n < 6 || n > 8) throw std::invalid_argument("type E needs rank 6..8");
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to node 4.
      std::vector<std::pair<int, int>> edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
      if (n >= 7) edges.push_back({5, 6});
      if (n == 8) edges.push_back({6, 7});
      for (auto [a, b] : edges) {
        c.at(a, b) = -1;
        c.at(b, a) = -1;
      }
      return c;
    }
    case 'F':
      if (n != 4) throw std::invalid_argument("type F needs rank 4");
      chain(c);
      c.at(2, 1) = -2;
      c.at(1, 2) = -1;
      return c;
    case 'G':  // alpha_1 short
      if (n != 2) throw std::invalid_argument("type G needs rank 2");
      c.at(0, 1) = -3;
      c.at(1, 0) = -1;
      return c;
    default:
      throw std::invalid_argument(std::string("unknown type letter ") + f.letter);
  }
}

struct TypeSpec {
  std::vector<Factor> factors;
  bool gl = false;
  int gl_n = 0;
  std::string canonical;
};

TypeSpec parse_type(const std::string& type) {
  TypeSpec ts;
  ts.canonical = type;
  size_t pos = 0;
  while (pos < type.size()) {
    size_t next = type.find('x', pos);
    std::string part = type.substr(pos, next == std::string::npos ? next : next - pos);
    if (part.size() >= 3 && part.substr(0, 2) == "GL") {
      int n = std::stoi(part.substr(2));
      if (n < 2) throw std::invalid_argument("GL needs n >= 2");
      ts.gl = true;
      ts.gl_n = n;
      ts.factors.push_back({'A', n - 1});
    } else {
      if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0])))
        throw std::invalid_argument("bad type factor: " + part);
      ts.factors.push_back({part[0], std::stoi(part.substr(1))});
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (ts.factors.empty()) throw std::invalid_argument("empty type");
  if (ts.gl && ts.factors.size() != 1)
    throw std::invalid_argument("GL factor cannot be combined with others");
  return ts;
}

IMat block_cartan(const std::vector<Factor>& factors) {
  std::vector<IMat> blocks;
  int total = 0;
  for (const auto& f : factors) {
    blocks.push_back(factor_cartan(f));
    total += f.rank;
  }
  IMat c(total, total);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows; ++i)
      for (int j = 0; j < b.cols; ++j) c.at(off + i, off + j) = b.at(i, j);
    off += b.rows;
  }
  return c;
}

IMat parse_basis_matrix(const std::string& text, int n) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument("basis matrix must have one row per simple root");
  IMat b(n, n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      throw std::invalid_argument("basis matrix must be square");
    for (int k = 0; k < n; ++k) b.at(i, k) = j[i][k].get<i64>();
  }
  return b;
}

}  // namespace

int RootDatum::root_index(const IVec& root_char) const {
  for (size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == root_char) return static_cast<int>(k);
  return -1;
}

WeylElt RootDatum::identity_weyl() const {
  return WeylElt{IMat::identity(dim), IMat::identity(dim)};
}

WeylElt RootDatum::simple_reflection(int i) const {
  return reflection(i >= 0 && i < nsimple ? root_index(simple_roots[i]) : -1);
}

WeylElt RootDatum::reflection(int root_idx) const {
  if (root_idx < 0 || root_idx >= 2 * npos) throw internal_error("reflection: bad root index");
  const IVec& a = roots[root_idx];
  const IVec& av = coroots[root_idx];
  WeylElt w{IMat::identity(dim), IMat::identity(dim)};
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      w.on_cochar.at(r, c) -= av[r] * a[c];  // x - <x,a> a^vee
      w.on_char.at(r, c) -= a[r] * av[c];    // g - <a^vee,g> a
    }
  return w;
}

int RootDatum::act_on_root(const WeylElt& w, int root_idx) const {
  int img = root_index(w.act_char(roots[root_idx]));
  if (img < 0) throw internal_error("Weyl image of a root is not a root");
  return img;
}

int RootDatum::finite_length(const WeylElt& w) const {
  int n = 0;
  for (int k = 0; k < npos; ++k)
    if (!is_positive(act_on_root(w, k))) ++n;
  return n;
}

std::vector<int> RootDatum::canonical_word(const WeylElt& w) const {
  std::vector<int> word;
  WeylElt cur = w;
  int guard = npos + 1;
  while (!cur.is_identity()) {
    int pick = -1;
    for (int i = 0; i < nsimple; ++i) {
      // left descent: l(s_i cur) < l(cur) iff cur^{-1}(alpha_i) < 0
      if (!is_positive(act_on_root(cur.inverse(), root_index(simple_roots[i])))) {
        pick = i;
        break;
      }
    }
    if (pick < 0 || static_cast<int>(word.size()) > guard)
      throw internal_error("canonical_word: no descent found");
    word.push_back(pick);
    cur = simple_reflection(pick).mul(cur);
  }
  return word;
}

WeylElt RootDatum::from_word(const std::vector<int>& word) const {
  WeylElt w = identity_weyl();
  for (int i : word) {
    if (i < 0 || i >= nsimple) throw std::invalid_argument("word letter out of range");
    w = w.mul(simple_reflection(i));
  }
  return w;
}

bool RootDatum::is_dominant(const IVec& v) const {
  for (int i = 0; i < nsimple; ++i)
    if (dot(v, simple_roots[i]) < 0) return false;
  return true;
}

bool RootDatum::is_dominant(const RatVec& v) const {
  for (int i = 0; i < nsimple; ++i)
    if (rdot(v, simple_roots[i]) < Rat(0)) return false;
  return true;
}

std::pair<IVec, WeylElt> RootDatum::dominant_representative(const IVec& v) const {
  IVec cur = v;
  WeylElt w = identity_weyl();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < nsimple; ++i) {
      if (dot(cur, simple_roots[i]) < 0) {
        WeylElt s = simple_reflection(i);
        cur = s.act_cochar(cur);
        w = s.mul(w);
        moved = true;
        break;
      }
    }
  }
  return {cur, w};
}

std::pair<RatVec, WeylElt> RootDatum::dominant_representative(const RatVec& v) const {
  RatVec cur = v;
  WeylElt w = identity_weyl();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < nsimple; ++i) {
      if (rdot(cur, simple_roots[i]) < Rat(0)) {
        WeylElt s = simple_reflection(i);
        cur = s.act_cochar(cur);
        w = s.mul(w);
        moved = true;
        break;
      }
    }
  }
  return {cur, w};
}

WeylElt RootDatum::min_coset_representative(WeylElt w, const std::vector<int>& J) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J) {
      if (!is_positive(act_on_root(w, root_index(simple_roots[j])))) {
        w = w.mul(simple_reflection(j));
        moved = true;
        break;
      }
    }
  }
  return w;
}

bool RootDatum::in_parabolic(const WeylElt& w, const std::vector<int>& J) const {
  return min_coset_representative(w, J).is_identity();
}

std::vector<WeylElt> RootDatum::enumerate_weyl() const {
  std::unordered_set<WeylElt, WeylHash> seen;
  std::deque<WeylElt> queue;
  std::vector<WeylElt> out;
  WeylElt e = identity_weyl();
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElt w = queue.front();
    queue.pop_front();
    out.push_back(w);
    for (int i = 0; i < nsimple; ++i) {
      WeylElt n = w.mul(simple_reflection(i));
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  std::sort(out.begin(), out.end(), [this](const WeylElt& a, const WeylElt& b) {
    int la = finite_length(a), lb = finite_length(b);
    if (la != lb) return la < lb;
    return a.on_cochar.a < b.on_cochar.a;
  });
  return out;
}

std::vector<WeylElt> RootDatum::min_coset_reps(const std::vector<int>& J) const {
  std::vector<WeylElt> out;
  for (const WeylElt& w : enumerate_weyl()) {
    bool minimal = true;
    for (int j : J) {
      if (!is_positive(act_on_root(w, root_index(simple_roots[j])))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(w);
  }
  return out;
}

std::vector<int> RootDatum::levi_positive_roots(const std::vector<int>& J) const {
  std::vector<bool> in_j(static_cast<size_t>(nsimple), false);
  for (int j : J) in_j[static_cast<size_t>(j)] = true;
  std::vector<int> out;
  for (int k = 0; k < npos; ++k) {
    bool ok = true;
    for (int i = 0; i < nsimple; ++i)
      if (root_scoords[static_cast<size_t>(k)][static_cast<size_t>(i)] != 0 && !in_j[static_cast<size_t>(i)]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(k);
  }
  return out;
}

IVec RootDatum::two_rho_levi(const std::vector<int>& J) const {
  IVec s(static_cast<size_t>(dim), 0);
  for (int k : levi_positive_roots(J)) s = vec_add(s, roots[static_cast<size_t>(k)]);
  return s;
}

namespace {

// Closure of the simple (root, coroot) pairs in simple-root / simple-coroot
// coordinates under all simple reflections.
struct AbstractRoots {
  std::vector<IVec> pos_r;  // simple-root coordinates
  std::vector<IVec> pos_c;  // simple-coroot coordinates
};

AbstractRoots close_roots(const IMat& cartan) {
  int n = cartan.rows;
  std::vector<std::pair<IVec, IVec>> all;
  std::set<IVec> seen;
  std::deque<std::pair<IVec, IVec>> queue;
  for (int j = 0; j < n; ++j) {
    IVec e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(j)] = 1;
    seen.insert(e);
    queue.push_back({e, e});
  }
  while (!queue.empty()) {
    auto [r, c] = queue.front();
    queue.pop_front();
    all.push_back({r, c});
    if (all.size() > 1000) throw internal_error("root closure did not terminate");
    for (int i = 0; i < n; ++i) {
      i64 pr = 0, pc = 0;
      for (int k = 0; k < n; ++k) {
        pr += cartan.at(i, k) * r[static_cast<size_t>(k)];  // <alpha_i^vee, beta>
        pc += c[static_cast<size_t>(k)] * cartan.at(k, i);  // <beta^vee, alpha_i>
      }
      IVec r2 = r, c2 = c;
      r2[static_cast<size_t>(i)] -= pr;
      c2[static_cast<size_t>(i)] -= pc;
      if (seen.insert(r2).second) queue.push_back({r2, c2});
    }
  }
  AbstractRoots out;
  for (auto& [r, c] : all) {
    bool pos = true, neg = true;
    for (i64 v : r) {
      if (v < 0) pos = false;
      if (v > 0) neg = false;
    }
    if (pos == neg) throw internal_error("root with mixed signs in closure");
    if (pos) {
      out.pos_r.push_back(r);
      out.pos_c.push_back(c);
    }
  }
  // Deterministic order: height ascending, then reverse-lex so that
  // alpha_0, alpha_1, ... come in natural order among the simples.
  std::vector<size_t> idx(out.pos_r.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto height = [](const IVec& v) {
    i64 h = 0;
    for (i64 x : v) h += x;
    return h;
  };
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    i64 ha = height(out.pos_r[a]), hb = height(out.pos_r[b]);
    if (ha != hb) return ha < hb;
    return out.pos_r[a] > out.pos_r[b];
  });
  AbstractRoots sorted;
  for (size_t i : idx) {
    sorted.pos_r.push_back(out.pos_r[i]);
    sorted.pos_c.push_back(out.pos_c[i]);
  }
  return sorted;
}

std::vector<std::vector<int>> cartan_components(const IMat& cartan) {
  int n = cartan.rows;
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[static_cast<size_t>(i)] >= 0) continue;
    std::deque<int> q{i};
    comp[static_cast<size_t>(i)] = ncomp;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (int b = 0; b < n; ++b)
        if (b != a && cartan.at(a, b) != 0 && comp[static_cast<size_t>(b)] < 0) {
          comp[static_cast<size_t>(b)] = ncomp;
          q.push_back(b);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> out(static_cast<size_t>(ncomp));
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(comp[static_cast<size_t>(i)])].push_back(i);
  return out;
}

// Populate everything derived from (dim, simple_roots, simple_coroots).
void finish_datum(RootDatum& rd) {
  int n = rd.nsimple;
  rd.cartan = IMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rd.cartan.at(i, j) = dot(rd.simple_coroots[static_cast<size_t>(i)], rd.simple_roots[static_cast<size_t>(j)]);
  for (int i = 0; i < n; ++i)
    if (rd.cartan.at(i, i) != 2) throw internal_error("pairing <a^vee,a> != 2");

  AbstractRoots ab = close_roots(rd.cartan);
  rd.npos = static_cast<int>(ab.pos_r.size());
  rd.roots.clear();
  rd.coroots.clear();
  rd.root_scoords.clear();
  auto realize = [&](const std::vector<IVec>& basis, const IVec& coords) {
    IVec v(static_cast<size_t>(rd.dim), 0);
    for (int j = 0; j < n; ++j) v = vec_add(v, vec_scaled(basis[static_cast<size_t>(j)], coords[static_cast<size_t>(j)]));
    return v;
  };
  for (int k = 0; k < rd.npos; ++k) {
    rd.roots.push_back(realize(rd.simple_roots, ab.pos_r[static_cast<size_t>(k)]));
    rd.coroots.push_back(realize(rd.simple_coroots, ab.pos_c[static_cast<size_t>(k)]));
    rd.root_scoords.push_back(ab.pos_r[static_cast<size_t>(k)]);
  }
  for (int k = 0; k < rd.npos; ++k) {
    rd.roots.push_back(vec_neg(rd.roots[static_cast<size_t>(k)]));
    rd.coroots.push_back(vec_neg(rd.coroots[static_cast<size_t>(k)]));
    rd.root_scoords.push_back(vec_neg(rd.root_scoords[static_cast<size_t>(k)]));
  }
  for (int k = 0; k < 2 * rd.npos; ++k)
    if (dot(rd.coroots[static_cast<size_t>(k)], rd.roots[static_cast<size_t>(k)]) != 2)
      throw internal_error("<beta^vee, beta> != 2 after realization");

  rd.components = cartan_components(rd.cartan);
  rd.highest_root.assign(rd.components.size(), -1);
  for (size_t c = 0; c < rd.components.size(); ++c) {
    std::vector<bool> in_c(static_cast<size_t>(n), false);
    for (int j : rd.components[c]) in_c[static_cast<size_t>(j)] = true;
    i64 best = -1;
    int best_k = -1;
    bool tie = false;
    for (int k = 0; k < rd.npos; ++k) {
      const IVec& sc = rd.root_scoords[static_cast<size_t>(k)];
      bool touches = false, outside = false;
      i64 h = 0;
      for (int j = 0; j < n; ++j) {
        if (sc[static_cast<size_t>(j)] != 0) (in_c[static_cast<size_t>(j)] ? touches : outside) = true;
        h += sc[static_cast<size_t>(j)];
      }
      if (!touches || outside) continue;
      if (h > best) {
        best = h;
        best_k = k;
        tie = false;
      } else if (h == best) {
        tie = true;
      }
    }
    if (best_k < 0 || tie) throw internal_error("highest root not unique in component");
    rd.highest_root[c] = best_k;
  }

  rd.two_rho.assign(static_cast<size_t>(rd.dim), 0);
  rd.two_rho_check.assign(static_cast<size_t>(rd.dim), 0);
  for (int k = 0; k < rd.npos; ++k) {
    rd.two_rho = vec_add(rd.two_rho, rd.roots[static_cast<size_t>(k)]);
    rd.two_rho_check = vec_add(rd.two_rho_check, rd.coroots[static_cast<size_t>(k)]);
  }
}

}  // namespace

RootDatum RootDatum::levi(const std::vector<int>& J) const {
  std::vector<int> js = J;
  std::sort(js.begin(), js.end());
  for (size_t a = 0; a < js.size(); ++a) {
    if (js[a] < 0 || js[a] >= nsimple) throw std::invalid_argument("levi: bad simple index");
    if (a > 0 && js[a] == js[a - 1]) throw std::invalid_argument("levi: repeated simple index");
  }
  RootDatum m;
  std::string jtag = "|levi{";
  for (size_t a = 0; a < js.size(); ++a) jtag += (a ? "," : "") + std::to_string(js[a]);
  jtag += "}";
  m.type_string = type_string + jtag;
  m.lattice_string = lattice_string;
  m.dim = dim;
  m.nsimple = static_cast<int>(js.size());
  for (int j : js) {
    m.simple_roots.push_back(simple_roots[static_cast<size_t>(j)]);
    m.simple_coroots.push_back(simple_coroots[static_cast<size_t>(j)]);
  }
  finish_datum(m);
  return m;
}

RootDatum build_root_datum(const std::string& type, const std::string& lattice) {
  TypeSpec ts = parse_type(type);
  IMat cartan = block_cartan(ts.factors);
  int n = cartan.rows;

  RootDatum rd;
  rd.type_string = ts.canonical;
  rd.nsimple = n;

  std::string lat = lattice.empty() ? std::string("sc") : lattice;
  if (ts.gl && lat == "sc") lat = "gl";  // GLn implies the gl lattice
  rd.lattice_string = lat;

  if (lat == "gl") {
    if (!ts.gl) throw std::invalid_argument("gl lattice requires a GL<n> type");
    int gn = ts.gl_n;
    rd.dim = gn;
    for (int i = 0; i + 1 < gn; ++i) {
      IVec v(static_cast<size_t>(gn), 0);
      v[static_cast<size_t>(i)] = 1;
      v[static_cast<size_t>(i + 1)] = -1;
      rd.simple_roots.push_back(v);
      rd.simple_coroots.push_back(v);
    }
  } else if (lat == "sc" || lat == "ad" || lat.rfind("basis:", 0) == 0) {
    if (ts.gl) throw std::invalid_argument("GL<n> type requires the gl lattice");
    rd.dim = n;
    IMat B;  // rows = basis of X_* in fundamental-coweight coordinates
    if (lat == "sc") {
      B = cartan;
    } else if (lat == "ad") {
      B = IMat::identity(n);
    } else {
      B = parse_basis_matrix(lat.substr(6), n);
    }
    // coroot_i = row i of cartan * B^{-1} (must be integral: Z Phi^vee <= X_*);
    // root_j = column j of B.
    std::optional<std::vector<RatVec>> binv = rat_inverse(B);
    if (!binv) throw std::invalid_argument("lattice basis matrix is singular");
    for (int i = 0; i < n; ++i) {
      IVec cr(static_cast<size_t>(n), 0);
      for (int k = 0; k < n; ++k) {
        Rat s(0);
        for (int j = 0; j < n; ++j) s = s + Rat(cartan.at(i, j)) * (*binv)[static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (!s.is_integer())
          throw std::invalid_argument("lattice does not contain the coroot lattice");
        cr[static_cast<size_t>(k)] = s.num;
      }
      rd.simple_coroots.push_back(cr);
    }
    for (int j = 0; j < n; ++j) rd.simple_roots.push_back(B.col(j));
  } else {
    throw std::invalid_argument("unknown lattice choice: " + lat);
  }

  finish_datum(rd);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rd.cartan.at(i, j) != cartan.at(i, j))
        throw internal_error("realized Cartan matrix differs from requested type");
  return rd;
}

namespace {

IMat gl_flip_matrix(int n) {
  IMat s(n, n);
  for (int i = 0; i < n; ++i) s.at(i, n - 1 - i) = -1;  // e_i -> -e_{n-1-i}
  return s;
}

}  // namespace

Frobenius build_frobenius(const RootDatum& rd, const std::vector<int>& node_perm) {
  std::vector<int> perm = node_perm;
  if (perm.empty()) {
    perm.resize(static_cast<size_t>(rd.nsimple));
    for (int i = 0; i < rd.nsimple; ++i) perm[static_cast<size_t>(i)] = i;
  }
  if (static_cast<int>(perm.size()) != rd.nsimple)
    throw std::invalid_argument("sigma permutation has wrong size");
  std::vector<bool> hit(static_cast<size_t>(rd.nsimple), false);
  for (int p : perm) {
    if (p < 0 || p >= rd.nsimple || hit[static_cast<size_t>(p)])
      throw std::invalid_argument("sigma is not a permutation of the simple roots");
    hit[static_cast<size_t>(p)] = true;
  }
  for (int i = 0; i < rd.nsimple; ++i)
    for (int j = 0; j < rd.nsimple; ++j)
      if (rd.cartan.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) != rd.cartan.at(i, j))
        throw std::invalid_argument("sigma does not preserve the Cartan matrix");

  bool is_id = true;
  for (int i = 0; i < rd.nsimple; ++i)
    if (perm[static_cast<size_t>(i)] != i) is_id = false;

  Frobenius f;
  f.node_perm = perm;
  if (is_id) {
    f.on_cochar = IMat::identity(rd.dim);
  } else if (rd.semisimple()) {
    // S is determined by S(coroot_i) = coroot_{perm(i)}: the coroots span.
    IMat p1(rd.dim, rd.nsimple), p2(rd.dim, rd.nsimple);
    for (int i = 0; i < rd.nsimple; ++i)
      for (int r = 0; r < rd.dim; ++r) {
        p1.at(r, i) = rd.simple_coroots[static_cast<size_t>(i)][static_cast<size_t>(r)];
        p2.at(r, i) = rd.simple_coroots[static_cast<size_t>(perm[static_cast<size_t>(i)])][static_cast<size_t>(r)];
      }
    std::optional<std::vector<RatVec>> inv = rat_inverse(p1);
    if (!inv) throw internal_error("simple coroots do not span a semisimple lattice");
    f.on_cochar = IMat(rd.dim, rd.dim);
    for (int r = 0; r < rd.dim; ++r)
      for (int c = 0; c < rd.dim; ++c) {
        Rat s(0);
        for (int k = 0; k < rd.dim; ++k) s = s + Rat(p2.at(r, k)) * (*inv)[static_cast<size_t>(k)][static_cast<size_t>(c)];
        if (!s.is_integer())
          throw std::invalid_argument("sigma does not preserve the cocharacter lattice");
        f.on_cochar.at(r, c) = s.num;
      }
  } else if (rd.lattice_string == "gl") {
    for (int i = 0; i < rd.nsimple; ++i)
      if (perm[static_cast<size_t>(i)] != rd.nsimple - 1 - i)
        throw std::invalid_argument("gl lattice supports only the identity or flip sigma");
    f.on_cochar = gl_flip_matrix(rd.dim);
  } else {
    throw std::invalid_argument("nontrivial sigma unsupported for this lattice");
  }

  f.on_cochar_inv = inverse_unimodular(f.on_cochar);
  f.on_char = f.on_cochar_inv.transposed();
  f.on_char_inv = f.on_cochar.transposed();

  for (int i = 0; i < rd.nsimple; ++i) {
    if (f.on_cochar.apply(rd.simple_coroots[static_cast<size_t>(i)]) != rd.simple_coroots[static_cast<size_t>(perm[static_cast<size_t>(i)])])
      throw internal_error("sigma does not permute the simple coroots as requested");
    if (f.on_char.apply(rd.simple_roots[static_cast<size_t>(i)]) != rd.simple_roots[static_cast<size_t>(perm[static_cast<size_t>(i)])])
      throw internal_error("sigma does not permute the simple roots as requested");
  }

  IMat pw = f.on_cochar;
  f.order = 1;
  while (!pw.is_identity()) {
    pw = pw.mul(f.on_cochar);
    ++f.order;
    if (f.order > 1000) throw internal_error("sigma does not have finite order");
  }
  return f;
}

Frobenius restrict_frobenius(const RootDatum& rd, const Frobenius& sigma,
                             const std::vector<int>& J) {
  std::vector<int> js = J;
  std::sort(js.begin(), js.end());
  std::vector<int> perm;
  for (int j : js) {
    int img = sigma.node_perm[static_cast<size_t>(j)];
    auto it = std::find(js.begin(), js.end(), img);
    if (it == js.end()) throw std::invalid_argument("sigma does not stabilize J");
    perm.push_back(static_cast<int>(it - js.begin()));
  }
  (void)rd;
  Frobenius f = sigma;
  f.node_perm = perm;
  return f;
}

}  // namespace affweyl
