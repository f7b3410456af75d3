#include <random>
#include <set>
#include <tuple>

#include "affweyl/affine.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace affweyl;

namespace {

struct Ctx {
  RootDatum rd;
  Frobenius sigma;
  AffineSystem sys;
};

Ctx make(const std::string& type, const std::string& lattice = "sc",
         const std::vector<int>& perm = {}) {
  Ctx c{build_root_datum(type, lattice), {}, {}};
  c.sigma = build_frobenius(c.rd, perm);
  c.sys = build_affine_system(c.rd);
  return c;
}

AffElt random_elt(std::mt19937_64& rng, const RootDatum& rd) {
  std::uniform_int_distribution<i64> coord(-4, 4);
  std::uniform_int_distribution<int> letter(0, rd.nsimple - 1);
  std::uniform_int_distribution<int> wl(0, 6);
  IVec lambda(rd.dim);
  for (int i = 0; i < rd.dim; ++i) lambda[i] = coord(rng);
  WeylElt u = rd.identity_weyl();
  int n = wl(rng);
  for (int i = 0; i < n; ++i) u = u.mul(rd.simple_reflection(letter(rng)));
  return AffElt{lambda, u};
}

}  // namespace

TEST_CASE("semidirect product law and inverses") {
  Ctx a1 = make("A1");
  AffElt s0{vec_neg(a1.rd.simple_coroots[0]), a1.rd.simple_reflection(0)};
  CHECK(aff_mul(s0, s0).is_identity());
  CHECK(aff_mul(s0, aff_inverse(s0)).is_identity());

  Ctx gl2 = make("GL2");
  CHECK(aff_inverse(aff_translation({1, 0}, gl2.rd)) == aff_translation({-1, 0}, gl2.rd));

  std::mt19937_64 rng(5);
  Ctx a2 = make("A2");
  for (int t = 0; t < 50; ++t) {
    AffElt x = random_elt(rng, a2.rd), y = random_elt(rng, a2.rd), z = random_elt(rng, a2.rd);
    CHECK(aff_mul(aff_mul(x, y), z) == aff_mul(x, aff_mul(y, z)));
    CHECK(aff_mul(x, aff_inverse(x)).is_identity());
  }
  CHECK_THROWS_AS(aff_translation({1}, a2.rd), std::invalid_argument);
}

TEST_CASE("frobenius on elements: swap example and automorphism laws") {
  Ctx aa = make("A1xA1", "sc", {1, 0});
  AffElt x = aff_from_weyl(aa.rd.simple_reflection(0));
  AffElt y = frobenius_apply(aa.sigma, x);
  CHECK(y == aff_from_weyl(aa.rd.simple_reflection(1)));
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    AffElt a = random_elt(rng, aa.rd), b = random_elt(rng, aa.rd);
    CHECK(frobenius_apply(aa.sigma, aff_mul(a, b)) ==
          aff_mul(frobenius_apply(aa.sigma, a), frobenius_apply(aa.sigma, b)));
    CHECK(aff_length(aa.rd, frobenius_apply(aa.sigma, a)) == aff_length(aa.rd, a));
  }
}

TEST_CASE("length fixtures") {
  Ctx a1 = make("A1");
  CHECK(aff_length(a1.rd, aff_translation({1}, a1.rd)) == 2);  // t^{alpha^vee}
  CHECK(aff_length(a1.rd, a1.sys.s_aff[0]) == 1);              // s_0
  CHECK(aff_length(a1.rd, a1.sys.s_aff[1]) == 1);
  CHECK(aff_length(a1.rd, AffElt{{-2}, a1.rd.simple_reflection(0)}) == 3);

  Ctx gl2 = make("GL2");
  CHECK(aff_length(gl2.rd, AffElt{{0, 1}, gl2.rd.simple_reflection(0)}) == 0);
  CHECK(aff_length(gl2.rd, aff_translation({1, 0}, gl2.rd)) == 1);
  CHECK(aff_length(gl2.rd, aff_translation({1, 1}, gl2.rd)) == 0);
}

TEST_CASE("closed-form length equals hyperplane separation, exhaustively") {
  for (auto [type, lattice, perm] :
       std::vector<std::tuple<std::string, std::string, std::vector<int>>>{
           {"A1", "sc", {}}, {"A1", "ad", {}}, {"GL2", "gl", {}},
           {"A1xA1", "sc", {1, 0}}, {"A2", "sc", {}}, {"C2", "sc", {}}}) {
    Ctx c = make(type, lattice, perm);
    for (const AffElt& x : enumerate_elements(c.rd, c.sys, c.sigma, 5))
      CHECK(aff_length(c.rd, x) == oracles::length_by_separation(c.rd, x));
  }
}

TEST_CASE("closed-form length equals separation on random large elements") {
  std::mt19937_64 rng(77);
  for (const char* type : {"A2", "G2", "GL3"}) {
    Ctx c = make(type);
    for (int t = 0; t < 100; ++t) {
      AffElt x = random_elt(rng, c.rd);
      CHECK(aff_length(c.rd, x) == oracles::length_by_separation(c.rd, x));
    }
  }
}

TEST_CASE("length symmetry and simple multiplication steps") {
  for (auto [type, perm] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"A2", {1, 0}}, {"A1xA1", {1, 0}}, {"C2", {}}}) {
    Ctx c = make(type, "sc", perm);
    for (const AffElt& x : enumerate_elements(c.rd, c.sys, c.sigma, 4)) {
      int l = aff_length(c.rd, x);
      CHECK(aff_length(c.rd, aff_inverse(x)) == l);
      CHECK(aff_length(c.rd, frobenius_apply(c.sigma, x)) == l);
      for (const AffElt& s : c.sys.s_aff) {
        int d = aff_length(c.rd, aff_mul(s, x)) - l;
        CHECK((d == 1 || d == -1));
      }
    }
  }
}

TEST_CASE("affine simple system layout") {
  Ctx a1 = make("A1");
  CHECK(a1.sys.s_aff.size() == 2);
  CHECK(a1.sys.s_aff[0] == (AffElt{{-1}, a1.rd.simple_reflection(0)}));
  CHECK(a1.sys.s_aff[1] == aff_from_weyl(a1.rd.simple_reflection(0)));

  Ctx aa = make("A1xA1");
  REQUIRE(aa.sys.s_aff.size() == 4);
  CHECK(aa.sys.ncomp == 2);
  CHECK(aa.sys.component_nodes == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  for (const AffElt& s : aa.sys.s_aff) CHECK(aff_length(aa.rd, s) == 1);

  Ctx g2 = make("G2");
  for (const AffElt& s : g2.sys.s_aff) CHECK(aff_length(g2.rd, s) == 1);
}

TEST_CASE("sigma and omega permutations of the simple affine system") {
  Ctx aa = make("A1xA1", "sc", {1, 0});
  CHECK(saff_sigma_perm(aa.rd, aa.sys, aa.sigma) == std::vector<int>{1, 0, 3, 2});
  Ctx a2 = make("A2", "sc", {1, 0});
  CHECK(saff_sigma_perm(a2.rd, a2.sys, a2.sigma) == std::vector<int>{0, 2, 1});

  Ctx gl2 = make("GL2");
  AffElt omega{{0, 1}, gl2.rd.simple_reflection(0)};
  CHECK(saff_omega_perm(gl2.rd, gl2.sys, omega) == std::vector<int>{1, 0});
  CHECK_THROWS_AS(saff_omega_perm(gl2.rd, gl2.sys, aff_translation({1, 0}, gl2.rd)),
                  std::invalid_argument);
}

TEST_CASE("omega_word fixtures and round trip") {
  Ctx a1 = make("A1");
  auto [w0, word0] = omega_word(a1.rd, a1.sys, a1.sys.s_aff[0]);
  CHECK(w0.is_identity());
  CHECK(word0 == std::vector<int>{0});
  auto [w1, word1] = omega_word(a1.rd, a1.sys, AffElt{{-2}, a1.rd.simple_reflection(0)});
  CHECK(w1.is_identity());
  CHECK(word1 == std::vector<int>{0, 1, 0});

  Ctx gl2 = make("GL2");
  AffElt om{{0, 1}, gl2.rd.simple_reflection(0)};
  auto [w2, word2] = omega_word(gl2.rd, gl2.sys, om);
  CHECK(w2 == om);
  CHECK(word2.empty());

  for (auto [type, lattice] : std::vector<std::pair<std::string, std::string>>{
           {"A1", "ad"}, {"GL2", "gl"}, {"A2", "sc"}, {"C2", "sc"}}) {
    Ctx c = make(type, lattice);
    for (const AffElt& x : enumerate_elements(c.rd, c.sys, c.sigma, 5)) {
      auto [omega, word] = omega_word(c.rd, c.sys, x);
      CHECK(aff_length(c.rd, omega) == 0);
      CHECK(static_cast<int>(word.size()) == aff_length(c.rd, x));
      AffElt back = omega;
      for (int i : word) back = aff_mul(back, c.sys.s_aff[i]);
      CHECK(back == x);
    }
  }
}

TEST_CASE("affine root transport") {
  Ctx a1 = make("A1");
  int alpha = a1.rd.root_index(a1.rd.simple_roots[0]);
  AffElt t = aff_translation({1}, a1.rd);
  AffineRoot img = affine_root_action(a1.rd, t, AffineRoot{alpha, 0});
  CHECK(img == (AffineRoot{alpha, 2}));
  AffElt s = aff_from_weyl(a1.rd.simple_reflection(0));
  for (i64 k : {-2, 0, 3}) {
    AffineRoot r = affine_root_action(a1.rd, s, AffineRoot{alpha, k});
    CHECK(r == (AffineRoot{a1.rd.negate_root(alpha), k}));
  }

  std::mt19937_64 rng(11);
  Ctx c2 = make("C2");
  std::uniform_int_distribution<int> ridx(0, 2 * c2.rd.npos - 1);
  std::uniform_int_distribution<i64> lvl(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    AffElt x = random_elt(rng, c2.rd), y = random_elt(rng, c2.rd);
    AffineRoot a{ridx(rng), lvl(rng)};
    AffineRoot lhs = affine_root_action(c2.rd, aff_mul(x, y), a);
    AffineRoot rhs = affine_root_action(c2.rd, x, affine_root_action(c2.rd, y, a));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("omega representatives per lattice") {
  CHECK(omega_reps(make("A1").rd, make("A1").sys, make("A1").sigma).size() == 1);

  Ctx ad = make("A1", "ad");
  auto reps_ad = omega_reps(ad.rd, ad.sys, ad.sigma);
  REQUIRE(reps_ad.size() == 2);
  for (const AffElt& w : reps_ad) CHECK(aff_length(ad.rd, w) == 0);
  CHECK(reps_ad[0].is_identity());
  CHECK(reps_ad[1] == (AffElt{{-1}, ad.rd.simple_reflection(0)}));

  Ctx gl2 = make("GL2");
  auto reps_gl = omega_reps(gl2.rd, gl2.sys, gl2.sigma);
  CHECK(reps_gl.size() == 2);  // modulo central translations t^{(k,k)}

  Ctx a2ad = make("A2", "ad");
  CHECK(omega_reps(a2ad.rd, a2ad.sys, a2ad.sigma).size() == 3);

  // with sigma = flip there is no central invariant direction: infinite
  RootDatum rdf = build_root_datum("GL3");
  Frobenius flip = build_frobenius(rdf, {1, 0});
  AffineSystem sysf = build_affine_system(rdf);
  CHECK_THROWS_AS(omega_reps(rdf, sysf, flip), std::invalid_argument);
}

TEST_CASE("element enumeration is the full length ball") {
  Ctx a1 = make("A1");
  auto elts = enumerate_elements(a1.rd, a1.sys, a1.sigma, 6);
  CHECK(elts.size() == 13);  // 1 + 2 per positive length in affine A1

  Ctx gl2 = make("GL2");
  auto e2 = enumerate_elements(gl2.rd, gl2.sys, gl2.sigma, 2);
  CHECK(e2.size() == 10);  // two Omega cosets, lengths 0..2 with 1+2+2 each

  for (auto [type, lattice] : std::vector<std::pair<std::string, std::string>>{
           {"A2", "sc"}, {"A1", "ad"}, {"C2", "sc"}}) {
    Ctx c = make(type, lattice);
    auto all = enumerate_elements(c.rd, c.sys, c.sigma, 5);
    std::set<std::string> keys;
    int prev = 0;
    for (const AffElt& x : all) {
      int l = aff_length(c.rd, x);
      CHECK(l <= 5);
      CHECK(l >= prev);  // sorted by length
      prev = l;
      CHECK(keys.insert(aff_key(c.rd, x)).second);
    }
    // closure: multiplying by any generator stays inside the ball or leaves it
    // by exactly one step
    for (const AffElt& x : all) {
      for (const AffElt& s : c.sys.s_aff) {
        AffElt y = aff_mul(x, s);
        if (aff_length(c.rd, y) <= 5) {
          CHECK(keys.count(aff_key(c.rd, y)) == 1);
        }
      }
    }
  }
}
