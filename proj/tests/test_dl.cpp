#include <cstdio>
#include <fstream>
#include <iterator>
#include <random>

#include "affweyl/alcove.hpp"
#include "affweyl/dl.hpp"
#include "doctest.h"

using namespace affweyl;

namespace {

Group mk(const std::string& type, const std::string& lattice = "sc",
         const std::vector<int>& perm = {}) {
  RootDatum rd = build_root_datum(type, lattice);
  return make_group(rd, build_frobenius(rd, perm));
}

RatVec rvec(std::initializer_list<Rat> rs) { return RatVec(rs); }

}  // namespace

TEST_CASE("polynomials in q") {
  Poly one = Poly::one();
  CHECK(one.to_string() == "1");
  CHECK(one.times_q().to_string() == "q");
  CHECK(one.times_q_minus_one().to_string() == "q-1");
  CHECK(one.times_q().times_q().to_string() == "q^2");
  CHECK(one.times_q_minus_one().times_q_minus_one().to_string() == "q^2-2q+1");
  CHECK(one.times_q_minus_one().plus(one.times_q()).to_string() == "2q-1");
  CHECK(Poly{{1, -1}}.plus(Poly{{-1, 1}}).is_zero());
  CHECK(Poly{}.to_string() == "0");
  CHECK(Poly{}.times_q().is_zero());
  CHECK(Poly{{-1, 2}}.to_string() == "2q-1");
  CHECK(one.times_q_minus_one().at_one() == 0);
  CHECK(Poly{{0, 0, 3}}.degree() == 2);
  CHECK(one.times_q_minus_one().degree() == 1);
}

TEST_CASE("minimality certificates and pivots") {
  Group a1 = mk("A1");
  Minimality cert = minimality(a1, aff_translation({1}, a1.rd));
  CHECK(cert.minimal);
  CHECK(cert.orbit == std::vector<std::string>({aff_key(a1.rd, aff_translation({-1}, a1.rd)),
                                                aff_key(a1.rd, aff_translation({1}, a1.rd))}));

  AffElt x{{-2}, a1.rd.simple_reflection(0)};
  Minimality piv = minimality(a1, x);
  CHECK_FALSE(piv.minimal);
  CHECK(piv.base == x);
  CHECK(piv.pivot == 0);  // s_0 x sigma(s_0) = s_1 drops 3 -> 1

  CHECK(minimality(a1, aff_identity(a1.rd)).minimal);
  Group gl2 = mk("GL2", "gl");
  for (const AffElt& om : omega_reps(gl2.rd, gl2.sys, gl2.sigma))
    CHECK(minimality(gl2, om).minimal);
}

TEST_CASE("reduction fixtures") {
  Group a1 = mk("A1");
  DLEngine e(a1);

  // leaf: the finite reflection
  const DLRecord& rs = e.analyze(aff_from_weyl(a1.rd.simple_reflection(0)));
  REQUIRE(rs.classes.size() == 1);
  CHECK(rs.length == 1);
  CHECK(rs.classes[0].nu == rvec({Rat(0)}));
  CHECK(rs.polys[0] == Poly::one());
  CHECK(rs.dims[0] == 1);

  // the hand-reduced split
  const DLRecord& rx = e.analyze(AffElt{{-2}, a1.rd.simple_reflection(0)});
  CHECK(rx.length == 3);
  REQUIRE(rx.classes.size() == 2);
  CHECK(rx.classes[0].nu == rvec({Rat(0)}));
  CHECK(rx.classes[1].nu == rvec({Rat(1)}));
  CHECK(rx.polys[0].to_string() == "q");
  CHECK(rx.polys[1].to_string() == "q-1");
  CHECK(rx.dims[0] == 2);
  CHECK(rx.dims[1] == 1);

  // minimal translation in GL2
  Group gl2 = mk("GL2", "gl");
  DLEngine eg(gl2);
  const DLRecord& rt = eg.analyze(aff_translation({1, 0}, gl2.rd));
  REQUIRE(rt.classes.size() == 1);
  CHECK(rt.classes[0].nu == rvec({Rat(1), Rat(0)}));
  CHECK(rt.classes[0].kappa == std::vector<i64>{1});
  CHECK(rt.polys[0] == Poly::one());
  CHECK(rt.dims[0] == 0);

  // identity
  const DLRecord& re = eg.analyze(aff_identity(gl2.rd));
  CHECK(re.length == 0);
  REQUIRE(re.classes.size() == 1);
  CHECK(rvec_is_zero(re.classes[0].nu));
  CHECK(re.dims[0] == 0);
}

TEST_CASE("class polynomial invariants over sweeps") {
  for (const Group& g : {mk("A1"), mk("A1", "ad"), mk("GL2", "gl"), mk("A2"),
                         mk("A2", "sc", {1, 0}), mk("A1xA1", "sc", {1, 0}), mk("C2")}) {
    DLEngine e(g);
    for (const AffElt& x : enumerate_elements(g.rd, g.sys, g.sigma, 5)) {
      const DLRecord rec = e.analyze(x);
      CHECK(rec.length == aff_length(g.rd, x));
      REQUIRE(!rec.classes.empty());
      REQUIRE(rec.polys.size() == rec.classes.size());
      REQUIRE(rec.dims.size() == rec.classes.size());

      i64 at_one = 0;
      std::vector<i64> kx = kottwitz_point(g, x);
      for (size_t i = 0; i < rec.classes.size(); ++i) {
        CHECK(rec.classes[i].kappa == kx);  // kappa-constancy
        CHECK(rec.classes[i].scope == g.fingerprint);
        CHECK_FALSE(rec.polys[i].is_zero());  // support = class set
        CHECK(rec.polys[i].degree() <= rec.length);
        CHECK(g.rd.is_dominant(rec.classes[i].nu));
        if (i + 1 < rec.classes.size())
          CHECK(sigma_class_less(rec.classes[i], rec.classes[i + 1]));
        at_one += rec.polys[i].at_one();
      }
      CHECK(at_one == 1);

      SigmaClass top = generic_class(e, x);
      for (const SigmaClass& c : rec.classes) CHECK(dominance_leq(g, c, top));
      CHECK(rdot(top.nu, g.rd.two_rho) <= Rat(rec.length));
    }
  }
}

TEST_CASE("pivot order perturbation changes nothing") {
  for (const Group& g : {mk("A1"), mk("GL2", "gl"), mk("A2", "sc", {1, 0}), mk("C2")}) {
    DLEngine asc(g, false);
    DLEngine desc(g, true);
    for (const AffElt& x : enumerate_elements(g.rd, g.sys, g.sigma, 5))
      CHECK(asc.analyze(x) == desc.analyze(x));
  }
}

TEST_CASE("spherical sigma-support matches single basic class") {
  for (const Group& g : {mk("A1"), mk("A1", "ad"), mk("GL2", "gl"), mk("A2"),
                         mk("A2", "sc", {1, 0}), mk("A1xA1", "sc", {1, 0}), mk("G2")}) {
    DLEngine e(g);
    for (const AffElt& x : enumerate_elements(g.rd, g.sys, g.sigma, 5)) {
      const DLRecord& rec = e.analyze(x);
      bool single_basic = rec.classes.size() == 1 && is_basic(g, rec.classes[0]);
      CHECK(sigma_support(g, x).spherical == single_basic);
    }
  }
}

TEST_CASE("generic class fixtures") {
  Group a1 = mk("A1");
  DLEngine e(a1);
  CHECK(generic_class(e, AffElt{{-2}, a1.rd.simple_reflection(0)}).nu == rvec({Rat(1)}));
  // a minimal element is its own generic class
  AffElt s = aff_from_weyl(a1.rd.simple_reflection(0));
  CHECK(generic_class(e, s) == class_of(a1, s));
  // translations: dominant orbit representative
  Group a2 = mk("A2");
  DLEngine e2(a2);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<i64> coord(-3, 3);
  for (int t = 0; t < 15; ++t) {
    IVec mu(a2.rd.dim);
    for (int i = 0; i < a2.rd.dim; ++i) mu[i] = coord(rng);
    AffElt x = aff_translation(mu, a2.rd);
    CHECK(generic_class(e2, x).nu == rat_vec(a2.rd.dominant_representative(mu).first));
  }
}

TEST_CASE("dimension table fixtures") {
  Group a1 = mk("A1");
  DLEngine e(a1);
  // dominant translations are leaves of dimension zero
  for (i64 m = 0; m <= 3; ++m) {
    const DLRecord& r = e.analyze(aff_translation({m}, a1.rd));
    REQUIRE(r.classes.size() == 1);
    CHECK(r.dims[0] == 0);
  }
  // antidominant translations land in the same class with the same table
  CHECK(e.analyze(aff_translation({-2}, a1.rd)) == e.analyze(aff_translation({2}, a1.rd)));
}

TEST_CASE("memo sharing and merging") {
  Group a2 = mk("A2");
  DLEngine a(a2), b(a2), fresh(a2);
  std::vector<AffElt> elts = enumerate_elements(a2.rd, a2.sys, a2.sigma, 4);
  for (size_t i = 0; i < elts.size(); i += 2) a.analyze(elts[i]);
  for (size_t i = 1; i < elts.size(); i += 2) b.analyze(elts[i]);
  a.merge_from(b);
  CHECK(a.memo_size() >= b.memo_size());
  for (const AffElt& x : elts) CHECK(a.analyze(x) == fresh.analyze(x));
}

TEST_CASE("cache round trip") {
  const std::string path = "dl_cache_test.jsonl";
  Group c2 = mk("C2");
  std::vector<AffElt> elts = enumerate_elements(c2.rd, c2.sys, c2.sigma, 4);

  DLEngine cold(c2);
  for (const AffElt& x : elts) cold.analyze(x);
  cold.save_cache(path);

  DLEngine warm(c2);
  CHECK(warm.load_cache(path) == static_cast<int>(cold.memo_size()));
  CHECK(warm.stats().cache_loaded == static_cast<i64>(cold.memo_size()));
  for (const AffElt& x : elts) {
    CHECK(warm.analyze(x) == cold.analyze(x));
  }
  CHECK(warm.stats().reductions == 0);  // everything came from the cache

  // byte-identical resave
  warm.save_cache(path + ".resaved");
  std::ifstream f1(path), f2(path + ".resaved");
  std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(s1 == s2);

  // foreign fingerprint is ignored
  DLEngine other(mk("A2"));
  CHECK(other.load_cache(path) == 0);

  // missing file is a cold start
  DLEngine none(c2);
  CHECK(none.load_cache("does_not_exist.jsonl") == 0);

  std::remove(path.c_str());
  std::remove((path + ".resaved").c_str());
}

TEST_CASE("levi reduction reuses the same engine code") {
  Group a2 = mk("A2");
  Group torus = make_levi_group(a2, {});
  DLEngine et(torus);
  // no simple reflections: every element is minimal and its own class
  AffElt x = aff_translation({2, -1}, torus.rd);
  const DLRecord& r = et.analyze(x);
  CHECK(r.length == 0);
  REQUIRE(r.classes.size() == 1);
  CHECK(r.classes[0] == class_of(torus, x));
  CHECK(r.polys[0] == Poly::one());
  CHECK(r.dims[0] == 0);

  Group m = make_levi_group(a2, {1});
  DLEngine em(m);
  AffElt y{{0, -2}, m.rd.simple_reflection(0)};  // t^{-2 alpha_2^vee} s_2 inside the Levi
  const DLRecord& rm = em.analyze(y);
  CHECK(rm.length == 3);
  CHECK(rm.classes.size() == 2);
}
