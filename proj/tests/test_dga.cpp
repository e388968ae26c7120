#include <catch2/catch_amalgamated.hpp>

#include "lcdga/cobordism.hpp"
#include "lcdga/dga.hpp"
#include "lcdga/families.hpp"
#include "lcdga/io.hpp"

using namespace lcdga;

TEST_CASE("unknot with one base point: dc11 = 1 + t") {
  ClosureSpec spec{BraidWord(1, {})};
  spec.columns[0].add(1, Basepoint{"t"});
  DGAPtr dga = build_dga(spec);
  CHECK(dga->d(gen_id("c11")) == parse_nc("1 + t", *dga->ring));
  CHECK(check_structure(*dga).ok);
}

TEST_CASE("trefoil differential is 1 + P(a1)...P(a5)D(t1,t2)") {
  Family tor = family_torus(2, 3);
  DGAPtr dga = build_dga(tor.spec);
  Ring& ring = *dga->ring;
  NCMatrix p = NCMatrix::identity(2);
  for (int i = 1; i <= 5; ++i)
    p = p * path_factor(1, NCPoly::gen("a" + std::to_string(i)), 2);
  p = p * diagonal({NCPoly::scalar(ring.var("t1")),
                    NCPoly::scalar(ring.var("t2"))});
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      NCPoly expect = p.at(i - 1, j - 1);
      if (i == j) expect += NCPoly::one();
      CHECK(dga->d(gen_id(ClosureDGA::c_name(i, j))) == expect);
    }
  CHECK(check_structure(*dga).ok);
}

TEST_CASE("affine D4 generator counts and structure") {
  DGAPtr dga = build_dga(family_d(4).spec);
  int deg0 = 0, deg1 = 0;
  for (const auto& g : dga->generators) (g.degree == 0 ? deg0 : deg1)++;
  CHECK(deg0 == 20);
  CHECK(deg1 == 16);
  for (const auto& g : dga->generators)
    if (g.degree == 0) CHECK(dga->d(g.id).is_zero());
  auto rep = check_structure(*dga);
  CAPTURE(rep.violations);
  CHECK(rep.ok);
}

TEST_CASE("structure checks on every preset family") {
  for (const char* name : {"d4", "d5", "lambda1", "lambda2", "lambda3", "b11",
                           "b12", "b21", "torus:2,3", "torus:3,4",
                           "knot_10_139", "knot_m10_145"}) {
    DGAPtr dga = build_dga(family_preset(name).spec);
    auto rep = check_structure(*dga);
    CAPTURE(name, rep.violations);
    CHECK(rep.ok);
  }
}

TEST_CASE("a corrupted differential is flagged") {
  DGAPtr good = build_dga(family_torus(2, 3).spec);
  auto bad = std::make_shared<ClosureDGA>(*good);
  // flip a sign on one term of d(c11)
  NCPoly d = bad->d(gen_id("c11"));
  auto it = d.terms.rbegin();
  it->second = -it->second;
  bad->differential_map[gen_id("c11")] = d;
  CHECK_FALSE(check_structure(*bad).ok);
}

TEST_CASE("leibniz rule") {
  DGAPtr dga = build_dga(family_torus(2, 3).spec);
  NCPoly c11 = NCPoly::gen("c11"), a1 = NCPoly::gen("a1");
  CHECK(dga->differential(c11 * a1) == dga->d(gen_id("c11")) * a1);
  CHECK(dga->differential(NCPoly::one()).is_zero());
  CHECK(dga->differential(a1).is_zero());
  // sign: d(c11 * c12) = d(c11) c12 - c11 d(c12)
  NCPoly c12 = NCPoly::gen("c12");
  CHECK(dga->differential(c11 * c12) ==
        dga->d(gen_id("c11")) * c12 - c11 * dga->d(gen_id("c12")));
}

TEST_CASE("link automorphisms are chain maps") {
  SECTION("all units 1 is the identity") {
    DGAPtr dga = build_dga(family_lambda(1).spec);
    auto f = link_automorphism(dga, {Laurent::one(), Laurent::one()});
    CHECK(f.is_identity());
  }
  SECTION("knot: identity regardless of the unit") {
    DGAPtr dga = build_dga(family_torus(2, 3).spec);
    auto f = link_automorphism(dga, {parse_laurent("t1", *dga->ring)});
    CHECK(f.is_identity());
  }
  SECTION("2-component link with units (s, 1)") {
    DGAPtr dga = build_dga(family_lambda(1).spec);
    auto ring = std::const_pointer_cast<ClosureDGA>(dga)->ring;
    Laurent s = Laurent::variable(ring->add("s"));
    auto f = link_automorphism(dga, {s, Laurent::one()});
    CHECK_FALSE(f.is_identity());
    std::string why;
    bool ok = verify_chain_map(f, &why);
    CAPTURE(why);
    CHECK(ok);
    // intra-component chords fixed, inter-component chords scale
    bool saw_scaled = false, saw_fixed = false;
    for (const auto& g : dga->generators) {
      if (g.degree != 0) continue;
      if (g.r_comp == g.c_comp) {
        CHECK(f.image(g.id) == NCPoly::gen(g.id));
        saw_fixed = true;
      } else {
        CHECK_FALSE(f.image(g.id) == NCPoly::gen(g.id));
        saw_scaled = true;
      }
    }
    CHECK(saw_fixed);
    CHECK(saw_scaled);
  }
  SECTION("wrong unit count") {
    DGAPtr dga = build_dga(family_lambda(1).spec);
    CHECK_THROWS_AS(link_automorphism(dga, {Laurent::one()}), ring_error);
  }
}
