#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "lcdga/io.hpp"
#include "lcdga/dga.hpp"
#include "lcdga/ncpoly.hpp"

using namespace lcdga;

TEST_CASE("words multiply by concatenation, coefficients commute past") {
  Ring ring;
  NCPoly p = parse_nc("a1", ring) * parse_nc("a2", ring);
  CHECK(to_string(ring, p) == "a1*a2");
  NCPoly q = parse_nc("s*a", ring) * parse_nc("s^-1*b", ring);
  CHECK(q == parse_nc("a*b", ring));
  // noncommutativity of generators
  CHECK(parse_nc("a1*a2 - a2*a1", ring) != NCPoly::zero());
}

TEST_CASE("nc ring axioms") {
  Ring ring;
  std::vector<NCPoly> vals;
  for (const char* s : {"a + b", "s*a*b - 1", "b*a + s^-1", "a - b*a*b"})
    vals.push_back(parse_nc(s, ring));
  for (const auto& x : vals)
    for (const auto& y : vals)
      for (const auto& z : vals) {
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * NCPoly::one() == x);
        CHECK(NCPoly::one() * x == x);
      }
}

TEST_CASE("path factors") {
  Ring ring;
  NCPoly a = parse_nc("a", ring);
  SECTION("P_1(a) for n = 2 is [[0,1],[1,a]]") {
    NCMatrix p = path_factor(1, a, 2);
    CHECK(p.at(0, 0).is_zero());
    CHECK(p.at(0, 1) == NCPoly::one());
    CHECK(p.at(1, 0) == NCPoly::one());
    CHECK(p.at(1, 1) == a);
  }
  SECTION("two-sided inverse, symbolically") {
    for (int n = 2; n <= 4; ++n)
      for (int k = 1; k < n; ++k) {
        NCMatrix p = path_factor(k, a, n);
        NCMatrix pi = path_factor_inverse(k, a, n);
        CHECK((p * pi).is_identity());
        CHECK((pi * p).is_identity());
      }
  }
  SECTION("P_1(0) swaps") {
    NCMatrix p = path_factor(1, NCPoly::zero(), 2);
    CHECK(p.at(1, 1).is_zero());
  }
  SECTION("index out of range") {
    CHECK_THROWS_AS(path_factor(2, a, 2), ring_error);
  }
}

TEST_CASE("purple box path matrix of the affine D4 diagram") {
  Ring ring;
  ring.add("t1", true);
  ring.add("t2", true);
  NCMatrix m = path_factor(1, parse_nc("a19", ring), 2) *
               path_factor(1, parse_nc("a20", ring), 2) *
               diagonal({NCPoly::scalar(ring.var("t1")),
                         NCPoly::scalar(ring.var("t2"))});
  CHECK(m.at(0, 0) == parse_nc("t1", ring));
  CHECK(m.at(0, 1) == parse_nc("t2*a20", ring));
  CHECK(m.at(1, 0) == parse_nc("t1*a19", ring));
  CHECK(m.at(1, 1) == parse_nc("t2*(1 + a19*a20)", ring));
}

TEST_CASE("substitution is an algebra map applied once") {
  Ring ring;
  NCPoly x = parse_nc("a1*a2 + s*a1", ring);
  std::map<uint32_t, NCPoly> images{{gen_id("a1"), parse_nc("a1 - s^-1", ring)},
                                    {gen_id("a2"), parse_nc("a2", ring)}};
  NCPoly y = x.substitute(images);
  CHECK(y == parse_nc("a1*a2 - s^-1*a2 + s*a1 - 1", ring));
  // missing image is an error
  CHECK_THROWS_AS(parse_nc("a9", ring).substitute(images), ring_error);
}

TEST_CASE("path matrix identity f_Sigma(P2) = P1 for the s1^3 -> s1^2 pinch") {
  // Prop: substituting a2 -> s2, a1 -> a1 - s2^-1, a3 -> a3 - s2^-1 in
  // P(a1)P(a2)P(a3) yields P(a1) diag(-s2^-1, s2) P(a3).
  Ring ring;
  ring.add("s2");
  NCMatrix p2 = path_factor(1, parse_nc("a1", ring), 2) *
                path_factor(1, parse_nc("a2", ring), 2) *
                path_factor(1, parse_nc("a3", ring), 2);
  std::map<uint32_t, NCPoly> f{{gen_id("a1"), parse_nc("a1 - s2^-1", ring)},
                               {gen_id("a2"), parse_nc("s2", ring)},
                               {gen_id("a3"), parse_nc("a3 - s2^-1", ring)}};
  NCMatrix lhs = p2.map([&](const NCPoly& e) { return e.substitute(f); });
  NCMatrix rhs = path_factor(1, parse_nc("a1", ring), 2) *
                 diagonal({NCPoly::scalar(parse_laurent("-s2^-1", ring)),
                           NCPoly::scalar(parse_laurent("s2", ring))}) *
                 path_factor(1, parse_nc("a3", ring), 2);
  CHECK(lhs == rhs);
}

TEST_CASE("path matrix basics and concatenation") {
  SECTION("empty braid with no base points is the identity") {
    ClosureSpec spec{BraidWord(3, {})};
    Ring ring;
    CHECK(path_matrix(spec, ring).is_identity());
  }
  SECTION("sigma1 sigma1 without base points") {
    ClosureSpec spec{BraidWord(2, {1, 1})};
    Ring ring;
    NCMatrix p = path_matrix(spec, ring);
    CHECK(p.at(0, 0) == NCPoly::one());
    CHECK(p.at(0, 1) == parse_nc("a2", ring));
    CHECK(p.at(1, 0) == parse_nc("a1", ring));
    CHECK(p.at(1, 1) == parse_nc("1 + a1*a2", ring));
  }
  SECTION("concatenation: the path matrix splits at any column") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 2 + static_cast<int>(rng() % 3);
      size_t len = 1 + rng() % 8;
      std::vector<int> letters;
      for (size_t i = 0; i < len; ++i)
        letters.push_back(1 + static_cast<int>(rng() % (n - 1)));
      ClosureSpec spec{BraidWord(n, letters)};
      Ring ring;
      for (int st = 1; st <= n; ++st)
        spec.columns[rng() % (len + 1)].add(
            st, Basepoint{"u" + std::to_string(st)});
      for (const auto& [v, idx] : std::map<std::string, size_t>{})
        (void)v;
      for (int st = 1; st <= n; ++st) ring.add("u" + std::to_string(st));
      size_t cut = rng() % (len + 1);
      NCMatrix whole = path_matrix(spec, ring);
      NCMatrix left = path_matrix(spec, ring, 0, cut);
      NCMatrix right = path_matrix(spec, ring, cut, len);
      // the cut column appears in both parts; divide it back out
      NCMatrix mid = column_matrix(spec, ring, cut);
      NCMatrix mid_inv = NCMatrix::identity(n);
      for (int i = 0; i < n; ++i)
        mid_inv.at(i, i) =
            NCPoly::scalar(mid.at(i, i).scalar_part().inverse());
      CAPTURE(n, letters, cut);
      CHECK(left * mid_inv * right == whole);
    }
  }
}

TEST_CASE("nc json canonical order: by length then lexicographic") {
  Ring ring;
  NCPoly p = parse_nc("a2*a1 + a1 - 1", ring);
  CHECK(json_string(ring, p) ==
        "{\"terms\":[{\"coeff\":\"-1\",\"mono\":{},\"word\":[]},"
        "{\"coeff\":\"1\",\"mono\":{},\"word\":[\"a1\"]},"
        "{\"coeff\":\"1\",\"mono\":{},\"word\":[\"a2\",\"a1\"]}]}");
}
