#include <doctest.h>

#include <random>

#include "arrowpoly/analysis.hpp"
#include "arrowpoly/whisker_engine.hpp"

using namespace arrowpoly;

namespace {

const char* kKishinoNA = "A^4 + 1 + A^-4 - (A^4 + 2 + A^-4)*K[1]^2 + 2*K[2]";

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("genus bound") {
  CHECK(genus_lower_bound(parse_poly("A^-4 + 1 - A^8")) == 0);
  CHECK(genus_lower_bound(HArrowPoly()) == 0);
  CHECK(genus_lower_bound(parse_poly(kKishinoNA)) == 1);
  CHECK(genus_lower_bound(parse_poly("A^2*K[1]*K[2]*K[3] + K[1]^5")) == 2);
  CHECK(genus_lower_bound(parse_poly("K[1]*K[2]")) == 2);  // ceil(2/3 + 1)
  CHECK(genus_lower_bound(parse_poly("K[1]*K[2]*K[3]*K[4]")) == 3);
  CHECK(genus_lower_bound(parse_poly("K[1]*K[2]*K[3]*K[4]*K[5]*K[6]")) == 3);
  CHECK(genus_lower_bound(parse_poly("K[1]*K[2]*K[3]*K[4]*K[5]*K[6]*K[7]")) == 4);
}

TEST_CASE("crossing bound") {
  CHECK(crossing_lower_bound(HArrowPoly(3)) == 0);
  CHECK(crossing_lower_bound(parse_poly("A^-2 + (1 - A^4)*K[1]")) == 1);
  CHECK(crossing_lower_bound(parse_poly(kKishinoNA)) == 2);
  CHECK(crossing_lower_bound(parse_poly("X[1,-1]^2")) == 2);
  CHECK(crossing_lower_bound(parse_poly("X[3,-1]")) == 2);
}

TEST_CASE("checkerboard obstruction") {
  const auto a21 = checkerboard_obstruction(parse_poly("A^-2 + (1 - A^4)*K[1]"));
  CHECK(a21.obstructed);
  REQUIRE(a21.monomial);
  CHECK(*a21.monomial == parse_poly("K[1]").terms().begin()->first);
  CHECK_FALSE(a21.reason.empty());
  CHECK_FALSE(checkerboard_obstruction(parse_poly("-A^-5 + A^-1 - A^3 + (-A^-1 + A^7)*K[1]^2")).obstructed);
  // Sum not divisible by 4.
  CHECK(checkerboard_obstruction(parse_poly("K[1]*K[2]")).obstructed);
  // Largest index exceeds the rest.
  CHECK(checkerboard_obstruction(parse_poly("K[1]^2*K[4]")).obstructed);
  CHECK_FALSE(checkerboard_obstruction(parse_poly("K[1]^2*K[2]")).obstructed);
  CHECK_FALSE(checkerboard_obstruction(parse_poly("A^3 - 1")).obstructed);
  CHECK_THROWS_AS(checkerboard_obstruction(parse_poly("X[1,1]")), InvariantError);
}

TEST_CASE("nullhomology report") {
  const auto t = nullhomology_necessary(parse_poly("-A^-4 + 1 + A^8"));
  CHECK(t.arrow_trivial);
  CHECK(t.index_gcd == 0);
  CHECK(t.allows(0));
  CHECK(t.allows(7));
  const auto v = nullhomology_necessary(parse_poly("A^-2 + (1 - A^4)*K[1]"));
  CHECK_FALSE(v.arrow_trivial);
  CHECK(v.index_gcd == 2);
  CHECK_FALSE(v.allows(0));
  CHECK(v.allows(1));
  CHECK(v.allows(2));
  CHECK_FALSE(v.allows(3));
  CHECK_FALSE(v.allows(4));
  // Indices {6, 12}: n = 3 needs multiples of 6, n = 6 multiples of 6.
  const auto w = nullhomology_necessary(parse_poly("K[3] + K[6]"));
  CHECK(w.index_gcd == 6);
  CHECK(w.allows(3));
  CHECK(w.allows(6));
  CHECK(w.allows(2));
  CHECK_FALSE(w.allows(4));
  CHECK_FALSE(w.allows(5));
}

TEST_CASE("reports are mirror invariant") {
  for (const char* s : {kKishinoNA, "A^-2 + (1 - A^4)*K[1]", "-A^-5 + (A^-5 - A^3)*K[1]^2", "A^3*K[1]*K[2]*K[3] - A^-7*K[4]"}) {
    const HArrowPoly p = parse_poly(s);
    const HArrowPoly m = mirror_subst(p);
    CHECK(genus_lower_bound(p) == genus_lower_bound(m));
    CHECK(crossing_lower_bound(p) == crossing_lower_bound(m));
    CHECK(checkerboard_obstruction(p).obstructed == checkerboard_obstruction(m).obstructed);
    CHECK(nullhomology_necessary(p).index_gcd == nullhomology_necessary(m).index_gcd);
    const BoundReport a = bound_report(p), b = bound_report(m);
    CHECK(a.genus_lb == b.genus_lb);
    CHECK(a.crossing_lb == b.crossing_lb);
    CHECK(a.arrow_trivial == b.arrow_trivial);
  }
}

TEST_CASE("bounds are monotone under adding terms") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> idx(1, 5), exp(-6, 6), cnt(0, 3);
  for (int it = 0; it < 200; ++it) {
    HArrowPoly p, q;
    for (int t = 0; t < 3; ++t) {
      HArrowPoly m(LaurentZ::monomial(1, exp(rng)));
      for (int f = cnt(rng); f > 0; --f) m *= HArrowPoly::k(idx(rng));
      (t < 2 ? p : q) += m;
    }
    // Avoid cancellation changing the monomial set.
    bool kept = true;
    for (const auto& [m, c] : p.terms()) kept = kept && !(p + q).coeff(m).is_zero();
    if (!kept) continue;
    CHECK(genus_lower_bound(p + q) >= genus_lower_bound(p));
    CHECK(crossing_lower_bound(p + q) >= crossing_lower_bound(p));
  }
}

}  // TEST_SUITE
