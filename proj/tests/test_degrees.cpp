#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "gaussdeg/degree.hpp"

using gaussdeg::BigInt;
using gaussdeg::binomial;
using gaussdeg::conormal_degree_sing;
using gaussdeg::degree_upper_bound;
using gaussdeg::DegreeMethod;
using gaussdeg::DomainError;
using gaussdeg::euler_base_locus;
using gaussdeg::euler_C;
using gaussdeg::euler_sing;
using gaussdeg::factorial;
using gaussdeg::from_decimal;
using gaussdeg::gauss_degree_isolated;
using gaussdeg::gauss_degree_jacobian;
using gaussdeg::gauss_degree_locus;
using gaussdeg::gauss_degree_smooth;
using gaussdeg::LocusSpec;
using gaussdeg::PolarizationType;
using gaussdeg::polarization_degree_sing;
using gaussdeg::printed_F;
using gaussdeg::Provenance;
using gaussdeg::UnsupportedLocus;
using gaussdeg::upper_bound_conormal;
using gaussdeg::upper_bound_polarization;

namespace {

const PolarizationType kTwo({2});
const PolarizationType kThree({3});
const PolarizationType kTwoTwo({2, 2});

}  // namespace

TEST_CASE("polarization types parse, order and validate", "[degrees]") {
  REQUIRE(PolarizationType::parse("2") == kTwo);
  REQUIRE(PolarizationType::parse("2,2") == kTwoTwo);
  REQUIRE(PolarizationType::parse("2,2").degree() == 4);
  REQUIRE(PolarizationType::parse("2,4,8").degree() == 64);
  REQUIRE(kTwoTwo.str() == "2,2");
  REQUIRE(kTwo.proved());
  REQUIRE(kThree.proved());
  REQUIRE(kTwoTwo.proved());
  REQUIRE_FALSE(PolarizationType({4}).proved());
  REQUIRE_FALSE(PolarizationType({2, 4}).proved());

  // report order: (2) < (2,2) < (3)
  REQUIRE(kTwo < kTwoTwo);
  REQUIRE(kTwoTwo < kThree);

  REQUIRE_THROWS_AS(PolarizationType({}), DomainError);
  REQUIRE_THROWS_AS(PolarizationType({1, 2}), DomainError);
  REQUIRE_THROWS_AS(PolarizationType({2, 3}), DomainError);  // 2 does not divide 3
  REQUIRE_THROWS_AS(PolarizationType::parse(""), DomainError);
  REQUIRE_THROWS_AS(PolarizationType::parse("2,,2"), DomainError);
  REQUIRE_THROWS_AS(PolarizationType::parse("2, 2"), DomainError);
  REQUIRE_THROWS_AS(PolarizationType::parse("x"), DomainError);
}

TEST_CASE("locus specs canonicalize and branch", "[degrees]") {
  LocusSpec a1(5, kTwo, 2);
  REQUIRE_FALSE(a1.smooth_branch());
  REQUIRE(a1.dim_sing() == 1);
  REQUIRE(a1.codim() == 6);
  REQUIRE(a1.provenance() == Provenance::Proved);

  // t and g-t describe the same locus
  LocusSpec mirrored(5, kTwo, 3);
  REQUIRE(mirrored.t() == 2);
  REQUIRE(gauss_degree_locus(mirrored) == gauss_degree_locus(a1));

  // t = floor(d/2) is the smooth branch
  LocusSpec smooth(5, kTwo, 1);
  REQUIRE(smooth.smooth_branch());
  REQUIRE(smooth.dim_sing() == -1);
  REQUIRE(gauss_degree_locus(smooth) == 120);
  REQUIRE(gauss_degree_locus(smooth, DegreeMethod::Euler) == 120);
  LocusSpec smooth22(7, kTwoTwo, 2);
  REQUIRE(smooth22.smooth_branch());

  // strictly between the smooth branch and the window: unsupported
  REQUIRE_THROWS_AS(LocusSpec(9, kTwoTwo, 3), UnsupportedLocus);
  REQUIRE_THROWS_AS(LocusSpec(7, kTwoTwo, 1), UnsupportedLocus);

  REQUIRE_THROWS_AS(LocusSpec(1, kTwo, 1), DomainError);
  REQUIRE_THROWS_AS(LocusSpec(5, kTwo, 0), DomainError);
  REQUIRE_THROWS_AS(LocusSpec(5, kTwo, 5), DomainError);

  // extrapolated provenance for unproved types
  REQUIRE(LocusSpec(12, PolarizationType({4}), 4).provenance() ==
          Provenance::Extrapolated);
}

TEST_CASE("base-case degrees", "[degrees]") {
  REQUIRE(gauss_degree_smooth(4) == 24);
  REQUIRE(gauss_degree_smooth(5) == 120);
  REQUIRE_THROWS_AS(gauss_degree_smooth(0), DomainError);

  REQUIRE(gauss_degree_jacobian(5, false) == 70);
  REQUIRE(gauss_degree_jacobian(6, false) == 252);
  REQUIRE(gauss_degree_jacobian(7, false) == 924);
  REQUIRE(gauss_degree_jacobian(5, true) == 16);
  REQUIRE(gauss_degree_jacobian(7, true) == 64);

  REQUIRE(gauss_degree_isolated(4, {2}) == 22);
  REQUIRE(gauss_degree_isolated(4, {2, 2, 2}) == 18);
  REQUIRE_THROWS_AS(gauss_degree_isolated(4, {1}), DomainError);
  REQUIRE_THROWS_AS(gauss_degree_isolated(4, {24}), DomainError);
}

TEST_CASE("frozen degrees on the first loci", "[degrees]") {
  REQUIRE(gauss_degree_locus(LocusSpec(5, kTwo, 2)) == 60);
  REQUIRE(gauss_degree_locus(LocusSpec(6, kTwo, 2)) == 288);
  REQUIRE(gauss_degree_locus(LocusSpec(6, kTwo, 3)) == 216);
  REQUIRE(gauss_degree_locus(LocusSpec(7, kTwo, 3)) == 1008);
  REQUIRE(gauss_degree_locus(LocusSpec(6, kThree, 3)) == 648);
  REQUIRE(gauss_degree_locus(LocusSpec(8, kTwoTwo, 4)) == 39168);
}

TEST_CASE("frozen Euler characteristics", "[degrees]") {
  REQUIRE(euler_sing(5, 2, 2) == -24);
  REQUIRE(euler_C(5, 2, 2) == 12);
  REQUIRE(euler_sing(6, 2, 3) == 144);
  REQUIRE(euler_C(6, 2, 3) == -216);
  // dim C = -1 at g = 2d: the correction locus is empty
  REQUIRE(euler_C(4, 2, 2) == 0);
  REQUIRE(euler_C(6, 3, 3) == 0);
  REQUIRE_THROWS_AS(euler_sing(5, 2, 1), DomainError);
  REQUIRE_THROWS_AS(euler_C(7, 2, 4), DomainError);
}

TEST_CASE("Euler characteristics factor through the base loci", "[degrees]") {
  for (int g = 4; g <= 20; ++g)
    for (int d : {2, 3, 4})
      for (int t = d; 2 * t <= g; ++t) {
        BigInt product = euler_base_locus(t, d) * euler_base_locus(g - t, d);
        REQUIRE(product % (d * d) == 0);
        REQUIRE(euler_sing(g, d, t) == product / (d * d));
      }
  REQUIRE_THROWS_AS(euler_base_locus(1, 2), DomainError);
  REQUIRE_THROWS_AS(euler_base_locus(3, 1), DomainError);
}

TEST_CASE("three routes agree across the window", "[degrees]") {
  for (int g = 4; g <= 24; ++g)
    for (int d : {2, 3, 4})
      for (int t = d; 2 * t <= g; ++t) {
        PolarizationType delta =
            d == 2 ? kTwo : (d == 3 ? kThree : kTwoTwo);
        LocusSpec spec(g, delta, t);
        BigInt closed = gauss_degree_locus(spec, DegreeMethod::Closed);
        REQUIRE(gauss_degree_locus(spec, DegreeMethod::Euler) == closed);
        REQUIRE(gauss_degree_locus(spec, DegreeMethod::Series) == closed);
        REQUIRE(closed > 0);
        REQUIRE(closed < factorial(g));
      }
}

TEST_CASE("degrees tie back to the counting identity", "[degrees]") {
  // g! - t!(g-t)! a_{t-d, g-t-d} computed with the closed-form coefficient
  // must reproduce the bracket form, i.e. C(g,t) = a + bracket.
  for (int g = 4; g <= 30; ++g)
    for (int d : {2, 3})
      for (int t = d; 2 * t <= g; ++t) {
        BigInt a = gaussdeg::A_closed(t - d, g - t - d, d) +
                   binomial(t - 1, d - 1) * binomial(g - t - 1, d - 1);
        PolarizationType delta = d == 2 ? kTwo : kThree;
        REQUIRE(factorial(g) - factorial(t) * factorial(g - t) * a ==
                gauss_degree_locus(LocusSpec(g, delta, t)));
      }
}

TEST_CASE("printed polynomials and where they diverge", "[degrees]") {
  // delta = (2): printed and authoritative agree everywhere
  for (int g = 4; g <= 40; ++g)
    for (int t = 2; 2 * t <= g; ++t)
      REQUIRE(printed_F(g, kTwo, t) ==
              gauss_degree_locus(LocusSpec(g, kTwo, t)));

  // the two published mismatch witnesses
  REQUIRE(printed_F(28, kThree, 5) ==
          from_decimal("279201780779957747712000000"));
  REQUIRE(printed_F(28, kThree, 5) == 120 * factorial(23) * 90);
  REQUIRE(gauss_degree_locus(LocusSpec(28, kThree, 5)) ==
          from_decimal("3908824930919408467968000000"));
  REQUIRE(printed_F(8, kTwoTwo, 4) == 4608);
  REQUIRE(gauss_degree_locus(LocusSpec(8, kTwoTwo, 4)) == 39168);

  REQUIRE_THROWS_AS(printed_F(5, kTwo, 1), DomainError);
  REQUIRE_THROWS_AS(printed_F(12, PolarizationType({4}), 4), DomainError);
}

TEST_CASE("conormal and polarization degrees bound from above", "[degrees]") {
  REQUIRE(conormal_degree_sing(5, 2, 2) == 24);
  REQUIRE(conormal_degree_sing(6, 2, 3) == 144);
  REQUIRE(polarization_degree_sing(6, 3) == 72);
  REQUIRE(upper_bound_conormal(5, 2, 2) == 72);
  REQUIRE(upper_bound_polarization(6, 3) == 576);

  for (int g = 4; g <= 20; ++g)
    for (int d : {2, 3})
      for (int t = d; 2 * t <= g; ++t) {
        PolarizationType delta = d == 2 ? kTwo : kThree;
        BigInt degree = gauss_degree_locus(LocusSpec(g, delta, t));
        REQUIRE(degree <= upper_bound_conormal(g, d, t));
      }

  REQUIRE(degree_upper_bound(4, {}) == 24);
  REQUIRE(degree_upper_bound(4, {{2, BigInt(5)}, {3, BigInt(1)}}) == 11);
  REQUIRE_THROWS_AS(degree_upper_bound(4, {{0, BigInt(5)}}), DomainError);
  REQUIRE_THROWS_AS(degree_upper_bound(4, {{2, BigInt(-1)}}), DomainError);
}

TEST_CASE("the first cross-genus collision, by hand", "[degrees]") {
  BigInt shared = from_decimal("3908824930919408467968000000");
  REQUIRE(gauss_degree_locus(LocusSpec(28, kThree, 5)) == shared);
  REQUIRE(gauss_degree_locus(LocusSpec(30, kTwo, 7)) == shared);
  REQUIRE(shared == 120 * factorial(23) * 1260);
}
