#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conjpoly/errors.hpp"
#include "conjpoly/irreducible.hpp"
#include "conjpoly/verifier.hpp"
#include "oracles.hpp"

#include <memory>

using namespace conjpoly;
using conjpoly::test::bisect_root;

namespace {

ModulusProfile profile_of(const char* poly, long bits = 128, long cap = kDefaultPrecisionCap) {
    return ModulusProfile(
        std::make_shared<RootSystem>(RootSystem::solve(parse_polynomial(poly), bits, cap)));
}

RationalPoint pt(std::vector<Rational> v) {
    for (auto& q : v) q.canonicalize();
    return RationalPoint(std::move(v));
}

}  // namespace

TEST_CASE("conjugate product examples") {
    // unit cubic at c = (2): |a0| |a1|^2 = product of all moduli = 1
    ModulusProfile p1 = profile_of("x^3 - x - 1", 128, 256);
    RealInterval v1 = conjugate_product(p1, pt({Rational(2)}));
    CHECK(v1.contains_long(1));
    CHECK(v1.width_d() < 1e-25);

    // empty exponent tuple: |a0| alone
    ModulusProfile p2 = profile_of("x^3 - x - 1");
    RealInterval v2 = conjugate_product(p2, RationalPoint{});
    auto b = bisect_root(parse_polynomial("x^3 - x - 1"), 1, 2, 120);
    CHECK(conjpoly::test::overlaps_bracket(v2, b));

    // sorted-order pitfall: alpha_1 is the second LARGEST modulus, so the
    // value at c = (4) is |a0| |a1|^4 ~ 2.1624^5 ~ 47.3, far above 1
    ModulusProfile p3 = profile_of("x^5 - 10x^2 + 1");
    RealInterval v3 = conjugate_product(p3, pt({Rational(4)}));
    CHECK(v3.strictly_above_mpq(mpq_class(40)));
    CHECK(v3.strictly_below_mpq(mpq_class(50)));
    {
        // exact oracle: value^2 = (|a0|^2)^5 = (1/|r1 r2 r3|)^5 via Vieta
        IntPolynomial q = parse_polynomial("x^5 - 10x^2 + 1");
        auto r_big = bisect_root(q, 2, 3, 140);
        auto r_mid = bisect_root(q, 0, 1, 140);
        auto r_small = bisect_root(q, -1, 0, 140);
        mpq_class prod_lo = r_big.lo * r_mid.lo * (-r_small.hi);
        mpq_class prod_hi = r_big.hi * r_mid.hi * (-r_small.lo);
        mpq_class want_lo = 1, want_hi = 1;
        for (int i = 0; i < 5; ++i) {
            want_lo /= prod_hi;
            want_hi /= prod_lo;
        }
        RealInterval v3sq = mul(v3, v3);
        CHECK_FALSE(v3sq.strictly_below_mpq(want_lo));
        CHECK_FALSE(v3sq.strictly_above_mpq(want_hi));
    }

    CHECK_THROWS_AS(conjugate_product(p3, pt({Rational(-1)})), std::invalid_argument);
    CHECK_THROWS_AS(
        conjugate_product(p1, pt({Rational(1), Rational(1), Rational(1)})),
        std::invalid_argument);
}

TEST_CASE("membership witness verdicts") {
    // vertex (4, 0) of E_{2,5}
    MarginReport r1 = check_membership_witness(parse_polynomial("x^5 - 10x^2 + 1"),
                                               pt({Rational(4), Rational(0)}));
    CHECK(r1.verdict == MarginVerdict::POSITIVE);
    REQUIRE(r1.power_form_verdict.has_value());
    CHECK(*r1.power_form_verdict == MarginVerdict::POSITIVE);

    // tightness vertex of E_{2,6} on x^6 - x^2 - 1: the value is exactly 1
    ModulusProfile p6 = profile_of("x^6 - x^2 - 1", 128, 256);
    MarginReport r2 = check_membership_witness(p6, pt({Rational(0), Rational(2)}));
    CHECK(r2.verdict == MarginVerdict::INDETERMINATE);
    CHECK(r2.value.contains_long(1));
    CHECK(r2.precision_bits == 256);

    // (3) lies outside E_{1,3} = [0, 2]
    MarginReport r3 = check_membership_witness(parse_polynomial("x^3 - x - 1"),
                                               pt({Rational(3)}));
    CHECK(r3.verdict == MarginVerdict::NEGATIVE);
    CHECK(r3.value.strictly_below_mpq(mpq_class(87, 100)));
    CHECK(r3.value.strictly_above_mpq(mpq_class(86, 100)));

    CHECK_THROWS_AS(check_membership_witness(parse_polynomial("x^2 - 1"), pt({Rational(1)})),
                    std::invalid_argument);
}

TEST_CASE("power-form cross-check agrees on a vertex corpus") {
    for (const char* s : {"x^5 - 10x^2 + 1", "x^6 - 7x^2 + 1", "x^4 - 100x^3 + 1"}) {
        IntPolynomial p = parse_polynomial(s);
        ModulusProfile prof = profile_of(s);
        const int d = p.degree();
        for (int k = 1; k < d; ++k) {
            VertexSet vs = vertices_closed_form(k, d);
            for (const LabeledVertex& v : vs.vertices) {
                MarginReport rep = check_membership_witness(prof, v.point);
                REQUIRE(rep.power_form_verdict.has_value());
                INFO(s, " k=", k, " mask=", v.mask);
                CHECK(rep.verdict == *rep.power_form_verdict);
            }
        }
    }
}

TEST_CASE("margin identity") {
    MarginIdentityReport r1 = margin_identity_check(parse_polynomial("x^3 - x - 1"), 1, {1}, 128);
    CHECK(r1.residual.contains_zero());
    CHECK(r1.residual.width_d() < 1e-20);

    MarginIdentityReport r2 = margin_identity_check(parse_polynomial("x^6 - x^2 - 1"), 2, {2});
    CHECK(r2.residual.contains_zero());
    // tight case: both sides are themselves ~0
    CHECK(std::abs(r2.lhs.mid_d()) < 1e-10);
    CHECK(std::abs(r2.rhs.mid_d()) < 1e-10);

    MarginIdentityReport r3 = margin_identity_check(parse_polynomial("x^5 - 10x^2 + 1"), 1, {1});
    CHECK(r3.residual.contains_zero());
    CHECK(r3.i_n == 1);

    // |p(0)| != 1 rejected
    CHECK_THROWS_AS(margin_identity_check(parse_polynomial("x^2 - 2"), 1, {1}),
                    std::invalid_argument);
    // empty subset rejected
    CHECK_THROWS_AS(margin_identity_check(parse_polynomial("x^3 - x - 1"), 1, {}),
                    std::invalid_argument);
    // i_n = d - 1 has no tail index to balance the identity
    CHECK_THROWS_AS(margin_identity_check(parse_polynomial("x^3 - x - 1"), 2, {2}),
                    std::invalid_argument);
}

TEST_CASE("margin identity across subsets uses only max(J)") {
    ModulusProfile prof = profile_of("x^6 - x^2 - 1");
    MarginIdentityReport a = margin_identity_check(prof, 3, {3}, 192);
    MarginIdentityReport b = margin_identity_check(prof, 3, {1, 3}, 192);
    CHECK(a.i_n == b.i_n);
    CHECK(mpfr_cmp(a.residual.lo(), b.residual.lo()) == 0);
    CHECK(mpfr_cmp(a.residual.hi(), b.residual.hi()) == 0);
}

TEST_CASE("modulus separation") {
    ModulusProfile p1 = profile_of("x^3 - x - 1");
    SeparationReport r1 = modulus_separation(p1);
    CHECK(r1.case_class == SeparationCase::REAL_COMPLEX);
    CHECK(r1.min_gap.strictly_positive());
    CHECK(r1.min_gap.strictly_above_mpq(mpq_class(4558, 10000)));
    CHECK(r1.min_gap.strictly_below_mpq(mpq_class(4559, 10000)));
    CHECK(r1.height == 1);
    CHECK(r1.degree == 3);

    // reducible but squarefree: roots 2 and 1
    ModulusProfile p2 = profile_of("x^2 - 3x + 2");
    SeparationReport r2 = modulus_separation(p2);
    CHECK(r2.case_class == SeparationCase::REAL_REAL);
    CHECK(r2.min_gap.contains_long(1));

    ModulusProfile p3 = profile_of("x^5 - 10x^2 + 1");
    SeparationReport r3 = modulus_separation(p3);
    // smallest gap is between the two inner real roots ~0.31673 vs ~0.31573
    CHECK(r3.case_class == SeparationCase::REAL_REAL);
    CHECK(r3.min_gap.strictly_above_mpq(mpq_class(9, 10000)));
    CHECK(r3.min_gap.strictly_below_mpq(mpq_class(11, 10000)));

    ModulusProfile tied = profile_of("x^2 + 1");
    CHECK_THROWS_AS(modulus_separation(tied), std::domain_error);
}

TEST_CASE("unit gap property") {
    ModulusProfile p1 = profile_of("x^3 - x - 1");
    CHECK(unit_gap_property(p1).holds);
    ModulusProfile p2 = profile_of("x^6 - x^2 - 1");
    CHECK(unit_gap_property(p2).holds);
    ModulusProfile p3 = profile_of("x^5 - 10x^2 + 1");
    CHECK(unit_gap_property(p3).holds);
    CHECK(unit_gap_property(parse_polynomial("x^3 - x - 1")).holds);
    CHECK_THROWS_AS(unit_gap_property(parse_polynomial("x^2 - 2")), std::invalid_argument);
}

TEST_CASE("sz remark bound") {
    SzRemarkReport r1 = sz_remark_check(4, 100);
    CHECK(r1.holds);
    CHECK_FALSE(r1.skipped);
    CHECK(r1.lhs.strictly_above_mpq(1));
    CHECK(r1.lhs.strictly_below_mpq(mpq_class(101, 100)));
    CHECK(r1.rhs == mpq_class(1011, 989));

    SzRemarkReport r2 = sz_remark_check(3, 3);
    CHECK(r2.rhs == mpq_class(41, 19));
    CHECK(r2.holds);

    // d=2: |r0 r1| = 1 exactly
    SzRemarkReport r3 = sz_remark_check(2, 5);
    CHECK(r3.holds);
    CHECK(r3.lhs.contains_long(1));

    CHECK_THROWS_AS(sz_remark_check(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(sz_remark_check(1, 5), std::invalid_argument);
}

TEST_CASE("vertex membership sweep is never NEGATIVE, strict when d > 3k") {
    for (unsigned d = 2; d <= 6; ++d)
        for (unsigned j = 1; j < d; ++j)
            for (long h : {3L, -3L, 10L, -10L, 40L}) {
                IntPolynomial f = make_trinomial(TrinomialSpec(d, j, h));
                auto irr = certify_irreducible(f);
                if (irr.status != IrreducibilityStatus::IRREDUCIBLE) continue;
                bool rou = is_root_of_unity_poly(f);
                ModulusProfile prof(
                    std::make_shared<RootSystem>(RootSystem::solve(f, 128)));
                for (unsigned k = 1; k < d; ++k) {
                    VertexSet vs = vertices_closed_form(static_cast<int>(k), static_cast<int>(d));
                    for (const LabeledVertex& v : vs.vertices) {
                        MarginReport rep = check_membership_witness(prof, v.point);
                        INFO("d=", d, " j=", j, " h=", h, " k=", k, " mask=", v.mask);
                        CHECK(rep.verdict != MarginVerdict::NEGATIVE);
                        if (d > 3 * k && !rou) CHECK(rep.verdict == MarginVerdict::POSITIVE);
                    }
                }
            }
}

TEST_CASE("permutation invariance within tied groups") {
    // the profile exposes one hull interval per tied group, so any
    // relabeling inside a group leaves every downstream report unchanged
    ModulusProfile prof = profile_of("x^6 - x^2 - 1");
    CHECK(prof.tied(0, 1));
    CHECK(mpfr_cmp(prof.modulus(0).lo(), prof.modulus(1).lo()) == 0);
    CHECK(mpfr_cmp(prof.modulus(0).hi(), prof.modulus(1).hi()) == 0);
    for (int pos = 0; pos + 1 < prof.degree(); ++pos)
        if (prof.tied(pos, pos + 1)) {
            CHECK(mpfr_cmp(prof.modulus(pos).lo(), prof.modulus(pos + 1).lo()) == 0);
            CHECK(mpfr_cmp(prof.modulus(pos).hi(), prof.modulus(pos + 1).hi()) == 0);
        }
    // identical reports across independent solves
    ModulusProfile prof2 = profile_of("x^6 - x^2 - 1");
    MarginReport a = check_membership_witness(prof, pt({Rational(0), Rational(2)}));
    MarginReport b = check_membership_witness(prof2, pt({Rational(0), Rational(2)}));
    CHECK(a.verdict == b.verdict);
    CHECK(mpfr_cmp(a.value.lo(), b.value.lo()) == 0);
    CHECK(mpfr_cmp(a.value.hi(), b.value.hi()) == 0);
}

TEST_CASE("monotonicity: larger exponents shrink the product when tails are small") {
    ModulusProfile prof = profile_of("x^3 - x - 1");
    // moduli beyond index 0 are below 1 here
    RealInterval v1 = conjugate_product(prof, pt({Rational(1)}));
    RealInterval v2 = conjugate_product(prof, pt({Rational(2)}));
    double w = std::max(v1.width_d(), v2.width_d());
    CHECK(v1.lo_d() >= v2.hi_d() - 2 * w);
    RealInterval v0 = conjugate_product(prof, pt({Rational(0)}));
    CHECK(v0.lo_d() >= v1.hi_d() - 2 * std::max(v0.width_d(), v1.width_d()));
}
