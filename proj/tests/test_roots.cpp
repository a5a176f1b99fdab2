#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conjpoly/errors.hpp"
#include "conjpoly/roots.hpp"
#include "oracles.hpp"

#include <memory>

using namespace conjpoly;
using conjpoly::test::RationalBracket;
using conjpoly::test::bisect_root;
using conjpoly::test::overlaps_bracket;

namespace {

// test-side box evaluation, built only from the public interval API
ComplexBox horner_box(const IntPolynomial& p, const ComplexBox& z) {
    mpfr_prec_t prec = z.re.prec();
    ComplexBox acc(RealInterval::from_mpz(p.leading(), prec), RealInterval(prec));
    for (int i = p.degree() - 1; i >= 0; --i) {
        acc = mul(acc, z);
        acc.re = add(acc.re, RealInterval::from_mpz(p.coeff(i), prec));
    }
    return acc;
}

}  // namespace

TEST_CASE("sqrt2 enclosures at 64 bits") {
    IntPolynomial p = parse_polynomial("x^2 - 2");
    RootSystem sys = RootSystem::solve(p, 64);
    REQUIRE(sys.degree() == 2);
    // oracle: bisection on [1, 2]
    auto b = bisect_root(p, 1, 2, 90);
    bool found_pos = false, found_neg = false;
    for (int i = 0; i < 2; ++i) {
        RealInterval m = sys.modulus_interval(i);
        CHECK(overlaps_bracket(m, b));
        CHECK(sys.is_real_root(i));
        // radius <= 2^-64 * max(1, |center|)
        double r = mpfr_get_d(sys.enclosures()[static_cast<size_t>(i)].radius.hi(), MPFR_RNDU);
        CHECK(r <= ldexp(1.5, -63));
        if (sys.enclosures()[static_cast<size_t>(i)].center.re_d() > 0) found_pos = true;
        if (sys.enclosures()[static_cast<size_t>(i)].center.re_d() < 0) found_neg = true;
    }
    CHECK(found_pos);
    CHECK(found_neg);
}

TEST_CASE("cubic x^3 - x - 1 against the bisection oracle") {
    IntPolynomial p = parse_polynomial("x^3 - x - 1");
    auto sys = std::make_shared<RootSystem>(RootSystem::solve(p, 128));
    ModulusProfile prof(sys);
    // real root in [1, 2]; frozen leading digits 1.3247179572...
    auto b = bisect_root(p, 1, 2, 120);
    CHECK(b.lo >= mpq_class("13247179572/10000000000"));
    CHECK(b.hi <= mpq_class("13247179573/10000000000"));
    CHECK(overlaps_bracket(prof.modulus(0), b));
    // complex pair modulus: |z|^2 = 1/r since the root product is 1
    RealInterval pair_sq = mul(prof.modulus(1), prof.modulus(1));
    RealInterval inv_r(128);
    mpfr_set_q(inv_r.lo_mut(), mpq_class(1 / b.hi).get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(inv_r.hi_mut(), mpq_class(1 / b.lo).get_mpq_t(), MPFR_RNDU);
    CHECK(pair_sq.overlaps(inv_r));
    // groups {0}, {1,2}
    CHECK(prof.group_of(0) == 0);
    CHECK(prof.group_of(1) == 1);
    CHECK(prof.group_of(2) == 1);
    CHECK(prof.tied(1, 2));
    CHECK_FALSE(prof.tied(0, 1));
}

TEST_CASE("quintic x^5 - 10x^2 + 1 modulus profile") {
    IntPolynomial p = make_trinomial(TrinomialSpec(5, 2, 10));
    auto sys = std::make_shared<RootSystem>(RootSystem::solve(p, 128));
    ModulusProfile prof(sys);
    // oracle: three real roots by bisection, complex pair via Vieta
    auto r_big = bisect_root(p, 2, 3, 120);      // ~2.1386
    auto r_mid = bisect_root(p, 0, 1, 120);      // ~0.3167
    auto r_small = bisect_root(p, -1, 0, 120);   // ~-0.3157
    CHECK(r_big.lo >= mpq_class("21386171696/10000000000"));
    CHECK(r_big.hi <= mpq_class("21386171697/10000000000"));
    // sorted: pair (~2.1624), real 2.1386, 0.3167, 0.3157
    CHECK(overlaps_bracket(prof.modulus(2), r_big));
    CHECK(overlaps_bracket(prof.modulus(3), r_mid));
    {
        RationalBracket neg{-r_small.hi, -r_small.lo};
        CHECK(overlaps_bracket(prof.modulus(4), RationalBracket{neg.lo, neg.hi}));
    }
    // pair modulus^2 = 1/|r1 r2 r3| exactly (product of all roots is -1)
    mpq_class prod_lo = r_big.lo * r_mid.lo * (-r_small.hi);
    mpq_class prod_hi = r_big.hi * r_mid.hi * (-r_small.lo);
    RealInterval pair_sq = mul(prof.modulus(0), prof.modulus(0));
    RealInterval inv(128);
    mpfr_set_q(inv.lo_mut(), mpq_class(1 / prod_hi).get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(inv.hi_mut(), mpq_class(1 / prod_lo).get_mpq_t(), MPFR_RNDU);
    CHECK(pair_sq.overlaps(inv));
    // top pair tied, certified above the rest
    CHECK(prof.tied(0, 1));
    CHECK_FALSE(prof.tied(1, 2));
    CHECK(prof.modulus(3).strictly_below(prof.modulus(2)));
    // 3 moduli above 1, 2 below
    for (int i = 0; i < 3; ++i) CHECK(prof.modulus(i).strictly_above_mpq(1));
    for (int i = 3; i < 5; ++i) CHECK(prof.modulus(i).strictly_below_mpq(1));
}

TEST_CASE("sorted moduli of x^2 + 1 form one tied group") {
    auto sys = std::make_shared<RootSystem>(RootSystem::solve(parse_polynomial("x^2 + 1"), 64));
    ModulusProfile prof(sys);
    CHECK(prof.group_count() == 1);
    CHECK(prof.tied(0, 1));
    CHECK(prof.modulus(0).contains_long(1));
    CHECK(prof.modulus(1).contains_long(1));
    CHECK_FALSE(sys->is_real_root(0));
    CHECK(sys->conjugate_partner(0) == 1);
}

TEST_CASE("count_in_annulus examples") {
    IntPolynomial p = make_trinomial(TrinomialSpec(5, 2, 10));
    auto sys = std::make_shared<RootSystem>(RootSystem::solve(p, 128));
    ModulusProfile prof(sys);
    TrinomialSpec spec(5, 2, 10);
    AnnulusPrediction pred = predicted_annuli(spec, mpq_class(1, 2));
    CHECK(count_in_annulus(prof, pred.inner_low, pred.inner_high) == 2);
    CHECK(count_in_annulus(prof, pred.outer_low, pred.outer_high) == 3);

    auto sys2 = std::make_shared<RootSystem>(RootSystem::solve(parse_polynomial("x^2 + 1"), 64));
    ModulusProfile prof2(sys2);
    CHECK(count_in_annulus(prof2, RealInterval::from_mpq(mpq_class(1, 2), 64),
                           RealInterval::from_long(2, 64)) == 2);

    CHECK_THROWS_AS(count_in_annulus(prof2, RealInterval::from_long(0, 64),
                                     RealInterval::from_long(2, 64)),
                    std::invalid_argument);
    // boundary exactly on the modulus: certification must give up at the cap
    CHECK_THROWS_AS(count_in_annulus(prof2, RealInterval::from_mpq(mpq_class(1, 2), 64),
                                     RealInterval::from_long(1, 64)),
                    CertificationError);
}

TEST_CASE("predicted annuli bounds and admissibility") {
    TrinomialSpec spec(5, 2, 10);
    AnnulusPrediction pred = predicted_annuli(spec, mpq_class(1, 2));
    CHECK(pred.inner_count == 2);
    CHECK(pred.outer_count == 3);
    // inner = ((2/30)^{1/2}, (2/10)^{1/2}), outer = (5^{1/3}, 15^{1/3})
    CHECK(mul(pred.inner_low, pred.inner_low).contains_mpq(mpq_class(2, 30)));
    CHECK(mul(pred.inner_high, pred.inner_high).contains_mpq(mpq_class(2, 10)));
    CHECK(pow_ui(pred.outer_low, 3).contains_long(5));
    CHECK(pow_ui(pred.outer_high, 3).contains_long(15));

    TrinomialSpec spec2(4, 3, 100);
    AnnulusPrediction pred2 = predicted_annuli(spec2, mpq_class(11, 1000));
    CHECK(pred2.outer_count == 1);
    CHECK(pred2.inner_count == 3);
    CHECK(pred2.outer_low.contains_mpq(mpq_class(989, 10)));
    CHECK(pred2.outer_high.contains_mpq(mpq_class(1011, 10)));

    CHECK_THROWS_AS(predicted_annuli(spec, mpq_class(1, 20)), std::domain_error);
    CHECK_THROWS_AS(predicted_annuli(spec, mpq_class(19, 20)), std::domain_error);
    CHECK_THROWS_AS(predicted_annuli(TrinomialSpec(5, 2, 2), mpq_class(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("annulus counts match the prediction on a small sweep") {
    for (unsigned d = 2; d <= 6; ++d)
        for (unsigned j = 1; j < d; ++j)
            for (long habs : {3L, 7L, 19L, 40L})
                for (long sign : {1L, -1L}) {
                    mpz_class h = habs * sign;
                    TrinomialSpec spec(d, j, h);
                    IntPolynomial f = make_trinomial(spec);
                    if (!is_squarefree(f)) continue;
                    auto sys = std::make_shared<RootSystem>(RootSystem::solve(f, 128));
                    ModulusProfile prof(sys);
                    for (auto eps : {mpq_class(1, 5), mpq_class(1, 2), mpq_class(4, 5)}) {
                        mpq_class lo_adm = mpq_class(1) / mpq_class(habs);
                        if (!(eps > lo_adm && eps < 1 - lo_adm)) continue;
                        AnnulusPrediction pred = predicted_annuli(spec, eps);
                        INFO("d=", d, " j=", j, " h=", h.get_str(), " eps=", eps.get_str());
                        CHECK(count_in_annulus(prof, pred.inner_low, pred.inner_high) ==
                              pred.inner_count);
                        CHECK(count_in_annulus(prof, pred.outer_low, pred.outer_high) ==
                              pred.outer_count);
                    }
                }
}

TEST_CASE("cauchy bound") {
    CHECK(cauchy_root_bound(make_trinomial(TrinomialSpec(5, 2, 10))) == 11);
    CHECK(cauchy_root_bound(parse_polynomial("x^2 + 1")) == 2);
    CHECK(cauchy_root_bound(parse_polynomial("x^3 - x - 1")) == 2);
    // certified: |alpha_0| <= H + 1
    auto sys = std::make_shared<RootSystem>(RootSystem::solve(parse_polynomial("x^3 - x - 1"), 64));
    ModulusProfile prof(sys);
    CHECK(prof.modulus(0).strictly_below_mpq(mpq_class(2)));
    CHECK_THROWS_AS(cauchy_root_bound(parse_polynomial("2x^2 + 1")), std::invalid_argument);
}

TEST_CASE("root-set completeness and residual consistency") {
    for (const char* s : {"x^3 - x - 1", "x^5 - 10x^2 + 1", "x^6 - x^2 - 1", "x^4 - 100x^3 + 1"}) {
        IntPolynomial p = parse_polynomial(s);
        RootSystem sys = RootSystem::solve(p, 128);
        REQUIRE(sys.degree() == p.degree());
        IntPolynomial dp = p.derivative();
        for (int i = 0; i < sys.degree(); ++i) {
            const auto& e = sys.enclosures()[static_cast<size_t>(i)];
            ComplexBox center(RealInterval::point(e.center.re(), e.center.prec()),
                              RealInterval::point(e.center.im(), e.center.prec()));
            RealInterval resid = modulus(horner_box(p, center));
            RealInterval deriv = modulus(horner_box(dp, center));
            // radius >= d |p(c)|/|p'(c)| by construction, so |p(c)| <= r |p'(c)|
            RealInterval rhs = mul(e.radius, deriv);
            CHECK(mpfr_cmp(resid.lo(), rhs.hi()) <= 0);
        }
    }
}

TEST_CASE("vieta checks") {
    for (const char* s : {"x^3 - x - 1", "x^5 - 10x^2 + 1", "x^4 - 100x^3 + 1"}) {
        IntPolynomial p = parse_polynomial(s);
        auto sys = std::make_shared<RootSystem>(RootSystem::solve(p, 128));
        ModulusProfile profile(sys);
        RealInterval prod = RealInterval::from_long(1, 128);
        for (int i = 0; i < profile.degree(); ++i) prod = mul(prod, profile.modulus(i));
        mpz_class a0 = abs(p.constant_term());
        CHECK(prod.contains_mpq(mpq_class(a0)));
        // sum of centers encloses -a_{d-1}
        RealInterval sum_re(128), sum_im(128);
        for (const auto& e : sys->enclosures()) {
            ComplexBox b = disk_box(e.center, e.radius.hi());
            sum_re = add(sum_re, b.re);
            sum_im = add(sum_im, b.im);
        }
        mpq_class want(-p.coeff(p.degree() - 1));
        CHECK(sum_re.contains_mpq(want));
        CHECK(sum_im.contains_zero());
    }
}

TEST_CASE("reciprocal symmetry of moduli") {
    for (const char* s : {"x^3 - x - 1", "x^5 - 10x^2 + 1"}) {
        IntPolynomial p = parse_polynomial(s);
        auto sp = std::make_shared<RootSystem>(RootSystem::solve(p, 128));
        auto sq = std::make_shared<RootSystem>(RootSystem::solve(reciprocal(p), 128));
        ModulusProfile mp_(sp), mq(sq);
        const int d = p.degree();
        for (int i = 0; i < d; ++i) {
            // modulus i of p* equals 1/modulus(d-1-i) of p
            RealInterval inv = div(RealInterval::from_long(1, 128), mp_.modulus(d - 1 - i));
            CHECK(mq.modulus(i).overlaps(inv));
        }
    }
}

TEST_CASE("determinism: identical inputs give bit-identical enclosures") {
    IntPolynomial p = make_trinomial(TrinomialSpec(7, 3, 23));
    RootSystem a = RootSystem::solve(p, 128);
    RootSystem b = RootSystem::solve(p, 128);
    REQUIRE(a.degree() == b.degree());
    for (int i = 0; i < a.degree(); ++i) {
        const auto& ea = a.enclosures()[static_cast<size_t>(i)];
        const auto& eb = b.enclosures()[static_cast<size_t>(i)];
        CHECK(mpfr_cmp(ea.center.re(), eb.center.re()) == 0);
        CHECK(mpfr_cmp(ea.center.im(), eb.center.im()) == 0);
        CHECK(mpfr_cmp(ea.radius.hi(), eb.radius.hi()) == 0);
    }
}

TEST_CASE("solver input validation") {
    CHECK_THROWS_WITH_AS(RootSystem::solve(parse_polynomial("x^2 - 2x + 1"), 64),
                         doctest::Contains("x - 1"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::solve(IntPolynomial::constant(3), 64), std::invalid_argument);
}

TEST_CASE("refinement tightens enclosures and keeps pairing") {
    IntPolynomial p = make_trinomial(TrinomialSpec(6, 2, 9));
    RootSystem sys = RootSystem::solve(p, 64);
    double r0 = mpfr_get_d(sys.enclosures()[0].radius.hi(), MPFR_RNDU);
    sys.refine_all(256);
    double r1 = mpfr_get_d(sys.enclosures()[0].radius.hi(), MPFR_RNDU);
    CHECK(r1 < r0);
    for (int i = 0; i < sys.degree(); ++i)
        CHECK(sys.conjugate_partner(sys.conjugate_partner(i)) == i);
}

TEST_CASE("root-of-unity polynomials have all moduli containing 1") {
    for (const char* s : {"x^2 + x + 1", "x^2 + 1", "x^2 - x + 1", "x^4 + x^3 + x^2 + x + 1"}) {
        IntPolynomial p = parse_polynomial(s);
        REQUIRE(is_root_of_unity_poly(p));
        RootSystem sys = RootSystem::solve(p, 128);
        for (int i = 0; i < sys.degree(); ++i) CHECK(sys.modulus_interval(i).contains_long(1));
    }
}

TEST_CASE("zero constant term peels a zero root") {
    IntPolynomial p = parse_polynomial("0,-1,0,1");  // x^3 - x = x(x-1)(x+1)
    RootSystem sys = RootSystem::solve(p, 64);
    int zero_roots = 0;
    for (int i = 0; i < 3; ++i)
        if (sys.modulus_interval(i).contains_zero()) ++zero_roots;
    CHECK(zero_roots == 1);
}
