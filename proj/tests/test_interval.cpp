#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conjpoly/interval.hpp"

#include <random>

using namespace conjpoly;

TEST_CASE("outward rounding of rationals") {
    RealInterval third = RealInterval::from_mpq(mpq_class(1, 3), 64);
    CHECK(third.contains_mpq(mpq_class(1, 3)));
    CHECK(mpfr_cmp(third.lo(), third.hi()) < 0);
    CHECK(third.width_d() < 1e-18);

    RealInterval exact = RealInterval::from_long(5, 64);
    CHECK(exact.width_d() == 0.0);
    CHECK(exact.contains_long(5));
}

TEST_CASE("arithmetic encloses exact rational results") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    for (int trial = 0; trial < 500; ++trial) {
        mpq_class a(num(rng), den(rng)), b(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        RealInterval ia = RealInterval::from_mpq(a, 64);
        RealInterval ib = RealInterval::from_mpq(b, 64);
        CHECK(add(ia, ib).contains_mpq(a + b));
        CHECK(sub(ia, ib).contains_mpq(a - b));
        CHECK(mul(ia, ib).contains_mpq(a * b));
        if (b != 0 && !ib.contains_zero()) CHECK(div(ia, ib).contains_mpq(a / b));
        CHECK(neg(ia).contains_mpq(-a));
        mpq_class abs_a = a < 0 ? mpq_class(-a) : a;
        CHECK(abs_i(ia).contains_mpq(abs_a));
        CHECK(mul_mpq(ia, b).contains_mpq(a * b));
        CHECK(add_mpq(ia, b).contains_mpq(a + b));
    }
}

TEST_CASE("transcendental enclosures") {
    RealInterval two = RealInterval::from_long(2, 128);
    RealInterval r = sqrt_i(two);
    CHECK(mul(r, r).contains_long(2));
    RealInterval l = log_i(two);
    CHECK(exp_i(l).contains_long(2));
    RealInterval eight = RealInterval::from_long(8, 128);
    CHECK(pow_mpq(eight, mpq_class(2, 3)).contains_long(4));
    CHECK(pow_mpq(eight, mpq_class(-1, 3)).contains_mpq(mpq_class(1, 2)));
    CHECK(root_ui(eight, 3).contains_long(2));
    CHECK(pow_ui(RealInterval::from_long(-2, 64), 2).contains_long(4));
    CHECK(pow_ui(RealInterval::from_long(-2, 64), 3).contains_long(-8));
    CHECK_THROWS_AS(log_i(RealInterval::from_long(0, 64)), std::domain_error);
    CHECK_THROWS_AS(sqrt_i(RealInterval::from_long(-1, 64)), std::domain_error);
    CHECK_THROWS_AS(div(two, RealInterval::from_long(0, 64)), std::domain_error);
}

TEST_CASE("complex box modulus") {
    ComplexBox z(RealInterval::from_long(3, 64), RealInterval::from_long(4, 64));
    CHECK(modulus(z).contains_long(5));
    ComplexBox w = mul(z, z);  // (3+4i)^2 = -7 + 24i
    CHECK(w.re.contains_long(-7));
    CHECK(w.im.contains_long(24));
    CHECK(modulus(w).contains_long(25));
    ComplexBox origin(RealInterval::from_long(0, 64), RealInterval::from_long(0, 64));
    CHECK(modulus(origin).contains_zero());
}

TEST_CASE("complex point arithmetic roundtrip") {
    MpComplex a = MpComplex::from_doubles(1.5, -2.25, 128);
    MpComplex b = MpComplex::from_doubles(-0.75, 3.5, 128);
    MpComplex q = div(mul(a, b), b);
    CHECK(std::abs(q.re_d() - a.re_d()) < 1e-30);
    CHECK(std::abs(q.im_d() - a.im_d()) < 1e-30);
    RealInterval d = distance(a, a);
    CHECK(d.contains_zero());
    MpComplex c = a.conj();
    CHECK(c.im_d() == -a.im_d());
}
