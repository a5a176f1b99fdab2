#include "conjpoly/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace conjpoly {

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    // leave o in a destructible state
    mpfr_init2(o.lo_, 53);
    mpfr_init2(o.hi_, 53);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval RealInterval::from_long(long v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_double(double v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::point(const mpfr_t v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set(r.lo_, v, MPFR_RNDD);
    mpfr_set(r.hi_, v, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::hull(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

double RealInterval::width_d() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double RealInterval::relative_width_d() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mig(m);
    double scale = mpfr_get_d(m, MPFR_RNDD);
    mpfr_clear(m);
    if (scale < 1.0) scale = 1.0;
    return width_d() / scale;
}

namespace {

std::string mpfr_to_string(const mpfr_t v, mpfr_rnd_t rnd, mpfr_prec_t prec) {
    // ~prec * log10(2) significant digits, plus slack
    size_t digits = static_cast<size_t>(static_cast<double>(prec) * 0.30103) + 3;
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*R*g", static_cast<int>(digits), rnd, v) < 0)
        throw std::runtime_error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace

std::string RealInterval::lo_string() const { return mpfr_to_string(lo_, MPFR_RNDD, prec_); }
std::string RealInterval::hi_string() const { return mpfr_to_string(hi_, MPFR_RNDU, prec_); }

std::string to_decimal_string(const mpfr_t v, mpfr_rnd_t rnd) {
    return mpfr_to_string(v, rnd, mpfr_get_prec(v));
}

void RealInterval::mig(mpfr_t out) const {
    if (contains_zero()) {
        mpfr_set_zero(out, 1);
    } else if (mpfr_sgn(lo_) > 0) {
        mpfr_set(out, lo_, MPFR_RNDD);
    } else {
        mpfr_neg(out, hi_, MPFR_RNDD);
    }
}

void RealInterval::mag(mpfr_t out) const {
    mpfr_t a, b;
    mpfr_init2(a, mpfr_get_prec(out));
    mpfr_init2(b, mpfr_get_prec(out));
    mpfr_abs(a, lo_, MPFR_RNDU);
    mpfr_abs(b, hi_, MPFR_RNDU);
    mpfr_max(out, a, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
}

RealInterval add(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RealInterval sub(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

RealInterval mul(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_t t, best_lo, best_hi;
    mpfr_init2(t, r.prec_);
    mpfr_init2(best_lo, r.prec_);
    mpfr_init2(best_hi, r.prec_);
    const mpfr_t* as[2] = {&a.lo_, &a.hi_};
    const mpfr_t* bs[2] = {&b.lo_, &b.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t, *as[i], *bs[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, best_lo) < 0) mpfr_set(best_lo, t, MPFR_RNDD);
            mpfr_mul(t, *as[i], *bs[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, best_hi) > 0) mpfr_set(best_hi, t, MPFR_RNDU);
            first = false;
        }
    mpfr_set(r.lo_, best_lo, MPFR_RNDD);
    mpfr_set(r.hi_, best_hi, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    return r;
}

RealInterval div(const RealInterval& a, const RealInterval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by interval containing zero");
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_t t, best_lo, best_hi;
    mpfr_init2(t, r.prec_);
    mpfr_init2(best_lo, r.prec_);
    mpfr_init2(best_hi, r.prec_);
    const mpfr_t* as[2] = {&a.lo_, &a.hi_};
    const mpfr_t* bs[2] = {&b.lo_, &b.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(t, *as[i], *bs[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, best_lo) < 0) mpfr_set(best_lo, t, MPFR_RNDD);
            mpfr_div(t, *as[i], *bs[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, best_hi) > 0) mpfr_set(best_hi, t, MPFR_RNDU);
            first = false;
        }
    mpfr_set(r.lo_, best_lo, MPFR_RNDD);
    mpfr_set(r.hi_, best_hi, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    return r;
}

RealInterval neg(const RealInterval& a) {
    RealInterval r(a.prec_);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

RealInterval abs_i(const RealInterval& a) {
    RealInterval r(a.prec_);
    a.mig(r.lo_);
    a.mag(r.hi_);
    return r;
}

RealInterval sqrt_i(const RealInterval& a) {
    if (mpfr_sgn(a.lo_) < 0) throw std::domain_error("interval sqrt of negative interval");
    RealInterval r(a.prec_);
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

RealInterval log_i(const RealInterval& a) {
    if (mpfr_sgn(a.lo_) <= 0) throw std::domain_error("interval log requires strictly positive interval");
    RealInterval r(a.prec_);
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

RealInterval exp_i(const RealInterval& a) {
    RealInterval r(a.prec_);
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

RealInterval pow_ui(const RealInterval& a, unsigned long e) {
    RealInterval r = RealInterval::from_long(1, a.prec_);
    if (e == 0) return r;
    // monotone for nonnegative base; go through |a| cases otherwise
    if (mpfr_sgn(a.lo_) >= 0) {
        mpfr_pow_ui(r.lo_mut(), a.lo(), e, MPFR_RNDD);
        mpfr_pow_ui(r.hi_mut(), a.hi(), e, MPFR_RNDU);
        return r;
    }
    RealInterval acc = a;
    for (unsigned long i = 1; i < e; ++i) acc = mul(acc, a);
    return acc;
}

RealInterval root_ui(const RealInterval& a, unsigned long n) {
    if (mpfr_sgn(a.lo_) < 0) throw std::domain_error("interval root of negative interval");
    RealInterval r(a.prec_);
    mpfr_rootn_ui(r.lo_, a.lo_, n, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, a.hi_, n, MPFR_RNDU);
    return r;
}

RealInterval mul_mpq(const RealInterval& a, const mpq_class& q) {
    RealInterval r(a.prec_);
    if (sgn(q) >= 0) {
        mpfr_mul_q(r.lo_mut(), a.lo(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_mut(), a.hi(), q.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(r.lo_mut(), a.hi(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_mut(), a.lo(), q.get_mpq_t(), MPFR_RNDU);
    }
    return r;
}

RealInterval add_mpq(const RealInterval& a, const mpq_class& q) {
    RealInterval r(a.prec_);
    mpfr_add_q(r.lo_mut(), a.lo(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(r.hi_mut(), a.hi(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval pow_mpq(const RealInterval& x, const mpq_class& e) {
    if (!x.strictly_positive())
        throw std::domain_error("rational power requires strictly positive base interval");
    mpq_class er = e;
    er.canonicalize();
    const mpz_class num = er.get_num();
    const mpz_class den = er.get_den();
    if (!num.fits_slong_p() || !den.fits_ulong_p())
        throw std::domain_error("rational exponent too large");
    long n = num.get_si();
    unsigned long q = den.get_ui();
    RealInterval base = q == 1 ? x : root_ui(x, q);
    RealInterval p = pow_ui(base, static_cast<unsigned long>(n < 0 ? -n : n));
    if (n >= 0) return p;
    return div(RealInterval::from_long(1, x.prec()), p);
}

ComplexBox add(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(add(a.re, b.re), add(a.im, b.im));
}

ComplexBox sub(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(sub(a.re, b.re), sub(a.im, b.im));
}

ComplexBox mul(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(sub(mul(a.re, b.re), mul(a.im, b.im)),
                      add(mul(a.re, b.im), mul(a.im, b.re)));
}

ComplexBox neg(const ComplexBox& a) { return ComplexBox(neg(a.re), neg(a.im)); }

ComplexBox conj_box(const ComplexBox& a) { return ComplexBox(a.re, neg(a.im)); }

RealInterval modulus(const ComplexBox& a) {
    mpfr_prec_t prec = std::max(a.re.prec(), a.im.prec());
    RealInterval r(prec);
    mpfr_t t, u;
    mpfr_init2(t, prec);
    mpfr_init2(u, prec);
    // lower: distance from origin to the box
    a.re.mig(t);
    a.im.mig(u);
    mpfr_sqr(t, t, MPFR_RNDD);
    mpfr_sqr(u, u, MPFR_RNDD);
    mpfr_add(t, t, u, MPFR_RNDD);
    mpfr_sqrt(r.lo_mut(), t, MPFR_RNDD);
    // upper: farthest corner
    a.re.mag(t);
    a.im.mag(u);
    mpfr_sqr(t, t, MPFR_RNDU);
    mpfr_sqr(u, u, MPFR_RNDU);
    mpfr_add(t, t, u, MPFR_RNDU);
    mpfr_sqrt(r.hi_mut(), t, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(u);
    return r;
}

MpComplex::MpComplex(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(re_, prec);
    mpfr_init2(im_, prec);
    mpfr_set_zero(re_, 1);
    mpfr_set_zero(im_, 1);
}

MpComplex::MpComplex(const MpComplex& o) : prec_(o.prec_) {
    mpfr_init2(re_, prec_);
    mpfr_init2(im_, prec_);
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
}

MpComplex::MpComplex(MpComplex&& o) noexcept : prec_(o.prec_) {
    re_[0] = o.re_[0];
    im_[0] = o.im_[0];
    mpfr_init2(o.re_, 53);
    mpfr_init2(o.im_, 53);
}

MpComplex& MpComplex::operator=(const MpComplex& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(re_, o.prec_);
        mpfr_set_prec(im_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
    return *this;
}

MpComplex& MpComplex::operator=(MpComplex&& o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(re_, o.re_);
    mpfr_swap(im_, o.im_);
    return *this;
}

MpComplex::~MpComplex() {
    mpfr_clear(re_);
    mpfr_clear(im_);
}

MpComplex MpComplex::from_doubles(double re, double im, mpfr_prec_t prec) {
    MpComplex z(prec);
    mpfr_set_d(z.re_, re, MPFR_RNDN);
    mpfr_set_d(z.im_, im, MPFR_RNDN);
    return z;
}

MpComplex MpComplex::at_prec(mpfr_prec_t prec) const {
    MpComplex z(prec);
    mpfr_set(z.re_, re_, MPFR_RNDN);
    mpfr_set(z.im_, im_, MPFR_RNDN);
    return z;
}

MpComplex add(const MpComplex& a, const MpComplex& b) {
    MpComplex r(std::max(a.prec_, b.prec_));
    mpfr_add(r.re_, a.re_, b.re_, MPFR_RNDN);
    mpfr_add(r.im_, a.im_, b.im_, MPFR_RNDN);
    return r;
}

MpComplex sub(const MpComplex& a, const MpComplex& b) {
    MpComplex r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.re_, a.re_, b.re_, MPFR_RNDN);
    mpfr_sub(r.im_, a.im_, b.im_, MPFR_RNDN);
    return r;
}

MpComplex mul(const MpComplex& a, const MpComplex& b) {
    MpComplex r(std::max(a.prec_, b.prec_));
    mpfr_t t1, t2;
    mpfr_init2(t1, r.prec_);
    mpfr_init2(t2, r.prec_);
    mpfr_mul(t1, a.re_, b.re_, MPFR_RNDN);
    mpfr_mul(t2, a.im_, b.im_, MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_mul(t2, a.re_, b.im_, MPFR_RNDN);
    mpfr_mul(r.im_, a.im_, b.re_, MPFR_RNDN);
    mpfr_add(r.im_, r.im_, t2, MPFR_RNDN);
    mpfr_set(r.re_, t1, MPFR_RNDN);
    mpfr_clear(t1);
    mpfr_clear(t2);
    return r;
}

MpComplex div(const MpComplex& a, const MpComplex& b) {
    MpComplex r(std::max(a.prec_, b.prec_));
    mpfr_t den, t1, t2;
    mpfr_init2(den, r.prec_);
    mpfr_init2(t1, r.prec_);
    mpfr_init2(t2, r.prec_);
    mpfr_sqr(den, b.re_, MPFR_RNDN);
    mpfr_sqr(t1, b.im_, MPFR_RNDN);
    mpfr_add(den, den, t1, MPFR_RNDN);
    // re = (a.re b.re + a.im b.im) / den
    mpfr_mul(t1, a.re_, b.re_, MPFR_RNDN);
    mpfr_mul(t2, a.im_, b.im_, MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_div(t1, t1, den, MPFR_RNDN);
    // im = (a.im b.re - a.re b.im) / den
    mpfr_mul(t2, a.im_, b.re_, MPFR_RNDN);
    mpfr_mul(r.im_, a.re_, b.im_, MPFR_RNDN);
    mpfr_sub(r.im_, t2, r.im_, MPFR_RNDN);
    mpfr_div(r.im_, r.im_, den, MPFR_RNDN);
    mpfr_set(r.re_, t1, MPFR_RNDN);
    mpfr_clear(den);
    mpfr_clear(t1);
    mpfr_clear(t2);
    return r;
}

RealInterval distance(const MpComplex& a, const MpComplex& b) {
    mpfr_prec_t prec = std::max(a.prec_, b.prec_);
    RealInterval dre(prec), dim(prec);
    mpfr_sub(dre.lo_mut(), a.re_, b.re_, MPFR_RNDD);
    mpfr_sub(dre.hi_mut(), a.re_, b.re_, MPFR_RNDU);
    mpfr_sub(dim.lo_mut(), a.im_, b.im_, MPFR_RNDD);
    mpfr_sub(dim.hi_mut(), a.im_, b.im_, MPFR_RNDU);
    return modulus(ComplexBox(std::move(dre), std::move(dim)));
}

RealInterval modulus_point(const MpComplex& a) {
    RealInterval re = RealInterval::point(a.re_, a.prec_);
    RealInterval im = RealInterval::point(a.im_, a.prec_);
    return modulus(ComplexBox(std::move(re), std::move(im)));
}

ComplexBox disk_box(const MpComplex& a, const mpfr_t radius) {
    ComplexBox b(a.prec_);
    mpfr_sub(b.re.lo_mut(), a.re_, radius, MPFR_RNDD);
    mpfr_add(b.re.hi_mut(), a.re_, radius, MPFR_RNDU);
    mpfr_sub(b.im.lo_mut(), a.im_, radius, MPFR_RNDD);
    mpfr_add(b.im.hi_mut(), a.im_, radius, MPFR_RNDU);
    return b;
}

MpComplex MpComplex::conj() const {
    MpComplex r(prec_);
    mpfr_set(r.re_, re_, MPFR_RNDN);
    mpfr_neg(r.im_, im_, MPFR_RNDN);
    return r;
}

}  // namespace conjpoly
