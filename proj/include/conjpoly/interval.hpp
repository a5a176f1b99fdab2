#ifndef CONJPOLY_INTERVAL_HPP
#define CONJPOLY_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace conjpoly {

// Closed real interval [lo, hi] with outward-rounded endpoints at a fixed
// working precision. All operations return enclosures of the exact result.
class RealInterval {
public:
    explicit RealInterval(mpfr_prec_t prec = 53);
    RealInterval(const RealInterval& o);
    RealInterval(RealInterval&& o) noexcept;
    RealInterval& operator=(const RealInterval& o);
    RealInterval& operator=(RealInterval&& o) noexcept;
    ~RealInterval();

    static RealInterval from_long(long v, mpfr_prec_t prec);
    static RealInterval from_mpz(const mpz_class& v, mpfr_prec_t prec);
    static RealInterval from_mpq(const mpq_class& v, mpfr_prec_t prec);
    static RealInterval from_double(double v, mpfr_prec_t prec);
    // [point, point], exact copy of an mpfr value
    static RealInterval point(const mpfr_t v, mpfr_prec_t prec);
    static RealInterval hull(const RealInterval& a, const RealInterval& b);

    mpfr_prec_t prec() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }
    mpfr_t& lo_mut() { return lo_; }
    mpfr_t& hi_mut() { return hi_; }

    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_d() const { return (lo_d() + hi_d()) / 2; }

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool contains_long(long v) const {
        return mpfr_cmp_si(lo_, v) <= 0 && mpfr_cmp_si(hi_, v) >= 0;
    }
    bool contains_mpq(const mpq_class& v) const {
        return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
    }
    bool strictly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool strictly_negative() const { return mpfr_sgn(hi_) < 0; }
    // hi < o.lo
    bool strictly_below(const RealInterval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
    bool overlaps(const RealInterval& o) const {
        return !strictly_below(o) && !o.strictly_below(*this);
    }
    // true iff [lo,hi] > q, certified
    bool strictly_above_mpq(const mpq_class& q) const {
        return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
    }
    bool strictly_below_mpq(const mpq_class& q) const {
        return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0;
    }

    // hi - lo, rounded up
    double width_d() const;
    // relative width: (hi - lo) / max(1, min |x|), rounded up
    double relative_width_d() const;

    // Decimal strings with outward rounding; enough digits for the precision.
    std::string lo_string() const;
    std::string hi_string() const;

    friend RealInterval add(const RealInterval& a, const RealInterval& b);
    friend RealInterval sub(const RealInterval& a, const RealInterval& b);
    friend RealInterval mul(const RealInterval& a, const RealInterval& b);
    // b must not contain zero
    friend RealInterval div(const RealInterval& a, const RealInterval& b);
    friend RealInterval neg(const RealInterval& a);
    friend RealInterval abs_i(const RealInterval& a);
    // a must be >= 0
    friend RealInterval sqrt_i(const RealInterval& a);
    // a must be strictly positive
    friend RealInterval log_i(const RealInterval& a);
    friend RealInterval exp_i(const RealInterval& a);
    friend RealInterval pow_ui(const RealInterval& a, unsigned long e);
    // n-th root, a >= 0
    friend RealInterval root_ui(const RealInterval& a, unsigned long n);
    // a * q for exact rational q
    friend RealInterval mul_mpq(const RealInterval& a, const mpq_class& q);
    friend RealInterval add_mpq(const RealInterval& a, const mpq_class& q);

    // min |x| over the interval (0 if it contains zero), and max |x|.
    void mig(mpfr_t out) const;  // rounded down
    void mag(mpfr_t out) const;  // rounded up

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

// Rational power x^(num/den) for strictly positive x, den >= 1.
RealInterval pow_mpq(const RealInterval& x, const mpq_class& e);

// Decimal rendering with enough digits for the value's precision.
std::string to_decimal_string(const mpfr_t v, mpfr_rnd_t rnd);

// Axis-aligned complex box: re x im.
struct ComplexBox {
    RealInterval re, im;

    explicit ComplexBox(mpfr_prec_t prec = 53) : re(prec), im(prec) {}
    ComplexBox(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

ComplexBox add(const ComplexBox& a, const ComplexBox& b);
ComplexBox sub(const ComplexBox& a, const ComplexBox& b);
ComplexBox mul(const ComplexBox& a, const ComplexBox& b);
ComplexBox neg(const ComplexBox& a);
ComplexBox conj_box(const ComplexBox& a);
// enclosure of |z| over the box
RealInterval modulus(const ComplexBox& a);

// Complex point value at a fixed precision, round-to-nearest arithmetic.
// Used for non-certified iteration; certification goes through ComplexBox.
class MpComplex {
public:
    explicit MpComplex(mpfr_prec_t prec = 53);
    MpComplex(const MpComplex& o);
    MpComplex(MpComplex&& o) noexcept;
    MpComplex& operator=(const MpComplex& o);
    MpComplex& operator=(MpComplex&& o) noexcept;
    ~MpComplex();

    static MpComplex from_doubles(double re, double im, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }
    const mpfr_t& re() const { return re_; }
    const mpfr_t& im() const { return im_; }
    mpfr_t& re_mut() { return re_; }
    mpfr_t& im_mut() { return im_; }

    double re_d() const { return mpfr_get_d(re_, MPFR_RNDN); }
    double im_d() const { return mpfr_get_d(im_, MPFR_RNDN); }

    // round-to-nearest copy at a (possibly different) precision
    MpComplex at_prec(mpfr_prec_t prec) const;

    friend MpComplex add(const MpComplex& a, const MpComplex& b);
    friend MpComplex sub(const MpComplex& a, const MpComplex& b);
    friend MpComplex mul(const MpComplex& a, const MpComplex& b);
    friend MpComplex div(const MpComplex& a, const MpComplex& b);

    // |a - b| as an interval (outward rounded)
    friend RealInterval distance(const MpComplex& a, const MpComplex& b);
    // |a| as an interval
    friend RealInterval modulus_point(const MpComplex& a);
    // box [re +- r] x [im +- r] containing the disk (a, r)
    friend ComplexBox disk_box(const MpComplex& a, const mpfr_t radius);

    MpComplex conj() const;

private:
    mpfr_prec_t prec_;
    mpfr_t re_, im_;
};

}  // namespace conjpoly

#endif
