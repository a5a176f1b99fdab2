#ifndef CONJPOLY_TEST_ORACLES_HPP
#define CONJPOLY_TEST_ORACLES_HPP

#include "conjpoly/int_polynomial.hpp"
#include "conjpoly/interval.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace conjpoly::test {

// Exact rational bracket around a real root, shrunk by sign bisection.
// Fully independent of the interval solver: only exact polynomial
// evaluation over Q.
struct RationalBracket {
    mpq_class lo, hi;

    bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
};

inline RationalBracket bisect_root(const IntPolynomial& p, mpq_class lo, mpq_class hi,
                                   int iters) {
    mpq_class flo = p.evaluate(lo);
    mpq_class fhi = p.evaluate(hi);
    if (sgn(flo) == 0) return {lo, lo};
    if (sgn(fhi) == 0) return {hi, hi};
    if (sgn(flo) * sgn(fhi) > 0) throw std::invalid_argument("bisection bracket has no sign change");
    for (int i = 0; i < iters; ++i) {
        mpq_class mid = (lo + hi) / 2;
        int s = sgn(p.evaluate(mid));
        if (s == 0) return {mid, mid};
        if (s == sgn(flo))
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

// True iff the certified interval and the exact rational bracket overlap
// (both contain the same true value when the oracle bracket is valid).
inline bool overlaps_bracket(const RealInterval& iv, const RationalBracket& b) {
    return !(iv.strictly_below_mpq(b.lo) || iv.strictly_above_mpq(b.hi));
}

}  // namespace conjpoly::test

#endif
