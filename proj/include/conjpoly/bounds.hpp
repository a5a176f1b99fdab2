#ifndef CONJPOLY_BOUNDS_HPP
#define CONJPOLY_BOUNDS_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace conjpoly {

enum class ExponentBranch { TWO_FACTOR, THREE_FACTOR, EQUAL };

const char* to_string(ExponentBranch b);

// Quantitative lower-bound data for d > 3k:
//   mu = ceil((ceil(d/3) - k)/2)
//   calE = max(2(d-1)(d-2), (d-1)(d-2)(d-3)/(2 mu))
// with the margin exponent -calE + 1/(k(d-1)), all exact.
struct BoundsProfile {
    int d = 0;
    int k = 0;
    long mu = 0;
    mpq_class cal_e;
    ExponentBranch branch = ExponentBranch::EQUAL;
    mpq_class predicted_exponent;
};

BoundsProfile bounds_profile(int d, int k);

// All (d, k) in the given inclusive ranges (k fixed at 1 resp. 2) where the
// two-factor expression is strictly the maximum.
std::vector<std::pair<int, int>> exceptional_set(int d_lo_k1, int d_hi_k1, int d_lo_k2,
                                                 int d_hi_k2);

struct ExponentFit {
    std::vector<std::pair<double, double>> samples;  // (log H, log margin)
    double slope = 0.0;
};

// Least-squares slope of log(margin lower bound) against log(height);
// informational companion to the predicted exponent.
ExponentFit fit_margin_exponent(const std::vector<std::pair<mpz_class, double>>& samples);

}  // namespace conjpoly

#endif
