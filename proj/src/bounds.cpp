#include "conjpoly/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace conjpoly {

const char* to_string(ExponentBranch b) {
    switch (b) {
        case ExponentBranch::TWO_FACTOR: return "TWO_FACTOR";
        case ExponentBranch::THREE_FACTOR: return "THREE_FACTOR";
        case ExponentBranch::EQUAL: return "EQUAL";
    }
    return "?";
}

BoundsProfile bounds_profile(int d, int k) {
    if (k < 1 || d <= 3 * k)
        throw std::invalid_argument("bounds profile requires positive integers with d > 3k");
    BoundsProfile p;
    p.d = d;
    p.k = k;
    const long ceil_d3 = (d + 2) / 3;
    p.mu = (ceil_d3 - k + 1) / 2;  // ceil((ceil(d/3) - k)/2), argument positive
    mpq_class two_factor(2L * (d - 1) * (d - 2));
    mpq_class three_factor(mpz_class(d - 1) * (d - 2) * (d - 3), mpz_class(2 * p.mu));
    three_factor.canonicalize();
    if (two_factor > three_factor) {
        p.branch = ExponentBranch::TWO_FACTOR;
        p.cal_e = two_factor;
    } else if (three_factor > two_factor) {
        p.branch = ExponentBranch::THREE_FACTOR;
        p.cal_e = three_factor;
    } else {
        p.branch = ExponentBranch::EQUAL;
        p.cal_e = two_factor;
    }
    p.predicted_exponent = -p.cal_e + mpq_class(1, static_cast<long>(k) * (d - 1));
    p.predicted_exponent.canonicalize();
    return p;
}

std::vector<std::pair<int, int>> exceptional_set(int d_lo_k1, int d_hi_k1, int d_lo_k2,
                                                 int d_hi_k2) {
    std::vector<std::pair<int, int>> out;
    for (int d = d_lo_k1; d <= d_hi_k1; ++d) {
        if (d <= 3) continue;
        if (bounds_profile(d, 1).branch == ExponentBranch::TWO_FACTOR) out.emplace_back(d, 1);
    }
    for (int d = d_lo_k2; d <= d_hi_k2; ++d) {
        if (d <= 6) continue;
        if (bounds_profile(d, 2).branch == ExponentBranch::TWO_FACTOR) out.emplace_back(d, 2);
    }
    return out;
}

ExponentFit fit_margin_exponent(const std::vector<std::pair<mpz_class, double>>& samples) {
    if (samples.size() < 3)
        throw std::invalid_argument("margin exponent fit needs at least 3 samples");
    ExponentFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [h, margin] : samples) {
        if (!(margin > 0))
            throw std::invalid_argument("margin exponent fit requires positive margin lower bounds");
        double x = std::log(h.get_d());
        double y = std::log(margin);
        fit.samples.emplace_back(x, y);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(fit.samples.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0) throw std::invalid_argument("margin exponent fit needs varying heights");
    fit.slope = (n * sxy - sx * sy) / denom;
    if (!std::isfinite(fit.slope)) throw std::invalid_argument("margin exponent fit diverged");
    return fit;
}

}  // namespace conjpoly
