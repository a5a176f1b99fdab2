#ifndef CONJPOLY_VERIFIER_HPP
#define CONJPOLY_VERIFIER_HPP

#include "conjpoly/int_polynomial.hpp"
#include "conjpoly/interval.hpp"
#include "conjpoly/polytope.hpp"
#include "conjpoly/roots.hpp"

#include <optional>
#include <vector>

namespace conjpoly {

enum class MarginVerdict { POSITIVE, NEGATIVE, INDETERMINATE };

const char* to_string(MarginVerdict v);

struct MarginReport {
    RationalPoint point;
    RealInterval value;  // certified interval for |a0| prod |a_i|^{c_i}
    MarginVerdict verdict = MarginVerdict::INDETERMINATE;
    long precision_bits = 0;
    // verdict of the integer-exponent cross-check, when it was evaluated
    std::optional<MarginVerdict> power_form_verdict;
};

// Certified interval for |alpha_0| * prod |alpha_i|^{c_i}, evaluated in the
// log domain with automatic escalation until the relative width reaches
// 2^-32 or the profile's cap. Entries of c must be nonnegative and
// dim(c) < degree.
RealInterval conjugate_product(ModulusProfile& profile, const RationalPoint& c);

// Full membership report with verdict against 1; escalates until the value
// interval excludes 1 or the cap is reached (INDETERMINATE only at the cap).
// The caller is responsible for having certified irreducibility; the
// convenience overload on a polynomial certifies it first and rejects
// REDUCIBLE or UNKNOWN inputs.
MarginReport check_membership_witness(ModulusProfile& profile, const RationalPoint& c,
                                      bool power_form_cross_check = true);
MarginReport check_membership_witness(const IntPolynomial& p, const RationalPoint& c,
                                      long cap_bits = kDefaultPrecisionCap);

struct MarginIdentityReport {
    RealInterval lhs, rhs, residual;
    long precision_bits = 0;
    int i_n = 0;
};

// Both sides of the vertex-margin identity for a unit polynomial
// (|p(0)| = 1): with i_n = max(J),
//   LHS = |a_0|...|a_{i_n}|^2...|a_{d-2}| - 1
//   RHS = |a_0 ... a_{d-2}| (|a_{i_n}| - |a_{d-1}|)
// computed from the same enclosures; the residual interval must contain 0.
MarginIdentityReport margin_identity_check(const IntPolynomial& p, int k,
                                           const std::vector<int>& J,
                                           long target_bits = 192,
                                           long cap_bits = kDefaultPrecisionCap);
MarginIdentityReport margin_identity_check(ModulusProfile& profile, int k,
                                           const std::vector<int>& J, long target_bits = 192);

enum class SeparationCase { REAL_REAL, REAL_COMPLEX, COMPLEX_COMPLEX };

const char* to_string(SeparationCase c);

struct SeparationReport {
    RealInterval min_gap;
    SeparationCase case_class = SeparationCase::COMPLEX_COMPLEX;
    mpz_class height;
    int degree = 0;
    int upper_group = 0;  // group index of the minimizing adjacent pair
};

// Minimum certified gap between adjacent untied modulus groups; the case
// class reflects whether the two groups of the minimizing pair contain real
// roots. Requires at least two untied groups.
SeparationReport modulus_separation(ModulusProfile& profile);

struct UnitGapResult {
    bool holds = false;
    int violating_index = -1;  // first sorted index i < d/3 not above the last
    long precision_bits = 0;
};

// Certifies |alpha_i| > |alpha_{d-1}| for every i < d/3 (the unit-gap
// property of algebraic units that are not roots of unity).
UnitGapResult unit_gap_property(ModulusProfile& profile);
UnitGapResult unit_gap_property(const IntPolynomial& p, long target_bits = kDefaultTargetBits,
                                long cap_bits = kDefaultPrecisionCap);

struct SzRemarkReport {
    RealInterval lhs;       // certified |r_0| |r_1|^{d-1}
    mpq_class rhs;          // 1 + 2.2/(|h| - 1.1), exact
    bool holds = false;     // upper(lhs) < rhs, certified
    bool skipped = false;   // trinomial not certified irreducible
    long precision_bits = 0;
};

// For f = x^d - h x^{d-1} + 1 with |h| >= 3: certifies
// |r_0| |r_1|^{d-1} < 1 + 2.2/(|h| - 1.1).
SzRemarkReport sz_remark_check(unsigned d, const mpz_class& h,
                               long target_bits = kDefaultTargetBits,
                               long cap_bits = kDefaultPrecisionCap);

// Same comparison on an already-solved profile (irreducibility assumed
// certified by the caller).
SzRemarkReport sz_remark_evaluate(ModulusProfile& profile, unsigned d, const mpz_class& habs);

}  // namespace conjpoly

#endif
