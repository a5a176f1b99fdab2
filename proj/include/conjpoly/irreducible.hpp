#ifndef CONJPOLY_IRREDUCIBLE_HPP
#define CONJPOLY_IRREDUCIBLE_HPP

#include "conjpoly/int_polynomial.hpp"
#include "conjpoly/roots.hpp"

#include <optional>

namespace conjpoly {

enum class IrreducibilityStatus { IRREDUCIBLE, REDUCIBLE, UNKNOWN };

const char* to_string(IrreducibilityStatus s);

struct IrreducibilityVerdict {
    IrreducibilityStatus status = IrreducibilityStatus::UNKNOWN;
    std::optional<IntPolynomial> witness;  // exact integer factor when REDUCIBLE
    long certified_at_bits = 0;
};

// Subset-product test over the certified enclosures: a monic integer factor
// of p would have to be a product of (x - alpha_i) over some nonempty proper
// subset, so a subset whose product has a coefficient box excluding every
// integer is ruled out. Candidate factors are confirmed by exact division.
// Requires monic p of degree <= 24.
IrreducibilityVerdict test_irreducible(const IntPolynomial& p, RootSystem& roots);

// Solves and escalates precision until the subset test resolves or the cap
// is reached.
IrreducibilityVerdict certify_irreducible(const IntPolynomial& p, long start_bits = 256,
                                          long cap_bits = kDefaultPrecisionCap);

}  // namespace conjpoly

#endif
