#ifndef CONJPOLY_ROOTS_HPP
#define CONJPOLY_ROOTS_HPP

#include "conjpoly/int_polynomial.hpp"
#include "conjpoly/interval.hpp"

#include <memory>
#include <vector>

namespace conjpoly {

inline constexpr long kDefaultTargetBits = 128;
inline constexpr long kDefaultPrecisionCap = 4096;

// Precision ladder 53 -> 128 -> 256 -> ... (doubling).
long next_precision(long bits);

// Disk certified to contain exactly one root of the source polynomial.
struct RootEnclosure {
    MpComplex center;
    RealInterval radius;  // point interval [r, r], upper bound of the true radius
    long precision_bits = 0;
};

// All roots of a squarefree integer polynomial, with certified pairwise
// disjoint enclosures. Each disk contains exactly one root: the radius
// bound d*|p(c)/p'(c)| guarantees at least one root per disk, and d
// disjoint disks for d roots leave no room for doubles.
class RootSystem {
public:
    static RootSystem solve(const IntPolynomial& p, long target_bits = kDefaultTargetBits,
                            long cap_bits = kDefaultPrecisionCap);

    const IntPolynomial& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    long bits() const { return bits_; }
    long cap() const { return cap_; }
    const std::vector<RootEnclosure>& enclosures() const { return roots_; }

    // Escalates every enclosure to the requested relative radius
    // (radius <= 2^-target * max(1,|center|)); throws CertificationError
    // past the cap.
    void refine_all(long target_bits);

    // [max(0, |c|-r), |c|+r]
    RealInterval modulus_interval(int i) const;
    ComplexBox box(int i) const;

    // Index of the enclosure holding the complex conjugate of root i;
    // i itself iff the root is real. Certified via disk pairing.
    int conjugate_partner(int i);
    bool is_real_root(int i) { return conjugate_partner(i) == i; }

private:
    RootSystem(IntPolynomial p, long cap);

    IntPolynomial poly_;
    IntPolynomial deriv_;
    std::vector<RootEnclosure> roots_;
    std::vector<int> sigma_;
    long bits_ = 0;
    long cap_ = kDefaultPrecisionCap;

    bool refine_root(int i, long target_bits);
    void ensure_disjoint(long target_bits);
    void compute_pairing();
    void initial_approximations(long bits);
};

// Sorted (descending) certified modulus sequence with tie groups. Positions
// refer to the sorted order; tie groups are runs of positions whose true
// moduli could not be separated (conjugate pairs never separate).
class ModulusProfile {
public:
    explicit ModulusProfile(std::shared_ptr<RootSystem> sys);

    int degree() const { return static_cast<int>(order_.size()); }
    long bits() const { return sys_->bits(); }
    const RealInterval& modulus(int pos) const { return moduli_[static_cast<size_t>(pos)]; }
    int root_index(int pos) const { return order_[static_cast<size_t>(pos)]; }
    int group_of(int pos) const { return group_[static_cast<size_t>(pos)]; }
    int group_count() const { return group_.empty() ? 0 : group_.back() + 1; }
    std::vector<std::vector<int>> tied_groups() const;  // positions per group
    bool tied(int a, int b) const { return group_of(a) == group_of(b); }

    // Escalate the underlying system and rebuild; no-op when already there.
    void refine(long target_bits);

    RootSystem& system() { return *sys_; }
    const RootSystem& system() const { return *sys_; }
    std::shared_ptr<RootSystem> system_ptr() const { return sys_; }

private:
    std::shared_ptr<RootSystem> sys_;
    std::vector<int> order_;
    std::vector<RealInterval> moduli_;
    std::vector<int> group_;
    void build();
};

ModulusProfile sorted_moduli(RootSystem sys);

// Exact count of moduli strictly inside (r_low, r_high); escalates on
// boundary contact and throws CertificationError at the cap.
int count_in_annulus(ModulusProfile& profile, const RealInterval& r_low,
                     const RealInterval& r_high);

struct AnnulusPrediction {
    RealInterval inner_low, inner_high;
    RealInterval outer_low, outer_high;
    int inner_count = 0;
    int outer_count = 0;
};

// Root-count annuli of the trinomial family: j roots in
// (((1+e)|h|)^(-1/j), ((1-e)|h|)^(-1/j)) and d-j roots in
// (((1-e)|h|)^(1/(d-j)), ((1+e)|h|)^(1/(d-j))), for 1/|h| < e < 1 - 1/|h|.
AnnulusPrediction predicted_annuli(const TrinomialSpec& spec, const mpq_class& epsilon,
                                   mpfr_prec_t prec = 192);

// H + 1, an upper bound for the largest root modulus of a monic polynomial.
mpz_class cauchy_root_bound(const IntPolynomial& p);

}  // namespace conjpoly

#endif
