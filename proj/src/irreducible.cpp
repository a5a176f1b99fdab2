#include "conjpoly/irreducible.hpp"

#include <stdexcept>

namespace conjpoly {

const char* to_string(IrreducibilityStatus s) {
    switch (s) {
        case IrreducibilityStatus::IRREDUCIBLE: return "IRREDUCIBLE";
        case IrreducibilityStatus::REDUCIBLE: return "REDUCIBLE";
        case IrreducibilityStatus::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

namespace {

// Rational roots of a monic integer polynomial are integers dividing the
// constant term; the Cauchy bound keeps the search finite.
std::optional<IntPolynomial> rational_root_witness(const IntPolynomial& p) {
    const mpz_class& a0 = p.constant_term();
    if (a0 == 0) return IntPolynomial(std::vector<mpz_class>{0, 1});  // x divides
    mpz_class bound = p.height() + 1;
    for (mpz_class t = 1; t <= bound; ++t) {
        if (!mpz_divisible_p(a0.get_mpz_t(), t.get_mpz_t())) continue;
        if (p.evaluate(t) == 0) return IntPolynomial(std::vector<mpz_class>{-t, 1});
        mpz_class neg = -t;
        if (p.evaluate(neg) == 0) return IntPolynomial(std::vector<mpz_class>{t, 1});
    }
    return std::nullopt;
}

// monic product coefficients: c has degree deg, coefficients c[0..deg-1]
// (the leading 1 is implicit); multiply by (x - root).
void mul_linear(std::vector<ComplexBox>& c, int deg, const ComplexBox& root,
                mpfr_prec_t prec) {
    // new degree deg+1; newc[i] = c[i-1] - root * c[i], with c[deg] = 1
    ComplexBox one(RealInterval::from_long(1, prec), RealInterval(prec));
    c.resize(static_cast<size_t>(deg) + 1, ComplexBox(prec));
    ComplexBox carry = one;  // coefficient at degree deg of old poly
    for (int i = deg; i >= 0; --i) {
        ComplexBox prev = i > 0 ? c[static_cast<size_t>(i - 1)] : ComplexBox(prec);
        c[static_cast<size_t>(i)] = sub(prev, mul(root, i == deg ? carry : c[static_cast<size_t>(i)]));
    }
}

enum class SubsetOutcome { RULED_OUT, AMBIGUOUS };

// Examine a completed subset product: either it certainly has a
// non-integer coefficient, or it names a unique integer candidate that the
// caller must confirm by exact division, or the boxes are too wide.
SubsetOutcome examine(const std::vector<ComplexBox>& c, int deg,
                      std::optional<std::vector<mpz_class>>& candidate) {
    candidate.reset();
    std::vector<mpz_class> cand(static_cast<size_t>(deg) + 1);
    cand[static_cast<size_t>(deg)] = 1;
    bool unique = true;
    for (int i = 0; i < deg; ++i) {
        const ComplexBox& b = c[static_cast<size_t>(i)];
        if (!b.im.contains_zero()) return SubsetOutcome::RULED_OUT;
        mpz_class lo_ceil, hi_floor;
        mpfr_t t;
        mpfr_init2(t, mpfr_get_prec(b.re.lo()));
        mpfr_ceil(t, b.re.lo());
        mpfr_get_z(lo_ceil.get_mpz_t(), t, MPFR_RNDN);
        mpfr_floor(t, b.re.hi());
        mpfr_get_z(hi_floor.get_mpz_t(), t, MPFR_RNDN);
        mpfr_clear(t);
        if (lo_ceil > hi_floor) return SubsetOutcome::RULED_OUT;  // no integer inside
        if (lo_ceil != hi_floor) unique = false;                  // several integers inside
        cand[static_cast<size_t>(i)] = lo_ceil;
    }
    if (unique) candidate = std::move(cand);
    return SubsetOutcome::AMBIGUOUS;
}

struct DfsState {
    const IntPolynomial* p;
    RootSystem* sys;
    mpfr_prec_t prec;
    int d;
    bool ambiguous = false;
    std::optional<IntPolynomial> witness;
};

// Depth-first walk over subsets sharing product prefixes, so every subset
// product is built by multiplications only.
bool dfs(DfsState& st, int next, std::vector<ComplexBox>& c, int deg) {
    if (st.witness) return true;
    if (next == st.d) {
        if (deg == 0 || deg == st.d) return false;  // improper subset
        std::optional<std::vector<mpz_class>> cand;
        SubsetOutcome out = examine(c, deg, cand);
        if (out == SubsetOutcome::RULED_OUT) return false;
        if (cand) {
            IntPolynomial g(std::move(*cand));
            if (divide_exact(*st.p, g)) {
                st.witness = std::move(g);
                return true;
            }
        }
        st.ambiguous = true;
        return false;
    }
    // exclude root `next`
    if (dfs(st, next + 1, c, deg)) return true;
    // include root `next`
    std::vector<ComplexBox> c2 = c;
    mul_linear(c2, deg, st.sys->box(next), st.prec);
    return dfs(st, next + 1, c2, deg + 1);
}

}  // namespace

IrreducibilityVerdict test_irreducible(const IntPolynomial& p, RootSystem& roots) {
    if (!p.is_monic()) throw std::invalid_argument("irreducibility test requires monic input");
    const int d = p.degree();
    if (d > 24) throw std::invalid_argument("irreducibility test supports degree <= 24");
    IrreducibilityVerdict v;
    v.certified_at_bits = roots.bits();
    if (d == 1) {
        v.status = IrreducibilityStatus::IRREDUCIBLE;
        return v;
    }
    if (auto w = rational_root_witness(p)) {
        v.status = IrreducibilityStatus::REDUCIBLE;
        v.witness = std::move(w);
        return v;
    }
    DfsState st{&p, &roots, static_cast<mpfr_prec_t>(roots.bits() + 64), d, false, std::nullopt};
    std::vector<ComplexBox> c;
    dfs(st, 0, c, 0);
    if (st.witness) {
        v.status = IrreducibilityStatus::REDUCIBLE;
        v.witness = std::move(st.witness);
    } else if (st.ambiguous) {
        v.status = IrreducibilityStatus::UNKNOWN;
    } else {
        v.status = IrreducibilityStatus::IRREDUCIBLE;
    }
    return v;
}

IrreducibilityVerdict certify_irreducible(const IntPolynomial& p, long start_bits,
                                          long cap_bits) {
    if (!p.is_monic()) throw std::invalid_argument("irreducibility test requires monic input");
    if (p.degree() > 24) throw std::invalid_argument("irreducibility test supports degree <= 24");
    IrreducibilityVerdict v;
    if (p.degree() == 1) {
        v.status = IrreducibilityStatus::IRREDUCIBLE;
        return v;
    }
    if (auto w = rational_root_witness(p)) {
        v.status = IrreducibilityStatus::REDUCIBLE;
        v.witness = std::move(w);
        return v;
    }
    {
        // a repeated factor shows up as gcd(p, p') without any numerics
        IntPolynomial g = content_free_gcd(p, p.derivative());
        if (g.degree() >= 1) {
            v.status = IrreducibilityStatus::REDUCIBLE;
            v.witness = std::move(g);
            return v;
        }
    }
    long bits = std::min(start_bits, cap_bits);
    RootSystem sys = RootSystem::solve(p, bits, cap_bits);
    while (true) {
        v = test_irreducible(p, sys);
        if (v.status != IrreducibilityStatus::UNKNOWN || sys.bits() >= cap_bits) return v;
        sys.refine_all(std::min(next_precision(sys.bits()), cap_bits));
    }
}

}  // namespace conjpoly
