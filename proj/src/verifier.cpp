#include "conjpoly/verifier.hpp"

#include "conjpoly/errors.hpp"
#include "conjpoly/irreducible.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conjpoly {

const char* to_string(MarginVerdict v) {
    switch (v) {
        case MarginVerdict::POSITIVE: return "POSITIVE";
        case MarginVerdict::NEGATIVE: return "NEGATIVE";
        case MarginVerdict::INDETERMINATE: return "INDETERMINATE";
    }
    return "?";
}

const char* to_string(SeparationCase c) {
    switch (c) {
        case SeparationCase::REAL_REAL: return "REAL_REAL";
        case SeparationCase::REAL_COMPLEX: return "REAL_COMPLEX";
        case SeparationCase::COMPLEX_COMPLEX: return "COMPLEX_COMPLEX";
    }
    return "?";
}

namespace {

void validate_exponents(const ModulusProfile& profile, const RationalPoint& c) {
    if (c.dim() >= profile.degree())
        throw std::invalid_argument("exponent tuple dimension must be below the degree");
    for (const auto& q : c.coords)
        if (q < 0) throw std::invalid_argument("exponent tuple must be nonnegative");
}

// log |alpha_0| + sum c_i log |alpha_i| at the profile's current precision;
// nullopt when some needed modulus interval still contains zero.
std::optional<RealInterval> log_sum(const ModulusProfile& profile, const RationalPoint& c) {
    const RealInterval& m0 = profile.modulus(0);
    if (!m0.strictly_positive()) return std::nullopt;
    RealInterval s = log_i(m0);
    for (int i = 0; i < c.dim(); ++i) {
        const Rational& q = c.coords[static_cast<size_t>(i)];
        if (q == 0) continue;
        const RealInterval& mi = profile.modulus(i + 1);
        if (!mi.strictly_positive()) return std::nullopt;
        s = add(s, mul_mpq(log_i(mi), q));
    }
    return s;
}

// prod |alpha_i|^{e_i} with integer exponents (the q-th power form);
// nullopt when an exponent does not fit or a modulus is not positive.
std::optional<RealInterval> power_form(const ModulusProfile& profile, const RationalPoint& c) {
    mpz_class q = 1;
    for (const auto& ci : c.coords)
        mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), ci.get_den().get_mpz_t());
    if (!q.fits_ulong_p()) return std::nullopt;
    const RealInterval& m0 = profile.modulus(0);
    if (!m0.strictly_positive()) return std::nullopt;
    RealInterval acc = pow_ui(m0, q.get_ui());
    for (int i = 0; i < c.dim(); ++i) {
        Rational eq = c.coords[static_cast<size_t>(i)] * Rational(q);
        eq.canonicalize();
        mpz_class e = eq.get_num();  // exact integer: q clears every denominator
        if (e == 0) continue;
        if (!e.fits_ulong_p() || e.get_ui() > 10000000UL) return std::nullopt;
        const RealInterval& mi = profile.modulus(i + 1);
        if (!mi.strictly_positive()) return std::nullopt;
        acc = mul(acc, pow_ui(mi, e.get_ui()));
    }
    return acc;
}

MarginVerdict verdict_of_log(const RealInterval& s) {
    if (s.strictly_positive()) return MarginVerdict::POSITIVE;
    if (s.strictly_negative()) return MarginVerdict::NEGATIVE;
    return MarginVerdict::INDETERMINATE;
}

MarginVerdict verdict_of_value(const RealInterval& v) {
    if (v.strictly_above_mpq(1)) return MarginVerdict::POSITIVE;
    if (v.strictly_below_mpq(1)) return MarginVerdict::NEGATIVE;
    return MarginVerdict::INDETERMINATE;
}

}  // namespace

RealInterval conjugate_product(ModulusProfile& profile, const RationalPoint& c) {
    validate_exponents(profile, c);
    const double kWidthTarget = std::ldexp(1.0, -32);
    while (true) {
        std::optional<RealInterval> s = log_sum(profile, c);
        if (s && s->width_d() <= kWidthTarget) return exp_i(*s);
        if (profile.bits() >= profile.system().cap()) {
            if (!s)
                throw CertificationError("modulus interval contains zero at the precision cap",
                                         profile.bits());
            return exp_i(*s);
        }
        profile.refine(next_precision(profile.bits()));
    }
}

MarginReport check_membership_witness(ModulusProfile& profile, const RationalPoint& c,
                                      bool power_form_cross_check) {
    validate_exponents(profile, c);
    const double kWidthTarget = std::ldexp(1.0, -32);
    MarginReport rep;
    rep.point = c;
    while (true) {
        std::optional<RealInterval> s = log_sum(profile, c);
        bool at_cap = profile.bits() >= profile.system().cap();
        if (s) {
            MarginVerdict v = verdict_of_log(*s);
            bool narrow = s->width_d() <= kWidthTarget;
            std::optional<MarginVerdict> pv;
            bool power_settled = true;
            if (power_form_cross_check) {
                std::optional<RealInterval> pf = power_form(profile, c);
                if (pf) {
                    pv = verdict_of_value(*pf);
                    power_settled = *pv != MarginVerdict::INDETERMINATE;
                }
            }
            bool settled = v != MarginVerdict::INDETERMINATE &&
                           (!power_form_cross_check || power_settled);
            if ((settled && narrow) || at_cap) {
                rep.value = exp_i(*s);
                rep.verdict = v;
                rep.precision_bits = profile.bits();
                rep.power_form_verdict = pv;
                if (pv && *pv != MarginVerdict::INDETERMINATE &&
                    v != MarginVerdict::INDETERMINATE && *pv != v)
                    throw std::logic_error(
                        "log-domain and integer-power evaluations disagree on the verdict");
                return rep;
            }
        } else if (at_cap) {
            throw CertificationError("modulus interval contains zero at the precision cap",
                                     profile.bits());
        }
        profile.refine(next_precision(profile.bits()));
    }
}

MarginReport check_membership_witness(const IntPolynomial& p, const RationalPoint& c,
                                      long cap_bits) {
    IrreducibilityVerdict irr = certify_irreducible(p, 256, cap_bits);
    if (irr.status != IrreducibilityStatus::IRREDUCIBLE)
        throw std::invalid_argument(
            std::string("membership check requires a certified irreducible polynomial (got ") +
            to_string(irr.status) + ")");
    ModulusProfile profile(
        std::make_shared<RootSystem>(RootSystem::solve(p, kDefaultTargetBits, cap_bits)));
    return check_membership_witness(profile, c);
}

MarginIdentityReport margin_identity_check(ModulusProfile& profile, int k,
                                           const std::vector<int>& J, long target_bits) {
    const int d = profile.degree();
    if (abs(profile.system().poly().constant_term()) != 1)
        throw std::invalid_argument("margin identity requires |p(0)| = 1 (unit polynomial)");
    if (J.empty()) throw std::invalid_argument("margin identity requires a nonempty subset");
    int i_n = *std::max_element(J.begin(), J.end());
    int i_min = *std::min_element(J.begin(), J.end());
    if (i_min < 1 || i_n > k) throw std::invalid_argument("subset not within {1,...,k}");
    if (k >= d) throw std::invalid_argument("margin identity requires k < degree");
    if (i_n > d - 2) throw std::invalid_argument("margin identity requires max(J) <= d-2");
    profile.refine(std::max(profile.bits(), target_bits));

    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(profile.bits());
    RealInterval prod_head = RealInterval::from_long(1, prec);  // |a_0 ... a_{d-2}|
    for (int i = 0; i <= d - 2; ++i) prod_head = mul(prod_head, profile.modulus(i));

    MarginIdentityReport rep;
    rep.i_n = i_n;
    rep.precision_bits = profile.bits();
    rep.lhs = add_mpq(mul(prod_head, profile.modulus(i_n)), mpq_class(-1));
    rep.rhs = mul(prod_head, sub(profile.modulus(i_n), profile.modulus(d - 1)));
    rep.residual = sub(rep.lhs, rep.rhs);
    return rep;
}

MarginIdentityReport margin_identity_check(const IntPolynomial& p, int k,
                                           const std::vector<int>& J, long target_bits,
                                           long cap_bits) {
    if (!p.is_monic()) throw std::invalid_argument("margin identity requires monic input");
    if (abs(p.constant_term()) != 1)
        throw std::invalid_argument("margin identity requires |p(0)| = 1 (unit polynomial)");
    ModulusProfile profile(
        std::make_shared<RootSystem>(RootSystem::solve(p, target_bits, cap_bits)));
    return margin_identity_check(profile, k, J, target_bits);
}

SeparationReport modulus_separation(ModulusProfile& profile) {
    const int d = profile.degree();
    const int groups = profile.group_count();
    if (groups < 2) throw std::domain_error("all moduli are tied: no separation gap exists");

    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(profile.bits());
    auto group_positions = profile.tied_groups();

    SeparationReport rep;
    rep.degree = d;
    rep.height = profile.system().poly().height();

    bool first = true;
    for (int g = 0; g + 1 < groups; ++g) {
        // enclosure of min over pairs (a in g, b in g+1) of m_a - m_b:
        // [hull(g).lo - hull(g+1).hi, min hi(g) - max lo(g+1)]
        RealInterval gap(prec);
        const auto& above = group_positions[static_cast<size_t>(g)];
        const auto& below = group_positions[static_cast<size_t>(g + 1)];
        mpfr_t t;
        mpfr_init2(t, prec);
        // lower endpoint
        mpfr_set_inf(t, 1);
        for (int pos : above) mpfr_min(t, t, profile.modulus(pos).lo(), MPFR_RNDD);
        mpfr_set(gap.lo_mut(), t, MPFR_RNDD);
        mpfr_set_inf(t, -1);
        for (int pos : below) mpfr_max(t, t, profile.modulus(pos).hi(), MPFR_RNDU);
        mpfr_sub(gap.lo_mut(), gap.lo(), t, MPFR_RNDD);
        // upper endpoint
        mpfr_set_inf(t, 1);
        for (int pos : above) mpfr_min(t, t, profile.modulus(pos).hi(), MPFR_RNDU);
        mpfr_set(gap.hi_mut(), t, MPFR_RNDU);
        mpfr_set_inf(t, -1);
        for (int pos : below) mpfr_max(t, t, profile.modulus(pos).lo(), MPFR_RNDD);
        mpfr_sub(gap.hi_mut(), gap.hi(), t, MPFR_RNDU);
        mpfr_clear(t);

        if (first || mpfr_cmp(gap.lo(), rep.min_gap.lo()) < 0) {
            rep.min_gap = gap;
            rep.upper_group = g;
            first = false;
        }
    }

    auto has_real = [&](int g) {
        for (int pos : group_positions[static_cast<size_t>(g)])
            if (profile.system().is_real_root(profile.root_index(pos))) return true;
        return false;
    };
    bool real_a = has_real(rep.upper_group);
    bool real_b = has_real(rep.upper_group + 1);
    rep.case_class = real_a && real_b
                         ? SeparationCase::REAL_REAL
                         : (real_a || real_b ? SeparationCase::REAL_COMPLEX
                                             : SeparationCase::COMPLEX_COMPLEX);
    return rep;
}

UnitGapResult unit_gap_property(ModulusProfile& profile) {
    const int d = profile.degree();
    if (d < 2) throw std::invalid_argument("unit gap requires degree >= 2");
    UnitGapResult res;
    res.precision_bits = profile.bits();
    res.holds = true;
    for (int i = 0; 3 * i < d; ++i) {
        // groups are certified totally ordered, so strict modulus dominance
        // is exactly "strictly earlier group"
        if (profile.group_of(i) < profile.group_of(d - 1)) continue;
        // tied with the last root: conjugate partners are an exact equality
        // (certified violation); anything else is an unresolved tie
        int ri = profile.root_index(i);
        int rl = profile.root_index(d - 1);
        if (profile.system().conjugate_partner(ri) == rl) {
            res.holds = false;
            res.violating_index = i;
            return res;
        }
        throw CertificationError("unit gap not certifiable at the precision cap",
                                 profile.bits(), i);
    }
    return res;
}

UnitGapResult unit_gap_property(const IntPolynomial& p, long target_bits, long cap_bits) {
    if (!p.is_monic() || abs(p.constant_term()) != 1)
        throw std::invalid_argument("unit gap requires a monic unit polynomial");
    ModulusProfile profile(
        std::make_shared<RootSystem>(RootSystem::solve(p, target_bits, cap_bits)));
    return unit_gap_property(profile);
}

SzRemarkReport sz_remark_evaluate(ModulusProfile& profile, unsigned d, const mpz_class& habs) {
    if (d < 2) throw std::invalid_argument("sz remark check requires d >= 2");
    if (habs < 3) throw std::invalid_argument("sz remark check requires |h| >= 3");
    SzRemarkReport rep;
    // rhs = 1 + 2.2/(|h| - 1.1) = 1 + 22/(10|h| - 11)
    rep.rhs = 1 + mpq_class(22, 1) / mpq_class(10 * habs - 11);
    rep.rhs.canonicalize();
    while (true) {
        RealInterval lhs = mul(profile.modulus(0),
                               pow_ui(profile.modulus(1), static_cast<unsigned long>(d) - 1));
        rep.lhs = lhs;
        rep.precision_bits = profile.bits();
        if (lhs.strictly_below_mpq(rep.rhs)) {
            rep.holds = true;
            return rep;
        }
        if (lhs.strictly_above_mpq(rep.rhs) || profile.bits() >= profile.system().cap()) {
            rep.holds = false;
            return rep;
        }
        profile.refine(next_precision(profile.bits()));
    }
}

SzRemarkReport sz_remark_check(unsigned d, const mpz_class& h, long target_bits, long cap_bits) {
    if (d < 2) throw std::invalid_argument("sz remark check requires d >= 2");
    mpz_class habs = abs(h);
    if (habs < 3) throw std::invalid_argument("sz remark check requires |h| >= 3");
    IntPolynomial f = make_trinomial(TrinomialSpec(d, d - 1, h));

    IrreducibilityVerdict irr = certify_irreducible(f, 256, cap_bits);
    if (irr.status != IrreducibilityStatus::IRREDUCIBLE) {
        SzRemarkReport rep;
        rep.rhs = 1 + mpq_class(22, 1) / mpq_class(10 * habs - 11);
        rep.rhs.canonicalize();
        rep.skipped = true;
        return rep;
    }

    ModulusProfile profile(
        std::make_shared<RootSystem>(RootSystem::solve(f, target_bits, cap_bits)));
    return sz_remark_evaluate(profile, d, habs);
}

}  // namespace conjpoly
