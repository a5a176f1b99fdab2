#include "conjpoly/roots.hpp"

#include "conjpoly/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace conjpoly {

long next_precision(long bits) {
    if (bits < 53) return 53;
    if (bits < 128) return 128;
    return bits * 2;
}

namespace {

// ---------------------------------------------------------------------
// Initial approximations: Aberth-Ehrlich, seeded on perturbed circles
// whose radii come from the Newton polygon of the coefficients.
// ---------------------------------------------------------------------

std::vector<double> newton_polygon_radii(const std::vector<double>& logabs, int d) {
    // upper convex hull of (i, log|a_i|), a_i != 0
    std::vector<int> hull;
    for (int i = 0; i <= d; ++i) {
        if (std::isinf(logabs[static_cast<size_t>(i)])) continue;
        while (hull.size() >= 2) {
            int p = hull[hull.size() - 2], q = hull[hull.size() - 1];
            double cross = (logabs[static_cast<size_t>(q)] - logabs[static_cast<size_t>(p)]) * (i - p) -
                           (logabs[static_cast<size_t>(i)] - logabs[static_cast<size_t>(p)]) * (q - p);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    std::vector<double> radii(static_cast<size_t>(d));
    size_t idx = 0;
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        int k1 = hull[s], k2 = hull[s + 1];
        double r = std::exp((logabs[static_cast<size_t>(k1)] - logabs[static_cast<size_t>(k2)]) /
                            (k2 - k1));
        for (int t = 0; t < k2 - k1; ++t) radii[idx++] = r;
    }
    while (idx < radii.size()) radii[idx++] = 1.0;
    return radii;
}

std::vector<std::complex<double>> aberth_seeds(const IntPolynomial& p) {
    const int d = p.degree();
    std::vector<double> logabs(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        const mpz_class& c = p.coeff(i);
        if (c == 0) {
            logabs[static_cast<size_t>(i)] = -std::numeric_limits<double>::infinity();
        } else {
            // log|c| via mpz size to stay finite for huge coefficients
            signed long exp2;
            double m = mpz_get_d_2exp(&exp2, c.get_mpz_t());
            logabs[static_cast<size_t>(i)] = std::log(std::fabs(m)) + 0.6931471805599453 * exp2;
        }
    }
    std::vector<double> radii = newton_polygon_radii(logabs, d);
    std::vector<std::complex<double>> z(static_cast<size_t>(d));
    size_t i = 0;
    while (i < z.size()) {
        size_t j = i;
        while (j < z.size() && radii[j] == radii[i]) ++j;
        size_t n = j - i;
        for (size_t t = 0; t < n; ++t) {
            double theta = 2.0 * M_PI * (static_cast<double>(t) + 0.26) / static_cast<double>(n) +
                           0.4391 + 0.771 * static_cast<double>(i);
            z[i + t] = std::polar(radii[i], theta);
        }
        i = j;
    }
    return z;
}

void eval_horner_d(const std::vector<double>& c, std::complex<double> z,
                   std::complex<double>& f, std::complex<double>& fp) {
    f = c.back();
    fp = 0.0;
    for (size_t i = c.size() - 1; i-- > 0;) {
        fp = fp * z + f;
        f = f * z + c[i];
    }
}

bool aberth_double(const IntPolynomial& p, std::vector<std::complex<double>>& out) {
    const int d = p.degree();
    std::vector<double> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        c[static_cast<size_t>(i)] = p.coeff(i).get_d();
        if (!std::isfinite(c[static_cast<size_t>(i)])) return false;
    }
    std::vector<std::complex<double>> z = aberth_seeds(p);
    const int kMaxIter = 400;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> f, fp;
            eval_horner_d(c, z[static_cast<size_t>(i)], f, fp);
            if (!std::isfinite(std::abs(f))) return false;
            if (f == 0.0) continue;
            std::complex<double> n;
            if (fp == 0.0) {
                n = std::complex<double>(1e-3 * (1.0 + std::abs(z[static_cast<size_t>(i)])), 0);
            } else {
                n = f / fp;
            }
            std::complex<double> s = 0.0;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                std::complex<double> dz = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (dz == 0.0) dz = 1e-14 * (1.0 + std::abs(z[static_cast<size_t>(i)]));
                s += 1.0 / dz;
            }
            std::complex<double> denom = 1.0 - n * s;
            std::complex<double> w = denom == 0.0 ? n : n / denom;
            z[static_cast<size_t>(i)] -= w;
            if (!std::isfinite(std::abs(z[static_cast<size_t>(i)]))) return false;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
        }
        if (worst < 1e-13) {
            out = z;
            return true;
        }
    }
    return false;
}

void eval_horner_mp(const IntPolynomial& p, const MpComplex& z, MpComplex& f, MpComplex& fp) {
    mpfr_prec_t w = z.prec();
    f = MpComplex(w);
    fp = MpComplex(w);
    mpfr_set_z(f.re_mut(), p.leading().get_mpz_t(), MPFR_RNDN);
    for (int i = p.degree() - 1; i >= 0; --i) {
        fp = add(mul(fp, z), f);
        f = mul(f, z);
        mpfr_add_z(f.re_mut(), f.re(), p.coeff(i).get_mpz_t(), MPFR_RNDN);
    }
}

bool aberth_mpfr(const IntPolynomial& p, long bits, std::vector<MpComplex>& out) {
    const int d = p.degree();
    const mpfr_prec_t w = static_cast<mpfr_prec_t>(bits);
    std::vector<std::complex<double>> seeds = aberth_seeds(p);
    std::vector<MpComplex> z;
    z.reserve(static_cast<size_t>(d));
    for (auto& s : seeds) z.push_back(MpComplex::from_doubles(s.real(), s.imag(), w));
    const double tol = std::ldexp(1.0, static_cast<int>(-(bits - 8)));
    const int kMaxIter = 600;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < d; ++i) {
            MpComplex f(w), fp(w);
            eval_horner_mp(p, z[static_cast<size_t>(i)], f, fp);
            if (mpfr_zero_p(f.re()) && mpfr_zero_p(f.im())) continue;
            MpComplex n = div(f, fp);
            MpComplex s(w);
            MpComplex one(w);
            mpfr_set_ui(one.re_mut(), 1, MPFR_RNDN);
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                MpComplex dz = sub(z[static_cast<size_t>(i)], z[static_cast<size_t>(j)]);
                s = add(s, div(one, dz));
            }
            MpComplex denom = sub(one, mul(n, s));
            MpComplex wstep = (mpfr_zero_p(denom.re()) && mpfr_zero_p(denom.im())) ? n : div(n, denom);
            z[static_cast<size_t>(i)] = sub(z[static_cast<size_t>(i)], wstep);
            double wa = std::hypot(wstep.re_d(), wstep.im_d());
            double za = 1.0 + std::hypot(z[static_cast<size_t>(i)].re_d(), z[static_cast<size_t>(i)].im_d());
            worst = std::max(worst, wa / za);
        }
        if (worst < tol) {
            out = std::move(z);
            return true;
        }
    }
    return false;
}

ComplexBox eval_box(const IntPolynomial& p, const MpComplex& z) {
    const mpfr_prec_t w = z.prec();
    ComplexBox zb(RealInterval::point(z.re(), w), RealInterval::point(z.im(), w));
    ComplexBox acc(RealInterval::from_mpz(p.leading(), w), RealInterval(w));
    for (int i = p.degree() - 1; i >= 0; --i) {
        acc = mul(acc, zb);
        acc.re = add(acc.re, RealInterval::from_mpz(p.coeff(i), w));
    }
    return acc;
}

// Upper bound of d * |p(z)| / |p'(z)|; the disk around z with this radius
// contains at least one root of p. Empty when |p'(z)| cannot be bounded
// away from zero.
bool certified_radius(const IntPolynomial& p, const IntPolynomial& dp, const MpComplex& z,
                      mpfr_t out) {
    RealInterval mf = modulus(eval_box(p, z));
    RealInterval mdf = modulus(eval_box(dp, z));
    if (mpfr_sgn(mdf.lo()) <= 0) return false;
    mpfr_div(out, mf.hi(), mdf.lo(), MPFR_RNDU);
    mpfr_mul_ui(out, out, static_cast<unsigned long>(p.degree()), MPFR_RNDU);
    return true;
}

}  // namespace

RootSystem::RootSystem(IntPolynomial p, long cap)
    : poly_(std::move(p)), deriv_(poly_.derivative()), cap_(cap) {}

RootSystem RootSystem::solve(const IntPolynomial& p, long target_bits, long cap_bits) {
    if (p.degree() < 1) throw std::invalid_argument("root solving requires degree >= 1");
    {
        IntPolynomial g = content_free_gcd(p, p.derivative());
        if (g.degree() > 0)
            throw std::invalid_argument("polynomial is not squarefree; gcd(p, p') = " +
                                        g.to_pretty_string());
    }
    if (target_bits > cap_bits)
        throw std::invalid_argument("target precision exceeds the precision cap");
    RootSystem sys(p, cap_bits);
    sys.initial_approximations(53);
    for (int i = 0; i < sys.degree(); ++i)
        if (!sys.refine_root(i, target_bits))
            throw CertificationError("failed to certify root enclosure at precision cap",
                                     cap_bits, i);
    sys.ensure_disjoint(target_bits);
    sys.bits_ = target_bits;
    sys.compute_pairing();
    return sys;
}

void RootSystem::initial_approximations(long bits) {
    const int d = degree();
    roots_.clear();
    sigma_.assign(static_cast<size_t>(d), -1);

    // peel off a root at zero (squarefree input has at most one)
    IntPolynomial work = poly_;
    bool zero_root = false;
    if (work.constant_term() == 0) {
        zero_root = true;
        std::vector<mpz_class> shifted(work.coeffs().begin() + 1, work.coeffs().end());
        work = IntPolynomial(std::move(shifted));
    }

    std::vector<MpComplex> approx;
    if (work.degree() >= 1) {
        std::vector<std::complex<double>> zd;
        if (bits <= 53 && aberth_double(work, zd)) {
            for (auto& z : zd) approx.push_back(MpComplex::from_doubles(z.real(), z.imag(), 64));
        } else {
            long b = std::max(bits, 128L);
            bool ok = false;
            while (b <= cap_) {
                if (aberth_mpfr(work, b, approx)) {
                    ok = true;
                    break;
                }
                b = next_precision(b);
            }
            if (!ok)
                throw CertificationError("simultaneous iteration failed to converge", cap_);
        }
    }

    if (zero_root) approx.push_back(MpComplex(64));

    // canonical order: modulus descending, then re, then im (approximate,
    // used only to fix the output ordering deterministically)
    std::sort(approx.begin(), approx.end(), [](const MpComplex& a, const MpComplex& b) {
        double ma = std::hypot(a.re_d(), a.im_d());
        double mb = std::hypot(b.re_d(), b.im_d());
        if (ma != mb) return ma > mb;
        if (a.re_d() != b.re_d()) return a.re_d() > b.re_d();
        return a.im_d() > b.im_d();
    });

    for (auto& z : approx) {
        RootEnclosure e{z, RealInterval(64), 0};
        mpfr_set_inf(e.radius.lo_mut(), 1);
        mpfr_set_inf(e.radius.hi_mut(), 1);
        roots_.push_back(std::move(e));
    }
}

bool RootSystem::refine_root(int i, long target_bits) {
    RootEnclosure& enc = roots_[static_cast<size_t>(i)];
    if (enc.precision_bits >= target_bits) return true;
    const int kMaxSteps = 100;
    for (long w = target_bits + 64; w <= cap_ + 64; w = next_precision(w)) {
        MpComplex z = enc.center.at_prec(static_cast<mpfr_prec_t>(w));
        mpfr_t r, prev_r, tol;
        mpfr_init2(r, static_cast<mpfr_prec_t>(w));
        mpfr_init2(prev_r, static_cast<mpfr_prec_t>(w));
        mpfr_init2(tol, static_cast<mpfr_prec_t>(w));
        mpfr_set_inf(prev_r, 1);
        bool done = false;
        for (int step = 0; step < kMaxSteps; ++step) {
            // tolerance 2^-target * max(1, |z|)
            mpfr_t az;
            mpfr_init2(az, static_cast<mpfr_prec_t>(w));
            mpfr_hypot(az, z.re(), z.im(), MPFR_RNDD);
            if (mpfr_cmp_ui(az, 1) < 0) mpfr_set_ui(az, 1, MPFR_RNDD);
            mpfr_mul_2si(tol, az, -target_bits, MPFR_RNDD);
            mpfr_clear(az);

            if (certified_radius(poly_, deriv_, z, r)) {
                // keep the best certified enclosure so far so that the next
                // rung starts warm
                if (mpfr_cmp(r, enc.radius.hi()) < 0) {
                    enc.center = z;
                    enc.radius = RealInterval::point(r, static_cast<mpfr_prec_t>(w));
                }
                if (mpfr_cmp(r, tol) <= 0) {
                    enc.precision_bits = target_bits;
                    done = true;
                    break;
                }
                // quadratic convergence stalled: need more working precision
                if (step > 0 && mpfr_cmp(r, prev_r) >= 0) break;
                mpfr_set(prev_r, r, MPFR_RNDU);
            }
            MpComplex f(static_cast<mpfr_prec_t>(w)), fp(static_cast<mpfr_prec_t>(w));
            eval_horner_mp(poly_, z, f, fp);
            if (mpfr_zero_p(f.re()) && mpfr_zero_p(f.im())) {
                // exact root: zero radius
                enc.center = z;
                enc.radius = RealInterval(static_cast<mpfr_prec_t>(w));
                enc.precision_bits = target_bits;
                done = true;
                break;
            }
            if (mpfr_zero_p(fp.re()) && mpfr_zero_p(fp.im())) break;
            z = sub(z, div(f, fp));
        }
        mpfr_clear(r);
        mpfr_clear(prev_r);
        mpfr_clear(tol);
        if (done) return true;
    }
    return false;
}

void RootSystem::ensure_disjoint(long target_bits) {
    const int d = degree();
    long t = target_bits;
    while (true) {
        int vi = -1, vj = -1;
        for (int i = 0; i < d && vi < 0; ++i)
            for (int j = i + 1; j < d; ++j) {
                RealInterval dist = distance(roots_[static_cast<size_t>(i)].center,
                                             roots_[static_cast<size_t>(j)].center);
                mpfr_t rsum;
                mpfr_init2(rsum, 64);
                mpfr_add(rsum, roots_[static_cast<size_t>(i)].radius.hi(),
                         roots_[static_cast<size_t>(j)].radius.hi(), MPFR_RNDU);
                bool ok = mpfr_cmp(dist.lo(), rsum) > 0;
                mpfr_clear(rsum);
                if (!ok) {
                    vi = i;
                    vj = j;
                    break;
                }
            }
        if (vi < 0) return;
        long tn = std::min(next_precision(t), cap_);
        if (tn == t)
            throw CertificationError("cannot certify disjoint root enclosures", cap_, vi);
        t = tn;
        if (!refine_root(vi, t) || !refine_root(vj, t))
            throw CertificationError("cannot certify disjoint root enclosures", cap_, vi);
    }
}

void RootSystem::refine_all(long target_bits) {
    target_bits = std::min(target_bits, cap_);
    if (target_bits <= bits_) return;
    for (int i = 0; i < degree(); ++i)
        if (!refine_root(i, target_bits))
            throw CertificationError("failed to refine root enclosure", cap_, i);
    ensure_disjoint(target_bits);
    bits_ = target_bits;
}

RealInterval RootSystem::modulus_interval(int i) const {
    const RootEnclosure& e = roots_[static_cast<size_t>(i)];
    RealInterval m = modulus_point(e.center);
    mpfr_sub(m.lo_mut(), m.lo(), e.radius.hi(), MPFR_RNDD);
    if (mpfr_sgn(m.lo()) < 0) mpfr_set_zero(m.lo_mut(), 1);
    mpfr_add(m.hi_mut(), m.hi(), e.radius.hi(), MPFR_RNDU);
    return m;
}

ComplexBox RootSystem::box(int i) const {
    const RootEnclosure& e = roots_[static_cast<size_t>(i)];
    return disk_box(e.center, e.radius.hi());
}

void RootSystem::compute_pairing() {
    const int d = degree();
    while (true) {
        bool all_resolved = true;
        int blocking = -1;
        for (int i = 0; i < d; ++i) {
            if (sigma_[static_cast<size_t>(i)] >= 0) continue;
            MpComplex ci = roots_[static_cast<size_t>(i)].center.conj();
            int found = -1;
            int count = 0;
            for (int j = 0; j < d; ++j) {
                RealInterval dist = distance(ci, roots_[static_cast<size_t>(j)].center);
                mpfr_t rsum;
                mpfr_init2(rsum, 64);
                mpfr_add(rsum, roots_[static_cast<size_t>(i)].radius.hi(),
                         roots_[static_cast<size_t>(j)].radius.hi(), MPFR_RNDU);
                bool possible = mpfr_cmp(dist.lo(), rsum) <= 0;
                mpfr_clear(rsum);
                if (possible) {
                    ++count;
                    found = j;
                }
            }
            if (count == 1) {
                sigma_[static_cast<size_t>(i)] = found;
            } else {
                all_resolved = false;
                blocking = i;
            }
        }
        if (all_resolved) break;
        long t = std::min(next_precision(bits_), cap_);
        if (t <= bits_)
            throw CertificationError("cannot certify conjugate pairing", cap_, blocking);
        refine_all(t);
    }
    for (int i = 0; i < d; ++i)
        if (sigma_[static_cast<size_t>(sigma_[static_cast<size_t>(i)])] != i)
            throw CertificationError("conjugate pairing is not an involution", bits_, i);
}

int RootSystem::conjugate_partner(int i) {
    if (sigma_.empty() || sigma_[static_cast<size_t>(i)] < 0) compute_pairing();
    return sigma_[static_cast<size_t>(i)];
}

// ---------------------------------------------------------------------
// ModulusProfile
// ---------------------------------------------------------------------

ModulusProfile::ModulusProfile(std::shared_ptr<RootSystem> sys) : sys_(std::move(sys)) { build(); }

ModulusProfile sorted_moduli(RootSystem sys) {
    return ModulusProfile(std::make_shared<RootSystem>(std::move(sys)));
}

void ModulusProfile::build() {
    const int d = sys_->degree();
    while (true) {
        moduli_.clear();
        order_.resize(static_cast<size_t>(d));
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<RealInterval> by_root;
        by_root.reserve(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) by_root.push_back(sys_->modulus_interval(i));
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            double ma = by_root[static_cast<size_t>(a)].mid_d();
            double mb = by_root[static_cast<size_t>(b)].mid_d();
            if (ma != mb) return ma > mb;
            return a < b;
        });
        bool need_refine = false;
        for (int pos = 0; pos + 1 < d; ++pos) {
            const RealInterval& hi = by_root[static_cast<size_t>(order_[static_cast<size_t>(pos)])];
            const RealInterval& lo = by_root[static_cast<size_t>(order_[static_cast<size_t>(pos) + 1])];
            if (!lo.strictly_below(hi)) {
                int a = order_[static_cast<size_t>(pos)];
                int b = order_[static_cast<size_t>(pos) + 1];
                bool conjugates = sys_->conjugate_partner(a) == b;
                if (!conjugates && sys_->bits() < sys_->cap()) {
                    need_refine = true;
                    break;
                }
            }
        }
        if (need_refine) {
            sys_->refine_all(next_precision(sys_->bits()));
            continue;
        }
        for (int pos = 0; pos < d; ++pos)
            moduli_.push_back(by_root[static_cast<size_t>(order_[static_cast<size_t>(pos)])]);

        // group by adjacent overlap, then strengthen to full group
        // separation: every member of a group strictly above every member
        // of the next; refine when possible, merge at the cap
        group_.assign(static_cast<size_t>(d), 0);
        for (int pos = 1; pos < d; ++pos) {
            int g = group_[static_cast<size_t>(pos) - 1];
            if (moduli_[static_cast<size_t>(pos)].strictly_below(moduli_[static_cast<size_t>(pos) - 1]))
                ++g;
            group_[static_cast<size_t>(pos)] = g;
        }
        bool cross_refine = false;
        bool merged = true;
        while (merged && !cross_refine) {
            merged = false;
            for (int p1 = 0; p1 < d && !merged && !cross_refine; ++p1)
                for (int p2 = p1 + 1; p2 < d; ++p2) {
                    if (group_[static_cast<size_t>(p2)] != group_[static_cast<size_t>(p1)] + 1)
                        continue;
                    if (moduli_[static_cast<size_t>(p2)].strictly_below(
                            moduli_[static_cast<size_t>(p1)]))
                        continue;
                    if (sys_->bits() < sys_->cap()) {
                        cross_refine = true;
                    } else {
                        int dropped = group_[static_cast<size_t>(p2)];
                        for (int q = 0; q < d; ++q)
                            if (group_[static_cast<size_t>(q)] >= dropped)
                                --group_[static_cast<size_t>(q)];
                        merged = true;
                    }
                    break;
                }
        }
        if (cross_refine) {
            sys_->refine_all(next_precision(sys_->bits()));
            continue;
        }
        // every position exposes its group hull, so downstream consumers are
        // invariant under permutations within a tied group
        for (int g = 0; g <= group_[static_cast<size_t>(d) - 1]; ++g) {
            int first = -1, last = -1;
            for (int pos = 0; pos < d; ++pos)
                if (group_[static_cast<size_t>(pos)] == g) {
                    if (first < 0) first = pos;
                    last = pos;
                }
            if (first == last) continue;
            RealInterval hull = moduli_[static_cast<size_t>(first)];
            for (int pos = first + 1; pos <= last; ++pos)
                hull = RealInterval::hull(hull, moduli_[static_cast<size_t>(pos)]);
            for (int pos = first; pos <= last; ++pos) moduli_[static_cast<size_t>(pos)] = hull;
        }
        return;
    }
}

std::vector<std::vector<int>> ModulusProfile::tied_groups() const {
    std::vector<std::vector<int>> groups(static_cast<size_t>(group_count()));
    for (int pos = 0; pos < degree(); ++pos)
        groups[static_cast<size_t>(group_[static_cast<size_t>(pos)])].push_back(pos);
    return groups;
}

void ModulusProfile::refine(long target_bits) {
    target_bits = std::min(target_bits, sys_->cap());
    if (target_bits <= sys_->bits()) return;
    sys_->refine_all(target_bits);
    build();
}

int count_in_annulus(ModulusProfile& profile, const RealInterval& r_low,
                     const RealInterval& r_high) {
    if (mpfr_sgn(r_low.lo()) <= 0 || !r_low.strictly_below(r_high))
        throw std::invalid_argument("annulus requires 0 < r_low < r_high");
    while (true) {
        int inside = 0;
        bool unresolved = false;
        for (int pos = 0; pos < profile.degree(); ++pos) {
            const RealInterval& m = profile.modulus(pos);
            if (r_high.strictly_below(m) || m.strictly_below(r_low)) continue;  // outside
            if (r_low.strictly_below(m) && m.strictly_below(r_high)) {
                ++inside;
                continue;
            }
            unresolved = true;
            break;
        }
        if (!unresolved) return inside;
        if (profile.bits() >= profile.system().cap())
            throw CertificationError(
                "annulus boundary overlaps a modulus interval at the precision cap",
                profile.system().cap());
        profile.refine(next_precision(profile.bits()));
    }
}

AnnulusPrediction predicted_annuli(const TrinomialSpec& spec, const mpq_class& epsilon,
                                   mpfr_prec_t prec) {
    mpz_class habs = abs(spec.h);
    if (habs < 3) throw std::invalid_argument("annulus prediction requires |h| >= 3");
    mpq_class lo_adm = mpq_class(1) / mpq_class(habs);
    mpq_class hi_adm = 1 - lo_adm;
    if (!(epsilon > lo_adm && epsilon < hi_adm))
        throw std::domain_error("epsilon outside admissible range (1/|h|, 1-1/|h|)");
    mpq_class base_lo_q = (1 - epsilon) * mpq_class(habs);
    mpq_class base_hi_q = (1 + epsilon) * mpq_class(habs);
    RealInterval base_lo = RealInterval::from_mpq(base_lo_q, prec);
    RealInterval base_hi = RealInterval::from_mpq(base_hi_q, prec);
    RealInterval one = RealInterval::from_long(1, prec);
    unsigned long j = spec.j;
    unsigned long dj = spec.d - spec.j;
    AnnulusPrediction out{
        div(one, root_ui(base_hi, j)),
        div(one, root_ui(base_lo, j)),
        root_ui(base_lo, dj),
        root_ui(base_hi, dj),
        static_cast<int>(j),
        static_cast<int>(dj),
    };
    return out;
}

mpz_class cauchy_root_bound(const IntPolynomial& p) {
    if (!p.is_monic()) throw std::invalid_argument("Cauchy bound requires a monic polynomial");
    return p.height() + 1;
}

}  // namespace conjpoly
