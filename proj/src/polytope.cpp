#include "conjpoly/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace conjpoly {

std::string to_string(const Rational& q) { return q.get_str(); }

HalfSpaceSystem::HalfSpaceSystem(std::vector<Rational> a, std::vector<Rational> b) {
    HalfSpaceSystem s = unchecked(std::move(a), std::move(b));
    const int k = s.k();
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (s.a(i) * s.b(j) - s.a(j) * s.b(i) <= 0)
                throw std::invalid_argument("skew condition a_i b_j - a_j b_i > 0 fails for rows " +
                                            std::to_string(i) + "," + std::to_string(j));
    *this = std::move(s);
}

HalfSpaceSystem HalfSpaceSystem::unchecked(std::vector<Rational> a, std::vector<Rational> b) {
    if (a.empty() || a.size() != b.size())
        throw std::invalid_argument("half-space system needs equal-length nonempty a, b");
    for (size_t i = 0; i < a.size(); ++i) {
        a[i].canonicalize();
        b[i].canonicalize();
        if (a[i] <= 0 || b[i] <= 0)
            throw std::invalid_argument("half-space system requires positive a_i, b_i");
    }
    HalfSpaceSystem s;
    s.a_ = std::move(a);
    s.b_ = std::move(b);
    return s;
}

Rational HalfSpaceSystem::row_value(int i, const RationalPoint& x) const {
    if (x.dim() != k()) throw std::invalid_argument("dimension mismatch");
    Rational v = a(i);
    for (int l = 1; l < i; ++l) v += a(i) * x.coords[static_cast<size_t>(l - 1)];
    for (int l = i; l <= k(); ++l) v -= b(i) * x.coords[static_cast<size_t>(l - 1)];
    return v;
}

HalfSpaceSystem ekd_half_spaces(int k, int d) {
    if (k < 1) throw std::invalid_argument("dimension k must be >= 1");
    if (d <= k) throw std::invalid_argument("ekd half-spaces require d > k");
    std::vector<Rational> a, b;
    a.reserve(static_cast<size_t>(k));
    b.reserve(static_cast<size_t>(k));
    for (int j = 1; j <= k; ++j) {
        Rational aj(d - j, j);
        aj.canonicalize();
        a.push_back(std::move(aj));
        b.emplace_back(1);
    }
    return HalfSpaceSystem(std::move(a), std::move(b));
}

std::vector<int> LabeledVertex::subset() const {
    std::vector<int> out;
    for (int j = 0; j < 32; ++j)
        if (mask & (1u << j)) out.push_back(j + 1);
    return out;
}

bool VertexSet::same_as(const VertexSet& o) const {
    if (k != o.k || vertices.size() != o.vertices.size()) return false;
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].mask != o.vertices[i].mask || !(vertices[i].point == o.vertices[i].point))
            return false;
    return true;
}

VertexSet vertices_closed_form(int k, int d) {
    if (k < 1 || d <= k) throw std::invalid_argument("closed-form vertices require d > k >= 1");
    VertexSet out;
    out.k = k;
    const std::uint32_t n = 1u << k;
    for (std::uint32_t mask = 0; mask < n; ++mask) {
        LabeledVertex v;
        v.mask = mask;
        v.point.coords.assign(static_cast<size_t>(k), Rational(0));
        std::vector<int> J;
        for (int j = 1; j <= k; ++j)
            if (mask & (1u << (j - 1))) J.push_back(j);
        if (!J.empty()) {
            const int j1 = J.front();
            for (size_t l = 0; l + 1 < J.size(); ++l) {
                Rational q(J[l + 1] - J[l], j1);
                q.canonicalize();
                v.point.coords[static_cast<size_t>(J[l] - 1)] = std::move(q);
            }
            Rational q(d - J.back(), j1);
            q.canonicalize();
            v.point.coords[static_cast<size_t>(J.back() - 1)] = std::move(q);
        }
        out.vertices.push_back(std::move(v));
    }
    return out;
}

namespace {

std::vector<LabeledVertex> eliminate(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
    const int k = static_cast<int>(a.size());
    if (k == 1) {
        std::vector<LabeledVertex> out(2);
        out[0].mask = 0;
        out[0].point.coords = {Rational(0)};
        out[1].mask = 1;
        out[1].point.coords = {a[0] / b[0]};
        return out;
    }
    const Rational ratio = a[static_cast<size_t>(k - 1)] / b[static_cast<size_t>(k - 1)];

    // branch k not in J: drop the last row and set x_k = 0
    std::vector<Rational> a0(a.begin(), a.end() - 1), b0(b.begin(), b.end() - 1);
    std::vector<LabeledVertex> low = eliminate(a0, b0);
    for (auto& v : low) v.point.coords.emplace_back(0);

    // branch k in J: substitute x_k = (a_k/b_k)(1 + x_1 + ... + x_{k-1})
    std::vector<Rational> a1(static_cast<size_t>(k - 1)), b1(static_cast<size_t>(k - 1));
    for (int i = 0; i < k - 1; ++i) {
        a1[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)] * ratio;
        if (a1[static_cast<size_t>(i)] <= 0)
            throw std::domain_error("skew condition violated: a_" + std::to_string(i + 1) +
                                    "' <= 0 after eliminating row " + std::to_string(k));
        b1[static_cast<size_t>(i)] = b[static_cast<size_t>(i)] * (1 + ratio);
    }
    std::vector<LabeledVertex> high = eliminate(a1, b1);
    for (auto& v : high) {
        Rational s = 1;
        for (const auto& c : v.point.coords) s += c;
        v.point.coords.push_back(ratio * s);
        v.mask |= 1u << (k - 1);
    }

    low.insert(low.end(), std::make_move_iterator(high.begin()), std::make_move_iterator(high.end()));
    return low;
}

}  // namespace

VertexSet vertices_by_elimination(const HalfSpaceSystem& sys) {
    VertexSet out;
    out.k = sys.k();
    out.vertices = eliminate(sys.a_all(), sys.b_all());
    return out;
}

std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> matrix,
                                                         std::vector<Rational> rhs) {
    const size_t m = matrix.size();
    if (m == 0) return std::vector<Rational>{};
    // scale rows to integers, then run Bareiss fraction-free elimination
    std::vector<std::vector<mpz_class>> M(m, std::vector<mpz_class>(m + 1));
    for (size_t r = 0; r < m; ++r) {
        mpz_class lcm = 1;
        auto fold = [&lcm](const Rational& q) {
            mpz_class den = q.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        };
        for (const auto& q : matrix[r]) fold(q);
        fold(rhs[r]);
        for (size_t c = 0; c < m; ++c) {
            Rational scaled = matrix[r][c] * Rational(lcm);
            M[r][c] = scaled.get_num();
        }
        Rational scaled = rhs[r] * Rational(lcm);
        M[r][m] = scaled.get_num();
    }
    mpz_class prev = 1;
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        while (piv < m && M[piv][col] == 0) ++piv;
        if (piv == m) return std::nullopt;
        if (piv != col) std::swap(M[piv], M[col]);
        for (size_t r = col + 1; r < m; ++r) {
            for (size_t c = col + 1; c <= m; ++c) {
                mpz_class t = M[r][c] * M[col][col] - M[r][col] * M[col][c];
                mpz_divexact(M[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[r][col] = 0;
        }
        prev = M[col][col];
    }
    std::vector<Rational> x(m);
    for (size_t i = m; i-- > 0;) {
        Rational s(M[i][m]);
        for (size_t c = i + 1; c < m; ++c) s -= Rational(M[i][c]) * x[c];
        x[i] = s / Rational(M[i][i]);
        x[i].canonicalize();
    }
    return x;
}

VertexSet vertices_brute_force(const HalfSpaceSystem& sys) {
    const int k = sys.k();
    VertexSet out;
    out.k = k;
    const std::uint32_t n = 1u << k;
    for (std::uint32_t mask = 0; mask < n; ++mask) {
        std::vector<int> I;
        for (int j = 1; j <= k; ++j)
            if (mask & (1u << (j - 1))) I.push_back(j);
        const size_t m = I.size();
        // rows L_i = 0 for i in I restricted to the variables in I
        std::vector<std::vector<Rational>> A(m, std::vector<Rational>(m));
        std::vector<Rational> rhs(m);
        for (size_t r = 0; r < m; ++r) {
            const int i = I[r];
            for (size_t c = 0; c < m; ++c) {
                const int l = I[c];
                A[r][c] = l < i ? sys.a(i) : -sys.b(i);
            }
            rhs[r] = -sys.a(i);
        }
        auto sol = solve_linear_system(std::move(A), std::move(rhs));
        if (!sol) continue;
        RationalPoint p;
        p.coords.assign(static_cast<size_t>(k), Rational(0));
        for (size_t c = 0; c < m; ++c) p.coords[static_cast<size_t>(I[c] - 1)] = (*sol)[c];
        if (!contains(sys, p).member) continue;
        LabeledVertex v;
        v.mask = mask;
        v.point = std::move(p);
        out.vertices.push_back(std::move(v));
    }
    if (out.vertices.size() != n)
        throw std::runtime_error("brute-force enumeration produced " +
                                 std::to_string(out.vertices.size()) + " vertices, expected " +
                                 std::to_string(n));
    return out;
}

MembershipVerdict contains(const HalfSpaceSystem& sys, const RationalPoint& p) {
    MembershipVerdict v;
    const int k = sys.k();
    v.row_slacks.reserve(static_cast<size_t>(k));
    v.coord_slacks = p.coords;
    for (int i = 1; i <= k; ++i) v.row_slacks.push_back(sys.row_value(i, p));
    v.member = true;
    for (int i = 1; i <= k && v.member; ++i) {
        if (v.row_slacks[static_cast<size_t>(i - 1)] < 0) {
            v.member = false;
            v.violation = MembershipVerdict::Violation::ROW;
            v.violation_index = i;
            v.violation_slack = v.row_slacks[static_cast<size_t>(i - 1)];
        }
    }
    for (int j = 1; j <= k && v.member; ++j) {
        if (p.coords[static_cast<size_t>(j - 1)] < 0) {
            v.member = false;
            v.violation = MembershipVerdict::Violation::NONNEGATIVITY;
            v.violation_index = j;
            v.violation_slack = p.coords[static_cast<size_t>(j - 1)];
        }
    }
    return v;
}

bool vertex_identity_check(int k, int d, const std::vector<int>& J) {
    if (k < 1 || d <= k) throw std::invalid_argument("vertex identity requires d > k >= 1");
    std::vector<int> s = J;
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > k) throw std::invalid_argument("subset element out of range");
        if (i > 0 && s[i] == s[i - 1]) throw std::invalid_argument("subset has repeated element");
    }
    std::uint32_t mask = 0;
    for (int j : s) mask |= 1u << (j - 1);
    VertexSet vs = vertices_closed_form(k, d);
    const LabeledVertex& v = vs.by_mask(mask);
    HalfSpaceSystem sys = ekd_half_spaces(k, d);
    for (int j : s)
        if (sys.row_value(j, v.point) != 0) return false;
    for (int j = 1; j <= k; ++j)
        if (!(mask & (1u << (j - 1))) && v.point.coords[static_cast<size_t>(j - 1)] != 0)
            return false;
    return true;
}

}  // namespace conjpoly
