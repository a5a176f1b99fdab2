#ifndef CONJPOLY_POLYTOPE_HPP
#define CONJPOLY_POLYTOPE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conjpoly {

using Rational = mpq_class;

struct RationalPoint {
    std::vector<Rational> coords;

    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }
    bool operator==(const RationalPoint& o) const { return coords == o.coords; }
};

// Intersection of the 2k half-spaces
//   L_i(x) = a_i + a_i (x_1 + ... + x_{i-1}) - b_i (x_i + ... + x_k) >= 0
//   x_j >= 0
// with positive a, b satisfying the skew condition a_i b_j - a_j b_i > 0
// for i < j, which pins the vertex count at 2^k.
class HalfSpaceSystem {
public:
    HalfSpaceSystem(std::vector<Rational> a, std::vector<Rational> b);
    // skips the skew validation (positivity is still required); lets tests
    // exercise the structural-error path of the elimination algorithm
    static HalfSpaceSystem unchecked(std::vector<Rational> a, std::vector<Rational> b);

    int k() const { return static_cast<int>(a_.size()); }
    // 1-indexed row access, matching the inequality numbering
    const Rational& a(int i) const { return a_[static_cast<size_t>(i - 1)]; }
    const Rational& b(int i) const { return b_[static_cast<size_t>(i - 1)]; }
    const std::vector<Rational>& a_all() const { return a_; }
    const std::vector<Rational>& b_all() const { return b_; }

    // exact value of L_i at x (1-indexed row)
    Rational row_value(int i, const RationalPoint& x) const;

private:
    HalfSpaceSystem() = default;
    std::vector<Rational> a_, b_;
};

// H-representation of the conjugate-product polytope in dimension k for
// degree d: a_j = (d-j)/j, b_j = 1. Requires d > k >= 1.
HalfSpaceSystem ekd_half_spaces(int k, int d);

// Vertex labeled by its subset J of active rows; bit j-1 of `mask`
// corresponds to j in J.
struct LabeledVertex {
    std::uint32_t mask = 0;
    RationalPoint point;

    std::vector<int> subset() const;  // sorted 1-indexed elements of J
};

// Exactly 2^k vertices in binary-counter order of the subset mask.
struct VertexSet {
    int k = 0;
    std::vector<LabeledVertex> vertices;

    const LabeledVertex& by_mask(std::uint32_t mask) const {
        return vertices[static_cast<size_t>(mask)];
    }
    bool same_as(const VertexSet& o) const;
};

// Closed-form vertices: for J = {j_1 < ... < j_n}, v_{j_l} = (j_{l+1}-j_l)/j_1
// for l < n, v_{j_n} = (d-j_n)/j_1, zero elsewhere.
VertexSet vertices_closed_form(int k, int d);

// Recursive elimination: split on whether row k is active; the active branch
// substitutes x_k = (a_k/b_k)(1 + x_1 + ... + x_{k-1}) and recurses on the
// reduced system a_i' = a_i - b_i a_k/b_k, b_i' = b_i (1 + a_k/b_k).
VertexSet vertices_by_elimination(const HalfSpaceSystem& sys);

// For each subset I solve {L_i = 0 for i in I, x_j = 0 otherwise} exactly by
// fraction-free Gaussian elimination and keep solutions satisfying all 2k
// inequalities.
VertexSet vertices_brute_force(const HalfSpaceSystem& sys);

struct MembershipVerdict {
    enum class Violation { NONE, ROW, NONNEGATIVITY };

    bool member = false;
    Violation violation = Violation::NONE;
    int violation_index = 0;  // 1-indexed row or coordinate
    Rational violation_slack;
    std::vector<Rational> row_slacks;    // L_i(x)
    std::vector<Rational> coord_slacks;  // x_j
};

MembershipVerdict contains(const HalfSpaceSystem& sys, const RationalPoint& p);

// Exact check that the closed-form vertex for J satisfies L_j = 0 for j in J
// and v_j = 0 otherwise.
bool vertex_identity_check(int k, int d, const std::vector<int>& J);

// Fraction-free (Bareiss) solve of an exact rational linear system; empty
// when singular.
std::optional<std::vector<Rational>> solve_linear_system(
    std::vector<std::vector<Rational>> matrix, std::vector<Rational> rhs);

std::string to_string(const Rational& q);

}  // namespace conjpoly

#endif
