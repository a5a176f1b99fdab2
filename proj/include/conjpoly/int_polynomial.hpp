#ifndef CONJPOLY_INT_POLYNOMIAL_HPP
#define CONJPOLY_INT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conjpoly {

// Dense integer-coefficient polynomial, coeff(i) is the coefficient of x^i.
// The coefficient vector is kept normalized: leading coefficient nonzero
// (the zero polynomial is stored as the single coefficient 0).
class IntPolynomial {
public:
    IntPolynomial() : coeffs_{mpz_class(0)} {}
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(const mpz_class& c);
    // c * x^e
    static IntPolynomial monomial(const mpz_class& c, unsigned e);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    bool is_monic() const { return coeffs_.back() == 1; }

    const mpz_class& coeff(int i) const;
    const mpz_class& leading() const { return coeffs_.back(); }
    const mpz_class& constant_term() const { return coeffs_.front(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    // max |coefficient| over all coefficients.
    mpz_class height() const;

    mpz_class evaluate(const mpz_class& x) const;
    mpq_class evaluate(const mpq_class& x) const;

    IntPolynomial derivative() const;

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;

    // Comma-separated dense coefficient list, constant term first:
    // "1,0,-10,0,0,1" is x^5 - 10x^2 + 1.
    std::string to_coeff_string() const;
    // Human-readable form, highest power first: "x^5 - 10x^2 + 1".
    std::string to_pretty_string() const;

private:
    std::vector<mpz_class> coeffs_;
    void normalize();
};

// d > j > 0 required by construction of f = x^d - h x^j + 1.
struct TrinomialSpec {
    unsigned d = 0;
    unsigned j = 0;
    mpz_class h;

    TrinomialSpec(unsigned d_, unsigned j_, mpz_class h_);
};

// x^d - h x^j + 1 (Def of the f_{d,j,h} family).
IntPolynomial make_trinomial(const TrinomialSpec& spec);

// Coefficient sequence reversed; requires nonzero constant term.
IntPolynomial reciprocal(const IntPolynomial& p);

// Monic p with |constant term| = 1.
bool is_unit_polynomial(const IntPolynomial& p);

// True iff p divides x^N - 1 over the integers for some N <= 2 d^2.
// Requires monic p; the caller is expected to pass an irreducible p.
bool is_root_of_unity_poly(const IntPolynomial& p);

// Exact division: returns quotient iff divisor divides p exactly over Z.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& p,
                                          const IntPolynomial& divisor);

// Primitive gcd over Z[x] (positive leading coefficient), via a primitive
// pseudo-remainder sequence.
IntPolynomial content_free_gcd(const IntPolynomial& a, const IntPolynomial& b);

// gcd(p, p') is constant.
bool is_squarefree(const IntPolynomial& p);

// Parses either the dense coefficient list ("1,0,-10,0,0,1", constant term
// first) or the human-readable form ("x^5 - 10x^2 + 1").
IntPolynomial parse_polynomial(std::string_view text);

}  // namespace conjpoly

#endif
