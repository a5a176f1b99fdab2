#include "conjpoly/int_polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace conjpoly {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
    normalize();
}

void IntPolynomial::normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
    return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, unsigned e) {
    std::vector<mpz_class> v(e + 1, mpz_class(0));
    v[e] = c;
    return IntPolynomial(std::move(v));
}

const mpz_class& IntPolynomial::coeff(int i) const {
    static const mpz_class kZero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

mpz_class IntPolynomial::height() const {
    mpz_class h = 0;
    for (const auto& c : coeffs_) {
        mpz_class a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (degree() == 0) return zero();
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> r(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> r(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<mpz_class> r(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> r = coeffs_;
    for (auto& c : r) c = -c;
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_coeff_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i].get_str();
    }
    return os.str();
}

std::string IntPolynomial::to_pretty_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

TrinomialSpec::TrinomialSpec(unsigned d_, unsigned j_, mpz_class h_)
    : d(d_), j(j_), h(std::move(h_)) {
    if (j == 0 || d <= j)
        throw std::invalid_argument("trinomial spec requires d > j > 0, got d=" +
                                    std::to_string(d) + " j=" + std::to_string(j));
}

IntPolynomial make_trinomial(const TrinomialSpec& spec) {
    std::vector<mpz_class> v(spec.d + 1, mpz_class(0));
    v[0] = 1;
    v[spec.j] = -spec.h;
    v[spec.d] = 1;
    return IntPolynomial(std::move(v));
}

IntPolynomial reciprocal(const IntPolynomial& p) {
    if (p.constant_term() == 0)
        throw std::invalid_argument("reciprocal requires nonzero constant term");
    std::vector<mpz_class> r(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPolynomial(std::move(r));
}

bool is_unit_polynomial(const IntPolynomial& p) {
    if (!p.is_monic()) throw std::invalid_argument("is_unit_polynomial requires monic input");
    return abs(p.constant_term()) == 1;
}

bool is_root_of_unity_poly(const IntPolynomial& p) {
    if (!p.is_monic()) throw std::invalid_argument("is_root_of_unity_poly requires monic input");
    const int d = p.degree();
    if (d < 1) return false;
    if (abs(p.constant_term()) != 1) return false;
    // phi(N) = d forces N <= 2 d^2, so it is enough to check x^N mod p == 1
    // for N up to that bound. Maintain r = x^N mod p incrementally.
    const unsigned bound = 2u * static_cast<unsigned>(d) * static_cast<unsigned>(d);
    std::vector<mpz_class> r(static_cast<size_t>(d), mpz_class(0));
    if (d == 1) {
        // x mod (x + a0) = -a0
        r[0] = -p.coeff(0);
    } else {
        r[1] = 1;
    }
    auto is_one = [&]() {
        if (r[0] != 1) return false;
        for (int i = 1; i < d; ++i)
            if (r[static_cast<size_t>(i)] != 0) return false;
        return true;
    };
    for (unsigned n = 1; n <= bound; ++n) {
        if (is_one()) return true;
        // r <- (x * r) mod p
        mpz_class top = r[static_cast<size_t>(d) - 1];
        for (int i = d - 1; i > 0; --i) r[static_cast<size_t>(i)] = r[static_cast<size_t>(i - 1)];
        r[0] = 0;
        if (top != 0)
            for (int i = 0; i < d; ++i) r[static_cast<size_t>(i)] -= top * p.coeff(i);
    }
    return false;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& divisor) {
    if (divisor.is_zero()) return std::nullopt;
    if (p.is_zero()) return IntPolynomial::zero();
    int dn = p.degree(), dd = divisor.degree();
    if (dn < dd) return std::nullopt;
    std::vector<mpz_class> rem = p.coeffs();
    std::vector<mpz_class> quot(static_cast<size_t>(dn - dd) + 1, mpz_class(0));
    const mpz_class& lead = divisor.leading();
    for (int i = dn; i >= dd; --i) {
        mpz_class& top = rem[static_cast<size_t>(i)];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[static_cast<size_t>(i - dd)] = q;
        for (int k = 0; k <= dd; ++k) rem[static_cast<size_t>(i - dd + k)] -= q * divisor.coeff(k);
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

namespace {

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (p.leading() < 0) g = -g;
    std::vector<mpz_class> r(p.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = p.coeffs()[i] / g;
    return IntPolynomial(std::move(r));
}

// prem(a, b): remainder of lead(b)^(deg a - deg b + 1) * a divided by b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> rem = a.coeffs();
    int da = a.degree(), db = b.degree();
    const mpz_class& lb = b.leading();
    for (int i = da; i >= db; --i) {
        mpz_class top = rem[static_cast<size_t>(i)];
        for (auto& c : rem) c *= lb;
        for (int k = 0; k <= db; ++k) rem[static_cast<size_t>(i - db + k)] -= top * b.coeff(k);
    }
    rem.resize(static_cast<size_t>(std::max(db, 1)));
    return IntPolynomial(std::move(rem));
}

}  // namespace

IntPolynomial content_free_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial u = a.is_zero() ? a : primitive_part(a);
    IntPolynomial v = b.is_zero() ? b : primitive_part(b);
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPolynomial r = pseudo_remainder(u, v);
        u = v;
        v = r.is_zero() ? r : primitive_part(r);
    }
    return primitive_part(u);
}

bool is_squarefree(const IntPolynomial& p) {
    if (p.degree() < 1) return false;
    return content_free_gcd(p, p.derivative()).degree() == 0;
}

namespace {

// Parser for "x^5 - 10x^2 + 1" style input.
IntPolynomial parse_pretty(std::string_view text) {
    std::vector<mpz_class> coeffs;
    auto bump = [&](unsigned e, const mpz_class& c) {
        if (coeffs.size() <= e) coeffs.resize(e + 1, mpz_class(0));
        coeffs[e] += c;
    };
    size_t i = 0;
    auto skip_ws = [&]() { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool any = false;
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
    }
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        skip_ws();
        if (!digits.empty() && i < text.size() && text[i] == '*') {  // tolerate "2*x"
            ++i;
            skip_ws();
        }
        bool has_x = i < text.size() && (text[i] == 'x' || text[i] == 'X');
        if (!has_x && digits.empty())
            throw std::invalid_argument("cannot parse polynomial term at position " + std::to_string(i));
        mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
        unsigned e = 0;
        if (has_x) {
            ++i;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                std::string ed;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
                if (ed.empty()) throw std::invalid_argument("missing exponent after '^'");
                e = static_cast<unsigned>(std::stoul(ed));
            } else {
                e = 1;
            }
        }
        bump(e, sign * c);
        any = true;
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == '+') { sign = 1; ++i; }
        else if (text[i] == '-') { sign = -1; ++i; }
        else throw std::invalid_argument(std::string("unexpected character '") + text[i] + "' in polynomial");
    }
    if (!any) throw std::invalid_argument("empty polynomial text");
    return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
    if (text.find_first_of("xX") != std::string_view::npos) return parse_pretty(text);
    // dense coefficient list, constant term first
    std::vector<mpz_class> coeffs;
    std::string tok;
    std::istringstream is{std::string(text)};
    while (std::getline(is, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty coefficient in list");
        coeffs.emplace_back(tok.substr(b, e - b + 1));
    }
    if (coeffs.empty()) throw std::invalid_argument("empty polynomial text");
    return IntPolynomial(std::move(coeffs));
}

}  // namespace conjpoly
