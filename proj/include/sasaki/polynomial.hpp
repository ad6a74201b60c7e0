#pragma once

#include "sasaki/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sasaki {

/// Dense univariate polynomial with coefficients in T, index = degree.
/// Invariant: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient list and degree() == -1.
template <class T>
class PolyT {
  public:
    PolyT() = default;
    explicit PolyT(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    PolyT(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    static PolyT constant(T v) {
        PolyT p;
        p.coeffs_.push_back(std::move(v));
        p.trim();
        return p;
    }
    /// x^k with unit coefficient.
    static PolyT monomial(std::size_t k, T unit) {
        PolyT p;
        p.coeffs_.assign(k + 1, T{});
        p.coeffs_[k] = std::move(unit);
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<T>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i (zero beyond the stored degree).
    const T& coeff(std::size_t i) const {
        static const T zero{};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }
    const T& lead() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    void set_coeff(std::size_t i, T v) {
        if (i >= coeffs_.size()) coeffs_.resize(i + 1, T{});
        coeffs_[i] = std::move(v);
        trim();
    }

    friend PolyT operator+(const PolyT& a, const PolyT& b) {
        std::vector<T> out(std::max(a.coeffs_.size(), b.coeffs_.size()), T{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = out[i] + b.coeffs_[i];
        return PolyT(std::move(out));
    }
    friend PolyT operator-(const PolyT& a, const PolyT& b) {
        std::vector<T> out(std::max(a.coeffs_.size(), b.coeffs_.size()), T{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = out[i] - b.coeffs_[i];
        return PolyT(std::move(out));
    }
    PolyT operator-() const {
        std::vector<T> out(coeffs_.size(), T{});
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = T{} - coeffs_[i];
        return PolyT(std::move(out));
    }
    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        if (a.is_zero() || b.is_zero()) return PolyT{};
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return PolyT(std::move(out));
    }
    friend PolyT operator*(const PolyT& a, const T& s) {
        std::vector<T> out(a.coeffs_.size(), T{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i] * s;
        return PolyT(std::move(out));
    }
    friend PolyT operator*(const T& s, const PolyT& a) { return a * s; }

    friend bool operator==(const PolyT& a, const PolyT& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

    /// Horner evaluation at a point of the coefficient type.
    T eval(const T& x) const {
        T acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T{}) coeffs_.pop_back();
    }
    std::vector<T> coeffs_;
};

using Poly = PolyT<Rat>;
/// Bivariate polynomial: outer variable with Poly-in-the-inner-variable
/// coefficients. Used as P(z, c) with z outer and c inner.
using Poly2 = PolyT<Poly>;

inline Poly poly_from(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    v.reserve(cs.size());
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

inline Poly derivative(const Poly& p) {
    if (p.degree() <= 0) return Poly{};
    std::vector<Rat> out(static_cast<std::size_t>(p.degree()), Rat(0));
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = p.coeffs()[i] * Rat(static_cast<long>(i));
    return Poly(std::move(out));
}

inline Poly antiderivative(const Poly& p) {
    if (p.is_zero()) return Poly{};
    std::vector<Rat> out(p.coeffs().size() + 1, Rat(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        out[i + 1] = p.coeffs()[i] / Rat(static_cast<long>(i + 1));
    return Poly(std::move(out));
}

inline Rat definite_integral(const Poly& p, const Rat& lo, const Rat& hi) {
    const Poly ip = antiderivative(p);
    return ip.eval(hi) - ip.eval(lo);
}

/// p(a*x + b), exact substitution.
inline Poly compose_affine(const Poly& p, const Rat& a, const Rat& b) {
    Poly acc;
    const Poly lin({b, a});
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * lin + Poly::constant(*it);
    return acc;
}

/// Quotient/remainder over a coefficient field.
inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly r = a;
    if (a.degree() < b.degree()) return {Poly{}, r};
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const Rat inv_lead = Rat(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const long shift = r.degree() - b.degree();
        const Rat factor = r.lead() * inv_lead;
        q[static_cast<std::size_t>(shift)] = factor;
        std::vector<Rat> sub(static_cast<std::size_t>(r.degree()) + 1, Rat(0));
        for (std::size_t i = 0; i < b.coeffs().size(); ++i)
            sub[i + static_cast<std::size_t>(shift)] = b.coeffs()[i] * factor;
        r = r - Poly(std::move(sub));
    }
    return {Poly(std::move(q)), r};
}

inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("polynomial division has nonzero remainder");
    return q;
}

/// Positive rational c such that p/c has coprime integer coefficients.
inline Rat content(const Poly& p) {
    if (p.is_zero()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const Rat& c : p.coeffs()) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    return make_rat(num_gcd, den_lcm);
}

/// Scales to coprime integer coefficients with positive leading coefficient.
inline Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Rat c = content(p);
    if (p.lead() < 0) c = -c;
    return p * (Rat(1) / c);
}

inline Poly gcd(const Poly& a, const Poly& b) {
    Poly x = primitive_part(a), y = primitive_part(b);
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = y;
        y = primitive_part(r);
    }
    return x; // primitive with positive lead, or zero
}

/// Product of the distinct irreducible factors: p / gcd(p, p').
inline Poly square_free_part(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("square-free part of zero polynomial");
    if (p.degree() == 0) return Poly::constant(Rat(1));
    const Poly g = gcd(p, derivative(p));
    if (g.degree() == 0) return primitive_part(p);
    return primitive_part(exact_div(primitive_part(p), g));
}

inline std::string poly_to_string(const Poly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        const Rat& c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const Rat a = rat_abs(c);
        if (a != 1 || i == 0) os << rat_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// --- bivariate helpers (outer z, inner c) ---

inline Poly2 poly2_from_z_coeffs(std::vector<Poly> zc) { return Poly2(std::move(zc)); }

/// Evaluates the inner variable, leaving a polynomial in the outer one.
inline Poly eval_inner(const Poly2& p, const Rat& c) {
    std::vector<Rat> out;
    out.reserve(p.coeffs().size());
    for (const Poly& q : p.coeffs()) out.push_back(q.eval(c));
    return Poly(std::move(out));
}

/// Evaluates the outer variable, leaving a polynomial in the inner one.
inline Poly eval_outer(const Poly2& p, const Rat& z) {
    Poly acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * Poly({z}) + *it;
    return acc;
}

inline Poly2 derivative_outer(const Poly2& p) {
    if (p.degree() <= 0) return Poly2{};
    std::vector<Poly> out(static_cast<std::size_t>(p.degree()));
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = p.coeffs()[i] * Rat(static_cast<long>(i));
    return Poly2(std::move(out));
}

/// Divides by a divisor whose leading outer coefficient is a nonzero
/// constant; throws if the division is not exact.
inline Poly2 exact_div_outer(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw std::domain_error("bivariate division by zero");
    if (b.lead().degree() != 0)
        throw std::logic_error("bivariate division requires constant leading coefficient");
    const Rat inv_lead = Rat(1) / b.lead().coeff(0);
    Poly2 r = a;
    if (a.degree() < b.degree()) {
        if (!a.is_zero()) throw std::logic_error("bivariate division has nonzero remainder");
        return Poly2{};
    }
    std::vector<Poly> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const long shift = r.degree() - b.degree();
        const Poly factor = r.lead() * inv_lead;
        q[static_cast<std::size_t>(shift)] = factor;
        std::vector<Poly> sub(static_cast<std::size_t>(r.degree()) + 1);
        for (std::size_t i = 0; i < b.coeffs().size(); ++i)
            sub[i + static_cast<std::size_t>(shift)] = b.coeffs()[i] * factor;
        r = r - Poly2(std::move(sub));
    }
    if (!r.is_zero()) throw std::logic_error("bivariate division has nonzero remainder");
    return Poly2(std::move(q));
}

/// gcd over Q[c] of all outer coefficients.
inline Poly content_outer(const Poly2& p) {
    Poly g;
    for (const Poly& q : p.coeffs()) g = gcd(g, q);
    return g;
}

} // namespace sasaki
