#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sasaki {

using Int = boost::multiprecision::mpz_int;

/// Exact rational number backed by GMP. Always canonical: positive
/// denominator, gcd(num, den) = 1, zero is 0/1.
using Rat = boost::multiprecision::mpq_rational;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rat(num) / Rat(den);
}

/// Parses "p/q" or "p". Throws std::domain_error on malformed input.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::domain_error("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::domain_error("malformed rational literal: " + s);
    }
}

/// Renders canonically, omitting "/1" for integers.
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline int sign(const Rat& r) { return r.sign(); }

/// r^e for integer e (negative e inverts; 0^0 = 1).
inline Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    if (r == 0) {
        if (e < 0) throw std::domain_error("zero to a negative power");
        return Rat(0);
    }
    Rat base = e < 0 ? Rat(1) / r : r;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat acc(1);
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace sasaki
