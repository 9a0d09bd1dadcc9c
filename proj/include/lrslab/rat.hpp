#ifndef LRSLAB_RAT_HPP
#define LRSLAB_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "lrslab/errors.hpp"

namespace lrslab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }
inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline Int int_pow(const Int& b, unsigned e) { return boost::multiprecision::pow(b, e); }

inline Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    if (b == 0) {
        if (e < 0) throw InputError("rat_pow: zero base with negative exponent");
        return Rat(0);
    }
    unsigned ae = static_cast<unsigned>(e < 0 ? -e : e);
    Rat r(int_pow(num(b), ae), int_pow(den(b), ae));
    if (e < 0) r = Rat(1) / r;
    return r;
}

// Number of bits of |a|; 0 for a = 0.
inline unsigned bit_length(const Int& a) {
    if (a == 0) return 0;
    return boost::multiprecision::msb(int_abs(a)) + 1;
}

// floor(sqrt(a)) for a >= 0.
inline Int isqrt(const Int& a) {
    if (a < 0) throw InputError("isqrt of negative");
    return boost::multiprecision::sqrt(a);
}

// floor(a^(1/n)) for a >= 0, n >= 1.
inline Int iroot(const Int& a, unsigned n) {
    if (a < 0) throw InputError("iroot of negative");
    if (n == 0) throw InputError("iroot: n = 0");
    if (a == 0 || a == 1 || n == 1) return a;
    if (n == 2) return isqrt(a);
    unsigned bits = bit_length(a);
    Int hi = Int(1) << (bits / n + 1);
    Int lo = 0;
    while (lo < hi) {  // smallest x with x^n > a, minus one
        Int mid = (lo + hi + 1) >> 1;
        if (int_pow(mid, n) <= a)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// Exact integer n-th root, if one exists.
inline std::optional<Int> exact_iroot(const Int& a, unsigned n) {
    if (n == 0) return std::nullopt;
    if (a < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = exact_iroot(-a, n);
        if (!r) return std::nullopt;
        return Int(-*r);
    }
    Int r = iroot(a, n);
    if (int_pow(r, n) == a) return r;
    return std::nullopt;
}

// Exact rational m-th root with the usual sign rules, if one exists.
inline std::optional<Rat> exact_rat_root(const Rat& u, unsigned m) {
    if (m == 0) return std::nullopt;
    if (u == 0) return Rat(0);
    auto rn = exact_iroot(num(u), m);
    if (!rn) return std::nullopt;
    auto rd = exact_iroot(den(u), m);
    if (!rd) return std::nullopt;
    return Rat(*rn, *rd);
}

inline std::string rat_to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto bad = [&]() -> InputError { return InputError("bad rational literal: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw bad();
        return Rat(n, d);
    } catch (const std::exception&) {
        throw bad();
    }
}

inline double rat_to_double(const Rat& q) { return q.template convert_to<double>(); }

// Nearest rational with denominator dividing 2^prec (ties toward +inf).
inline Rat round_to_dyadic(const Rat& x, unsigned prec) {
    Int scale = Int(1) << prec;
    Int n = num(x) * scale * 2 + den(x);  // floor((x*scale) + 1/2) via (2*n*s + d) / (2*d)
    Int d2 = den(x) * 2;
    Int q = n / d2;
    if (n < 0 && q * d2 != n) --q;  // floor division
    return Rat(q, scale);
}

// Nearest rational to x with denominator <= qmax (continued fractions).
inline Rat rational_reconstruct(const Rat& x, const Int& qmax) {
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Int a = num(x), b = den(x);
    while (b != 0) {
        Int t = a / b;
        if (a < 0 && t * b != a) --t;
        Int r = a - t * b;
        Int p2 = t * p1 + p0, q2 = t * q1 + q0;
        if (q2 > qmax) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        a = b;
        b = r;
    }
    return Rat(p1, q1);
}

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace lrslab

#endif
