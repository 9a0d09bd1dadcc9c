#ifndef LRSLAB_ELFUN_HPP
#define LRSLAB_ELFUN_HPP

#include <mutex>

#include "lrslab/interval.hpp"

namespace lrslab {

// Certified enclosures of elementary functions over exact rationals. All
// results are two-sided rational bounds; prec is the target 2^-prec width.

namespace detail {

// atanh(u) for exact rational 0 <= u <= 1/2, via the odd series with a
// geometric tail bound.
inline RatInterval atanh_small(const Rat& u, unsigned prec) {
    if (u < 0 || u > Rat(1, 2)) throw InputError("atanh_small: argument out of range");
    if (u == 0) return RatInterval(Rat(0));
    Rat u2 = u * u;
    Rat term = u;  // u^(2j+1)
    Rat sum = 0;
    Rat eps(Int(1), Int(1) << (prec + 2));
    unsigned j = 0;
    while (true) {
        sum += term / Rat(2 * j + 1);
        term = term * u2;
        ++j;
        // tail <= term/(2j+1) * 1/(1-u^2) <= term * 4/3 for u <= 1/2
        Rat tail = term * Rat(4, 3) / Rat(2 * j + 1);
        if (tail < eps) return {sum, sum + tail};
    }
}

// atan(u) for exact rational 0 <= u <= 1/2; alternating series.
inline RatInterval atan_small(const Rat& u, unsigned prec) {
    if (u < 0 || u > Rat(1, 2)) throw InputError("atan_small: argument out of range");
    if (u == 0) return RatInterval(Rat(0));
    Rat u2 = u * u;
    Rat term = u;
    Rat lo = 0, hi = 0;
    Rat eps(Int(1), Int(1) << (prec + 2));
    unsigned j = 0;
    bool plus = true;
    Rat sum = 0;
    while (true) {
        Rat t = term / Rat(2 * j + 1);
        if (plus)
            sum += t;
        else
            sum -= t;
        term = term * u2;
        ++j;
        plus = !plus;
        Rat next = term / Rat(2 * j + 1);
        if (next < eps) {
            // alternating: truth lies between sum and sum -+ next
            if (plus) return {sum, sum + next};
            return {sum - next, sum};
        }
    }
}

struct ElfunCache {
    std::mutex mu;
    unsigned ln2_prec = 0;
    RatInterval ln2;
    unsigned pi_prec = 0;
    RatInterval pi;
};
inline ElfunCache& elfun_cache() {
    static ElfunCache c;
    return c;
}

}  // namespace detail

inline RatInterval ln2_interval(unsigned prec) {
    auto& c = detail::elfun_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    if (c.ln2_prec < prec) {
        c.ln2 = detail::atanh_small(Rat(1, 3), prec + 2) * Rat(2);
        c.ln2_prec = prec;
    }
    return c.ln2;
}

// Machin: pi = 16 atan(1/5) - 4 atan(1/239).
inline RatInterval pi_interval(unsigned prec) {
    auto& c = detail::elfun_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    if (c.pi_prec < prec) {
        RatInterval a = detail::atan_small(Rat(1, 5), prec + 6) * Rat(16);
        RatInterval b = detail::atan_small(Rat(1, 239), prec + 6) * Rat(4);
        c.pi = a - b;
        c.pi_prec = prec;
    }
    return c.pi;
}

// ln(x) for exact rational x > 0.
inline RatInterval log_interval_exact(const Rat& x, unsigned prec) {
    if (x <= 0) throw InputError("log of non-positive value");
    // write x = 2^e * m with m in [1, 2)
    long e = 0;
    Rat m = x;
    while (m >= 2) {
        m /= 2;
        ++e;
    }
    while (m < 1) {
        m *= 2;
        --e;
    }
    Rat u = (m - 1) / (m + 1);  // in [0, 1/3]
    RatInterval lnm = detail::atanh_small(u, prec + 2) * Rat(2);
    if (e == 0) return lnm;
    RatInterval l2 = ln2_interval(prec + 2 + static_cast<unsigned>(bit_length(Int(e < 0 ? -e : e))));
    return lnm + l2 * Rat(e);
}

// ln over an interval with positive endpoints (monotone).
inline RatInterval log_interval(const RatInterval& x, unsigned prec) {
    if (x.lo <= 0) throw InputError("log_interval: non-positive endpoint");
    return {log_interval_exact(x.lo, prec).lo, log_interval_exact(x.hi, prec).hi};
}

// atan for an exact rational of any size.
inline RatInterval atan_interval_exact(const Rat& x, unsigned prec) {
    if (x < 0) {
        RatInterval r = atan_interval_exact(-x, prec);
        return -r;
    }
    if (x <= Rat(1, 2)) return detail::atan_small(x, prec);
    // atan(x) = pi/2 - atan(1/x); 1/x < 2, reduce again if needed via
    // atan(y) = pi/4 + atan((y-1)/(y+1)) for y in (1/2, 2)
    if (x < 2) {
        Rat y = (x - 1) / (x + 1);  // in (-1/3, 1/3)
        RatInterval t = y >= 0 ? detail::atan_small(y, prec) : -detail::atan_small(-y, prec);
        RatInterval pi4 = pi_interval(prec + 2) * Rat(1, 4);
        return pi4 + t;
    }
    RatInterval pi2 = pi_interval(prec + 2) * Rat(1, 2);
    return pi2 - atan_interval_exact(Rat(1) / x, prec);
}

// Principal argument of a complex interval box that excludes zero.
inline RatInterval arg_interval(const ComplexInterval& z, unsigned prec) {
    auto atan_pair = [&](const Rat& lo, const Rat& hi) {
        return RatInterval{atan_interval_exact(lo, prec).lo, atan_interval_exact(hi, prec).hi};
    };
    RatInterval pi = pi_interval(prec + 2);
    if (z.re.is_positive()) {
        // arg = atan(im/re): monotone in im, antitone in re for each sign
        Rat lo = rat_min(rat_min(z.im.lo / z.re.lo, z.im.lo / z.re.hi),
                         rat_min(z.im.hi / z.re.lo, z.im.hi / z.re.hi));
        Rat hi = rat_max(rat_max(z.im.lo / z.re.lo, z.im.lo / z.re.hi),
                         rat_max(z.im.hi / z.re.lo, z.im.hi / z.re.hi));
        return atan_pair(lo, hi);
    }
    if (z.im.is_positive()) {  // upper half plane: arg = pi/2 + atan(-re/im)
        Rat lo = rat_min(rat_min(-z.re.lo / z.im.lo, -z.re.lo / z.im.hi),
                         rat_min(-z.re.hi / z.im.lo, -z.re.hi / z.im.hi));
        Rat hi = rat_max(rat_max(-z.re.lo / z.im.lo, -z.re.lo / z.im.hi),
                         rat_max(-z.re.hi / z.im.lo, -z.re.hi / z.im.hi));
        RatInterval t = atan_pair(lo, hi);
        return pi * Rat(1, 2) + t;
    }
    if (z.im.is_negative()) {  // lower half plane: arg = -pi/2 + atan(re... )
        Rat lo = rat_min(rat_min(z.re.lo / -z.im.lo, z.re.lo / -z.im.hi),
                         rat_min(z.re.hi / -z.im.lo, z.re.hi / -z.im.hi));
        Rat hi = rat_max(rat_max(z.re.lo / -z.im.lo, z.re.lo / -z.im.hi),
                         rat_max(z.re.hi / -z.im.lo, z.re.hi / -z.im.hi));
        RatInterval t = atan_pair(lo, hi);
        return (-(pi * Rat(1, 2))) + t;
    }
    if (!z.re.is_negative()) throw InputError("arg_interval: box contains zero");
    // box straddles negative real axis; arg not continuous there
    throw InputError("arg_interval: box crosses the branch cut");
}

// sin/cos over a narrow interval: Taylor at the midpoint plus a Lipschitz
// widening (|sin'|, |cos'| <= 1).
namespace detail {
inline void sincos_point(const Rat& x, unsigned prec, RatInterval& s, RatInterval& c) {
    // Taylor with remainder |x|^N / N!
    Rat eps(Int(1), Int(1) << (prec + 2));
    Rat ax = rat_abs(x);
    Rat fact = 1, powx = 1, bound = 1;
    unsigned N = 0;
    while (true) {  // find N with |x|^N / N! < eps
        ++N;
        fact *= N;
        powx *= ax;
        bound = powx / fact;
        if (bound < eps && N >= 4) break;
    }
    Rat sin_sum = 0, cos_sum = 0, term = 1;
    for (unsigned k = 0; k < N; ++k) {
        if (k > 0) term = term * x / Rat(k);
        switch (k % 4) {
            case 0: cos_sum += term; break;
            case 1: sin_sum += term; break;
            case 2: cos_sum -= term; break;
            case 3: sin_sum -= term; break;
        }
    }
    s = {sin_sum - bound, sin_sum + bound};
    c = {cos_sum - bound, cos_sum + bound};
}
}  // namespace detail

inline RatInterval sin_interval(const RatInterval& x, unsigned prec) {
    RatInterval s, c;
    detail::sincos_point(x.mid(), prec, s, c);
    Rat r = x.width() / 2;
    return {s.lo - r, s.hi + r};
}

inline RatInterval cos_interval(const RatInterval& x, unsigned prec) {
    RatInterval s, c;
    detail::sincos_point(x.mid(), prec, s, c);
    Rat r = x.width() / 2;
    return {c.lo - r, c.hi + r};
}

}  // namespace lrslab

#endif
