#ifndef LRSLAB_INTERVAL_HPP
#define LRSLAB_INTERVAL_HPP

#include "lrslab/rat.hpp"

namespace lrslab {

// Closed interval with exact rational endpoints. Arithmetic is exact; callers
// round outward between stages when denominators need trimming.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    explicit RatInterval(const Rat& x) : lo(x), hi(x) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw InputError("interval endpoints out of order");
    }

    static RatInterval around(const Rat& center, const Rat& radius) {
        return {center - radius, center + radius};
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool is_positive() const { return lo > 0; }
    bool is_negative() const { return hi < 0; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) { return a + (-b); }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {rat_min(rat_min(p1, p2), rat_min(p3, p4)),
                rat_max(rat_max(p1, p2), rat_max(p3, p4))};
    }
    friend RatInterval operator+(const RatInterval& a, const Rat& b) {
        return {a.lo + b, a.hi + b};
    }
    friend RatInterval operator*(const RatInterval& a, const Rat& b) {
        return b >= 0 ? RatInterval{a.lo * b, a.hi * b} : RatInterval{a.hi * b, a.lo * b};
    }

    RatInterval square() const {
        if (lo >= 0) return {lo * lo, hi * hi};
        if (hi <= 0) return {hi * hi, lo * lo};
        return {Rat(0), rat_max(lo * lo, hi * hi)};
    }

    // Outward rounding onto the 2^-prec grid.
    RatInterval rounded(unsigned prec) const {
        Rat step(Int(1), Int(1) << prec);
        Rat l = round_to_dyadic(lo, prec), h = round_to_dyadic(hi, prec);
        if (l > lo) l -= step;
        if (h < hi) h += step;
        return {l, h};
    }
};

// Lower/upper rational bounds for sqrt(x), x >= 0, with 2^-prec resolution.
inline Rat sqrt_lower(const Rat& x, unsigned prec) {
    if (x < 0) throw InputError("sqrt of negative");
    if (x == 0) return Rat(0);
    Int scale = Int(1) << prec;
    Int n = num(x) * den(x) * scale * scale;
    return Rat(isqrt(n), den(x) * scale);
}

inline Rat sqrt_upper(const Rat& x, unsigned prec) {
    if (x < 0) throw InputError("sqrt of negative");
    if (x == 0) return Rat(0);
    Int scale = Int(1) << prec;
    Int n = num(x) * den(x) * scale * scale;
    return Rat(isqrt(n) + 1, den(x) * scale);
}

inline RatInterval sqrt_interval(const RatInterval& x, unsigned prec) {
    if (x.lo < 0) throw InputError("sqrt_interval: negative lower endpoint");
    return {sqrt_lower(x.lo, prec), sqrt_upper(x.hi, prec)};
}

// m-th root bounds for x >= 0.
inline Rat root_lower(const Rat& x, unsigned m, unsigned prec) {
    if (x < 0) throw InputError("root_lower: negative");
    if (x == 0) return Rat(0);
    Int scale = Int(1) << prec;
    Int n = num(x) * int_pow(den(x), m - 1) * int_pow(scale, m);
    return Rat(iroot(n, m), den(x) * scale);
}

inline Rat root_upper(const Rat& x, unsigned m, unsigned prec) {
    if (x < 0) throw InputError("root_upper: negative");
    if (x == 0) return Rat(0);
    Int scale = Int(1) << prec;
    Int n = num(x) * int_pow(den(x), m - 1) * int_pow(scale, m);
    return Rat(iroot(n, m) + 1, den(x) * scale);
}

// Rectangular complex interval.
struct ComplexInterval {
    RatInterval re, im;

    ComplexInterval() = default;
    ComplexInterval(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
    explicit ComplexInterval(const Rat& x) : re(x), im(Rat(0)) {}

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const Rat& b) {
        return {a.re * b, a.im * b};
    }
    friend ComplexInterval operator+(const ComplexInterval& a, const Rat& b) {
        return {a.re + b, a.im};
    }

    RatInterval norm2() const { return re.square() + im.square(); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    Rat max_width() const { return rat_max(re.width(), im.width()); }
    ComplexInterval rounded(unsigned prec) const { return {re.rounded(prec), im.rounded(prec)}; }
};

}  // namespace lrslab

#endif
