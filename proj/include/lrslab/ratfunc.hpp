#ifndef LRSLAB_RATFUNC_HPP
#define LRSLAB_RATFUNC_HPP

#include <string>
#include <utility>

#include "lrslab/poly.hpp"

namespace lrslab {

// Normalized rational function over Q: gcd(num, den) = 1, den monic.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Rat(1)) {}
    explicit RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    explicit RatFunc(PolyQ num) : num_(std::move(num)), den_(Rat(1)) {}
    RatFunc(PolyQ num, PolyQ den) { assign(std::move(num), std::move(den)); }

    static RatFunc x() { return RatFunc(PolyQ::x()); }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    // max(deg num, deg den); degree of the zero function is -1.
    int degree() const {
        if (is_zero()) return -1;
        return std::max(num_.degree(), den_.degree());
    }

    Rat constant_value() const {
        if (!is_constant()) throw InputError("RatFunc: not a constant");
        if (num_.is_zero()) return Rat(0);
        return num_[0] / den_[0];
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, normalized_tag{}); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw InputError("RatFunc division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc pow(long e) const {
        if (e == 0) return RatFunc(Rat(1));
        if (is_zero()) {
            if (e < 0) throw InputError("RatFunc: zero to negative power");
            return RatFunc();
        }
        unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
        // num and den are coprime, so their powers need no re-normalization
        PolyQ n = poly_pow(num_, ae), d = poly_pow(den_, ae);
        RatFunc r;
        if (e > 0) {
            r.num_ = std::move(n);
            r.den_ = std::move(d);
        } else {
            r.num_ = std::move(d);
            r.den_ = std::move(n);
        }
        r.fix_monic_den();
        return r;
    }

    // Evaluation at a rational point; the bool is false at a pole.
    std::pair<bool, Rat> eval(const Rat& x) const {
        Rat d = den_(x);
        if (d == 0) return {false, Rat(0)};
        return {true, num_(x) / d};
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_polynomial()) return poly_to_string(num_, var);
        return "(" + poly_to_string(num_, var) + ")/(" + poly_to_string(den_, var) + ")";
    }

  private:
    struct normalized_tag {};
    RatFunc(PolyQ n, PolyQ d, normalized_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void assign(PolyQ n, PolyQ d) {
        if (d.is_zero()) throw InputError("RatFunc: zero denominator");
        if (n.is_zero()) {
            num_ = PolyQ();
            den_ = PolyQ(Rat(1));
            return;
        }
        PolyQ g = poly_gcd(n, d);
        if (g.degree() > 0) {
            n = exact_div(n, g);
            d = exact_div(d, g);
        }
        num_ = std::move(n);
        den_ = std::move(d);
        fix_monic_den();
    }

    void fix_monic_den() {
        Rat lc = den_.leading();
        if (lc != 1) {
            den_ = den_.scaled(Rat(1) / lc);
            num_ = num_.scaled(Rat(1) / lc);
        }
    }

    PolyQ num_;
    PolyQ den_;
};

}  // namespace lrslab

#endif
