#ifndef LRSLAB_POLY_HPP
#define LRSLAB_POLY_HPP

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lrslab/errors.hpp"
#include "lrslab/rat.hpp"

namespace lrslab {

inline bool coeff_is_zero(const Rat& x) { return x == 0; }
inline Rat coeff_from_int(const Rat&, int n) { return Rat(n); }
inline Int coeff_from_int(const Int&, int n) { return Int(n); }
inline Rat coeff_exact_div(const Rat& a, const Rat& b) { return a / b; }
inline Int coeff_exact_div(const Int& a, const Int& b) {
    Int q = a / b;
    assert(q * b == a);
    return q;
}
inline bool coeff_is_zero(const Int& x) { return x == 0; }

// Dense univariate polynomial over a commutative coefficient ring K.
// Coefficients are stored ascending; the zero polynomial stores nothing and
// has degree -1. Field-only operations (divrem, gcd) require K division.
template <class K>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const K& c) {
        if (!coeff_is_zero(c)) c_.push_back(c);
    }
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial x() {
        static_assert(std::is_constructible_v<K, int>);
        return Polynomial(std::vector<K>{K(0), K(1)});
    }
    // x^n with coefficient c.
    static Polynomial monomial(const K& c, std::size_t n) {
        if (coeff_is_zero(c)) return Polynomial();
        std::vector<K> v(n + 1, zero_of(c));
        v[n] = c;
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const K& leading() const {
        if (is_zero()) throw InputError("leading coefficient of zero polynomial");
        return c_.back();
    }
    const K& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<K>& coeffs() const { return c_; }

    // Coefficient of x^i, with an explicit zero fallback for i > degree.
    K coeff_or(std::size_t i, const K& z) const { return i < c_.size() ? c_[i] : z; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), zero_of(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<K> r = a.c_;
        for (auto& x : r) x = -x;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, zero_of(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }

    Polynomial scaled(const K& s) const {
        if (coeff_is_zero(s)) return Polynomial();
        std::vector<K> r = c_;
        for (auto& x : r) x = x * s;
        return Polynomial(std::move(r));
    }

    Polynomial shifted_up(std::size_t n) const {  // multiply by x^n
        if (is_zero() || n == 0) return *this;
        std::vector<K> r(c_.size() + n, zero_of(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + n] = c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<K> r(c_.size() - 1, zero_of(c_[0]));
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * coeff_from_int(c_[i], static_cast<int>(i));
        return Polynomial(std::move(r));
    }

    K operator()(const K& x) const {
        if (is_zero()) return x - x;
        K acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

  private:
    static K zero_of(const K& like) { return like - like; }
    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

using PolyQ = Polynomial<Rat>;
using PolyZ = std::vector<Int>;  // raw ascending integer coefficients, trimmed

inline PolyQ poly_from_ints(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    v.reserve(cs.size());
    for (long c : cs) v.emplace_back(c);
    return PolyQ(std::move(v));
}

template <class K>
bool coeff_is_zero(const Polynomial<K>& p) {
    return p.is_zero();
}

// --- field-coefficient division -------------------------------------------

// Horner evaluation into a different ring; `promote` lifts a coefficient to T.
template <class K, class T, class Promote>
T eval_poly_with(const Polynomial<K>& p, const T& x, Promote promote) {
    T acc = x - x;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + promote(p[static_cast<std::size_t>(i)]);
    return acc;
}

template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divrem(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial<K>(), a};
    std::vector<K> r = a.coeffs();
    const int db = b.degree();
    std::vector<K> q(a.degree() - db + 1, r[0] - r[0]);
    for (int i = a.degree(); i >= db; --i) {
        if (coeff_is_zero(r[i])) continue;
        K c = r[i] / b.leading();
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - c * b[j];
    }
    return {Polynomial<K>(std::move(q)), Polynomial<K>(std::move(r))};
}

template <class K>
Polynomial<K> operator/(const Polynomial<K>& a, const Polynomial<K>& b) {
    return divrem(a, b).first;
}
template <class K>
Polynomial<K> operator%(const Polynomial<K>& a, const Polynomial<K>& b) {
    return divrem(a, b).second;
}

template <class K>
bool divides(const Polynomial<K>& d, const Polynomial<K>& a) {
    if (d.is_zero()) return a.is_zero();
    return divrem(a, d).second.is_zero();
}

template <class K>
Polynomial<K> exact_div(const Polynomial<K>& a, const Polynomial<K>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw InputError("exact_div: division not exact");
    return q;
}

template <class K>
Polynomial<K> coeff_exact_div(const Polynomial<K>& a, const Polynomial<K>& b) {
    return exact_div(a, b);
}

template <class K>
Polynomial<K> make_monic(const Polynomial<K>& p) {
    if (p.is_zero()) return p;
    K inv = coeff_from_int(p.leading(), 1) / p.leading();
    return p.scaled(inv);
}

template <class K>
bool is_monic(const Polynomial<K>& p) {
    return !p.is_zero() && p.leading() == coeff_from_int(p.leading(), 1);
}

template <class K>
Polynomial<K> poly_pow(const Polynomial<K>& p, unsigned long e) {
    if (p.is_zero()) {
        if (e == 0) throw InputError("poly_pow: 0^0");
        return p;
    }
    Polynomial<K> r(coeff_from_int(p.leading(), 1)), b = p;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// Extended gcd over Q: returns monic g with s*a + t*b = g.
struct ExtGcdQ {
    PolyQ g, s, t;
};
inline ExtGcdQ ext_gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ r0 = a, r1 = b;
    PolyQ s0{Rat(1)}, s1, t0, t1{Rat(1)};
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        PolyQ s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rat inv = Rat(1) / r0.leading();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class K>
Polynomial<K> compose(const Polynomial<K>& p, const Polynomial<K>& inner) {
    Polynomial<K> acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * inner + Polynomial<K>(p[i]);
    return acc;
}

// --- pseudo-division (ring coefficients) ----------------------------------

// lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> pseudo_divrem(const Polynomial<K>& a,
                                                      const Polynomial<K>& b) {
    if (b.is_zero()) throw InputError("pseudo-division by zero");
    int da = a.degree(), db = b.degree();
    if (da < db) return {Polynomial<K>(), a};
    Polynomial<K> r = a, q;
    const K& lb = b.leading();
    int steps = da - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        Polynomial<K> term = Polynomial<K>::monomial(r.leading(), r.degree() - db);
        q = q.scaled(lb) + term;
        r = r.scaled(lb) - term * b;
        --steps;
    }
    // keep the scaling exponent exact even when leading terms cancel early
    for (; steps > 0; --steps) {
        q = q.scaled(lb);
        r = r.scaled(lb);
    }
    return {q, r};
}

// --- integer primitive form -------------------------------------------------

// p = unit * P with P a primitive integer polynomial (positive content, sign
// of leading coefficient preserved in P).
struct PrimitiveForm {
    Rat unit;       // rational content (may be negative only if p is zero: then 0)
    PolyZ p;        // primitive integer coefficients, ascending
};

inline PrimitiveForm primitive_form(const PolyQ& p) {
    if (p.is_zero()) return {Rat(0), {}};
    Int l = 1;
    for (const auto& c : p.coeffs()) l = int_lcm(l, den(c));
    Int g = 0;
    for (const auto& c : p.coeffs()) g = int_gcd(g, num(c) * (l / den(c)));
    PolyZ out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = num(p[i]) * (l / den(p[i])) / g;
    return {Rat(g, l), std::move(out)};
}

inline PolyQ poly_from_int_coeffs(const PolyZ& z) {
    std::vector<Rat> v(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) v[i] = Rat(z[i]);
    return PolyQ(std::move(v));
}

inline void trim_z(PolyZ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int deg_z(const PolyZ& p) { return static_cast<int>(p.size()) - 1; }

inline PolyZ primitive_part_z(PolyZ p) {
    trim_z(p);
    if (p.empty()) return p;
    Int g = 0;
    for (const auto& c : p) g = int_gcd(g, c);
    for (auto& c : p) c /= g;
    return p;
}

// lc(b)^(da-db+1) * a mod b over Z.
inline PolyZ prem_z(PolyZ a, const PolyZ& b) {
    int da = deg_z(a), db = deg_z(b);
    if (db < 0) throw InputError("prem_z: zero divisor");
    if (da < db) return a;
    const Int& lb = b.back();
    int steps = da - db + 1;
    while (deg_z(a) >= db && !a.empty()) {
        Int la = a.back();
        int shift = deg_z(a) - db;
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
        trim_z(a);
        --steps;
    }
    for (; steps > 0; --steps)
        for (auto& c : a) c *= lb;
    return a;
}

// --- gcd over Q (primitive PRS), monic output -------------------------------

inline PolyQ poly_gcd(const PolyQ& p, const PolyQ& q) {
    if (p.is_zero() && q.is_zero()) return PolyQ();
    if (p.is_zero()) return make_monic(q);
    if (q.is_zero()) return make_monic(p);
    PolyZ a = primitive_form(p).p;
    PolyZ b = primitive_form(q).p;
    if (deg_z(a) < deg_z(b)) std::swap(a, b);
    while (true) {
        if (deg_z(b) == 0) return PolyQ(Rat(1));
        PolyZ r = prem_z(a, b);
        if (r.empty()) break;
        a = std::move(b);
        b = primitive_part_z(std::move(r));
    }
    return make_monic(poly_from_int_coeffs(b));
}

inline PolyQ poly_lcm(const PolyQ& p, const PolyQ& q) {
    if (p.is_zero() || q.is_zero()) return PolyQ();
    PolyQ g = poly_gcd(p, q);
    return make_monic(exact_div(p * q, g));
}

// --- radical and squarefree structure ---------------------------------------

inline PolyQ radical(const PolyQ& p) {
    if (p.is_zero()) throw ZeroInputError("radical: zero polynomial");
    if (p.degree() == 0) return PolyQ(Rat(1));
    PolyQ g = poly_gcd(p, p.derivative());
    return make_monic(exact_div(make_monic(p), g));
}

// Yun decomposition: returns (g_i, i) with p = unit * prod g_i^i, the g_i
// monic, squarefree and pairwise coprime.
inline std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p) {
    if (p.is_zero()) throw ZeroInputError("squarefree decomposition of zero");
    std::vector<std::pair<PolyQ, int>> out;
    PolyQ f = make_monic(p);
    if (f.degree() == 0) return out;
    PolyQ fp = f.derivative();
    PolyQ a = poly_gcd(f, fp);
    PolyQ b = exact_div(f, a);
    PolyQ c = exact_div(fp, a);
    PolyQ d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        PolyQ g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(make_monic(g), i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

inline PolyQ squarefree_part(const PolyQ& p) { return radical(p); }

// --- resultant ---------------------------------------------------------------

// Fraction-free determinant; entries must live in an integral domain with
// exact division (coeff_exact_div). Destroys its argument.
template <class R>
R det_bareiss(std::vector<std::vector<R>>& m, const R& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    R prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (coeff_is_zero(m[k][k])) {
            std::size_t piv = k + 1;
            while (piv < n && coeff_is_zero(m[piv][k])) ++piv;
            if (piv == n) return one - one;  // singular
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = coeff_exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = one - one;
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Res(p, q) = lc(p)^deg(q) * prod q(beta) over the roots beta of p,
// computed as the Sylvester determinant over the coefficient ring.
template <class R>
R resultant_ring(const Polynomial<R>& p, const Polynomial<R>& q, const R& one) {
    if (p.is_zero() || q.is_zero()) throw ZeroInputError("resultant: zero polynomial");
    const int m = p.degree(), n = q.degree();
    if (m == 0 && n == 0) return one;
    const R zero = one - one;
    if (m == 0) {  // Res(c, q) = c^deg q
        R r = one;
        for (int i = 0; i < n; ++i) r = r * p[0];
        return r;
    }
    if (n == 0) {
        R r = one;
        for (int i = 0; i < m; ++i) r = r * q[0];
        return r;
    }
    std::vector<std::vector<R>> s(static_cast<std::size_t>(m + n),
                                  std::vector<R>(static_cast<std::size_t>(m + n), zero));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s[row][row + j] = p[static_cast<std::size_t>(m - j)];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) s[n + row][row + j] = q[static_cast<std::size_t>(n - j)];
    return det_bareiss(s, one);
}

inline Rat resultant(const PolyQ& p, const PolyQ& q) {
    if (p.is_zero() || q.is_zero()) throw ZeroInputError("resultant: zero polynomial");
    PrimitiveForm fp = primitive_form(p), fq = primitive_form(q);
    Polynomial<Int> pi{std::vector<Int>(fp.p.begin(), fp.p.end())};
    Polynomial<Int> qi{std::vector<Int>(fq.p.begin(), fq.p.end())};
    Int r = resultant_ring(pi, qi, Int(1));
    return rat_pow(fp.unit, q.degree()) * rat_pow(fq.unit, p.degree()) * Rat(r);
}

inline Rat discriminant(const PolyQ& p) {
    if (p.degree() < 1) throw InputError("discriminant needs degree >= 1");
    Rat r = resultant(p, p.derivative());
    Rat lead = p.leading();
    int d = p.degree();
    Rat sign = ((static_cast<long>(d) * (d - 1) / 2) % 2 == 0) ? Rat(1) : Rat(-1);
    return sign * r / lead;
}

// --- ordering and printing ---------------------------------------------------

// Degree first, then ascending-coefficient lexicographic.
inline int poly_compare(const PolyQ& a, const PolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = 0; i <= a.degree(); ++i) {
        if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)])
            return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)] ? -1 : 1;
    }
    return 0;
}

inline std::string poly_to_string(const PolyQ& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rat a = rat_abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) {
            os << rat_to_string(a);
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace lrslab

#endif
