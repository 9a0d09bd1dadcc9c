#ifndef LRSLAB_ALGNUM_HPP
#define LRSLAB_ALGNUM_HPP

#include "lrslab/elfun.hpp"
#include "lrslab/numfield.hpp"

namespace lrslab {

// Exact multiplicative order if u is a root of unity, nullopt otherwise.
// A root of unity is detected by its minimal polynomial being cyclotomic.
inline std::optional<long> is_root_of_unity(const NFElem& u) {
    if (u.is_zero()) throw ZeroInputError("is_root_of_unity: zero input");
    PolyQ m = min_poly_of(u);
    for (int i = 0; i <= m.degree(); ++i)
        if (den(m[static_cast<std::size_t>(i)]) != 1) return std::nullopt;  // not an algebraic integer
    if (rat_abs(m[0]) != 1) return std::nullopt;
    long d = m.degree();
    for (long n : orders_with_phi_equal(d))
        if (m == cyclotomic(n)) return n;
    return std::nullopt;
}

// Absolute logarithmic Weil height with a certified error bound.
struct HeightValue {
    double value = 0;
    double error_bound = 0;
    bool exact = false;
};

inline HeightValue weil_height(const NFElem& u, unsigned prec = 34) {
    if (u.is_zero()) return {0.0, 0.0, true};
    if (u.is_rational()) {
        Rat x = u.as_rat();
        Int a = int_abs(num(x)) > den(x) ? int_abs(num(x)) : den(x);
        if (a == 1) return {0.0, 0.0, true};
        RatInterval iv = log_interval_exact(Rat(a), prec + 4);
        return {rat_to_double(iv.mid()), rat_to_double(iv.width()) + 1e-15, true};
    }
    if (is_root_of_unity(u)) return {0.0, 0.0, true};
    PolyQ m = min_poly_of(u);
    RatInterval lm = log_mahler_interval(m, prec);
    RatInterval h = lm * Rat(1, m.degree());
    return {rat_to_double(h.mid()), rat_to_double(h.width()) + 1e-15, false};
}

enum class Ordering { Less, Equal, Greater };

namespace algdetail {

// Polynomial whose roots include every value u(z)u(w) - v(z)v(w) over pairs
// (z, w) of roots of the field polynomial; used to decide |u| = |v| exactly.
inline PolyQ modulus_difference_poly(const PolyQ& field_poly, const PolyQ& urep,
                                     const PolyQ& vrep) {
    using R = Polynomial<PolyQ>;  // polynomials in z with Q[x] coefficients
    const PolyQ one_q{Rat(1)};
    const R one_r{one_q};

    // u(z), v(z) lifted into R (z-polynomials with constant x-coefficients)
    auto lift_z = [](const PolyQ& p) {
        std::vector<PolyQ> c(static_cast<std::size_t>(p.degree()) + 1);
        for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = PolyQ(p[static_cast<std::size_t>(i)]);
        return R(std::move(c));
    };
    R uz = lift_z(urep), vz = lift_z(vrep);

    // x - (u(z)u(w) - v(z)v(w)) as a polynomial in w over R
    int dw = std::max(urep.degree(), vrep.degree());
    std::vector<R> wcoeffs(static_cast<std::size_t>(dw) + 1, R());
    for (int j = 0; j <= dw; ++j) {
        R c;
        if (j <= urep.degree()) c = c + uz.scaled(PolyQ(urep[static_cast<std::size_t>(j)]));
        if (j <= vrep.degree()) c = c - vz.scaled(PolyQ(vrep[static_cast<std::size_t>(j)]));
        wcoeffs[static_cast<std::size_t>(j)] = -c;
    }
    wcoeffs[0] = wcoeffs[0] + R(PolyQ::x());
    Polynomial<R> xg{std::move(wcoeffs)};

    // p(w) with constant coefficients
    std::vector<R> pw(static_cast<std::size_t>(field_poly.degree()) + 1);
    for (int i = 0; i <= field_poly.degree(); ++i)
        pw[static_cast<std::size_t>(i)] = R(PolyQ(field_poly[static_cast<std::size_t>(i)]));
    Polynomial<R> pw_poly{std::move(pw)};

    R inner = resultant_ring(pw_poly, xg, one_r);  // in z, coefficients in Q[x]

    // eliminate z against the field polynomial
    std::vector<PolyQ> pz(static_cast<std::size_t>(field_poly.degree()) + 1);
    for (int i = 0; i <= field_poly.degree(); ++i)
        pz[static_cast<std::size_t>(i)] = PolyQ(field_poly[static_cast<std::size_t>(i)]);
    Polynomial<PolyQ> pz_poly{std::move(pz)};
    return resultant_ring(pz_poly, inner, one_q);
}

// Lower bound on the modulus of the nonzero roots of W.
inline Rat nonzero_root_floor(const PolyQ& W) {
    int mu = 0;
    while (mu <= W.degree() && W[static_cast<std::size_t>(mu)] == 0) ++mu;
    if (mu > W.degree()) throw Error("nonzero_root_floor: zero polynomial");
    Rat c0 = rat_abs(W[static_cast<std::size_t>(mu)]);
    Rat cmax(0);
    for (int i = mu + 1; i <= W.degree(); ++i)
        cmax = rat_max(cmax, rat_abs(W[static_cast<std::size_t>(i)]));
    if (cmax == 0) return Rat(1);  // W = c x^mu: no nonzero roots
    return c0 / (c0 + cmax);
}

}  // namespace algdetail

// Certified comparison of |u| and |v| under one complex embedding. Equality
// is decided exactly: all candidate values of |u|^2 - |v|^2 are roots of a
// composed resultant, whose nonzero roots are bounded away from zero.
inline Ordering modulus_compare(const NFElem& u, const NFElem& v, int embedding_index) {
    if (!u.field()->same(*v.field())) throw InputError("modulus_compare: mixed fields");
    if (u.rep() == v.rep()) return Ordering::Equal;
    if (u.is_rational() && v.is_rational()) {
        Rat a = rat_abs(u.as_rat()), b = rat_abs(v.as_rat());
        if (a == b) return Ordering::Equal;
        return a < b ? Ordering::Less : Ordering::Greater;
    }
    PolyQ sep;  // built lazily
    bool have_sep = false;
    Rat floor_bound;
    for (unsigned prec = 128; prec <= kPrecisionCapBits; prec *= 2) {
        ComplexInterval ub = u.eval_box_at(embedding_index, prec);
        ComplexInterval vb = v.eval_box_at(embedding_index, prec);
        RatInterval diff = ub.norm2() - vb.norm2();
        if (diff.is_positive()) return Ordering::Greater;
        if (diff.is_negative()) return Ordering::Less;
        if (!have_sep && prec >= 256) {
            sep = algdetail::modulus_difference_poly(u.field()->minpoly(), u.rep(), v.rep());
            floor_bound = sep[0] == 0 ? algdetail::nonzero_root_floor(sep) : Rat(0);
            have_sep = true;
        }
        if (have_sep) {
            if (sep[0] != 0) continue;  // zero is not a root: keep refining, a sign must emerge
            if (rat_max(rat_abs(diff.lo), rat_abs(diff.hi)) < floor_bound) return Ordering::Equal;
        }
    }
    throw PrecisionExceededError("modulus_compare: precision cap exceeded");
}

inline Ordering modulus_compare(const NFElem& u, const NFElem& v) {
    return modulus_compare(u, v, u.field()->root_index());
}

// Exact count of roots of unity of degree at most D over Q.
inline Int count_rou_degree(long D) {
    if (D < 1) throw InputError("count_rou_degree: D >= 1 required");
    Int total = 0;
    for (long m : orders_with_phi_at_most(D)) total += euler_phi(m);
    return total;
}

}  // namespace lrslab

#endif
