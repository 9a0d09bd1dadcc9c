#ifndef LRSLAB_ROOTS_HPP
#define LRSLAB_ROOTS_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "lrslab/elfun.hpp"
#include "lrslab/interval.hpp"
#include "lrslab/poly.hpp"
#include "lrslab/sturm.hpp"

namespace lrslab {

inline constexpr unsigned kPrecisionCapBits = 8192;

// Certified disk around one root: the polynomial has exactly one root within
// distance `radius` of center (re, im).
struct RootBox {
    Rat re, im, radius;
    bool real = false;

    ComplexInterval box() const {
        return {RatInterval::around(re, radius), RatInterval::around(im, radius)};
    }
    // Enclosure of |root|.
    RatInterval modulus_interval(unsigned prec = 96) const {
        RatInterval n2 = box().norm2();
        Rat lo = n2.lo <= 0 ? Rat(0) : sqrt_lower(n2.lo, prec);
        return {lo, sqrt_upper(n2.hi, prec)};
    }
};

// All roots of a squarefree rational polynomial, each in its own certified
// disk, pairwise disjoint. Root order is fixed at first certification
// (by center, real part then imaginary part) and stable under refinement.
struct CertifiedRoots {
    PolyQ poly;  // squarefree, integer-primitive scaled copy
    std::vector<RootBox> roots;
};

namespace rootdetail {

struct QC {  // exact complex rational point
    Rat re, im;
};

inline QC qc_mul(const QC& a, const QC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline QC qc_sub(const QC& a, const QC& b) { return {a.re - b.re, a.im - b.im}; }
inline Rat qc_norm2(const QC& a) { return a.re * a.re + a.im * a.im; }
inline QC qc_div(const QC& a, const QC& b) {
    Rat n2 = qc_norm2(b);
    if (n2 == 0) throw Error("qc_div: division by zero");
    return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
}

// Exact Horner evaluation of p (rational coefficients) at a rational complex
// point.
inline QC eval_qc(const PolyQ& p, const QC& z) {
    QC acc{Rat(0), Rat(0)};
    for (int i = p.degree(); i >= 0; --i) {
        acc = qc_mul(acc, z);
        acc.re += p[static_cast<std::size_t>(i)];
    }
    return acc;
}

// Double-precision Aberth-Ehrlich sweep; returns approximate roots. Purely a
// seeding heuristic: all correctness comes from the exact certification.
inline std::vector<std::complex<double>> aberth_seeds(const PolyQ& p, int rounds,
                                                      double angle_offset) {
    const int n = p.degree();
    // scale coefficients uniformly into double range
    unsigned maxbits = 1;
    for (int i = 0; i <= n; ++i) {
        const Rat& c = p[static_cast<std::size_t>(i)];
        maxbits = std::max(maxbits, bit_length(num(c)));
    }
    unsigned shift = maxbits > 500 ? maxbits - 500 : 0;
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] =
            rat_to_double(p[static_cast<std::size_t>(i)] / Rat(Int(1) << shift));

    double maxratio = 0;
    for (int i = 0; i < n; ++i)
        maxratio = std::max(maxratio, std::abs(c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(n)]));
    double r0 = 1.0 + maxratio;
    if (!std::isfinite(r0) || r0 > 1e100) r0 = 1e100;

    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    const double pi = 3.14159265358979323846;
    for (int k = 0; k < n; ++k) {
        double ang = 2 * pi * (static_cast<double>(k) / n) + angle_offset;
        double rad = r0 * (0.3 + 0.65 * (k + 1.0) / n);
        z[static_cast<std::size_t>(k)] = std::polar(rad, ang);
    }
    auto eval_fp = [&](const std::complex<double>& x, std::complex<double>& f,
                       std::complex<double>& df) {
        f = c[static_cast<std::size_t>(n)];
        df = 0.0;
        for (int i = n - 1; i >= 0; --i) {
            df = df * x + f;
            f = f * x + c[static_cast<std::size_t>(i)];
        }
    };
    for (int iter = 0; iter < rounds; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> f, df;
            eval_fp(z[static_cast<std::size_t>(i)], f, df);
            std::complex<double> ratio = (df == 0.0) ? std::complex<double>(1e-30) : f / df;
            std::complex<double> sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            std::complex<double> w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
            z[static_cast<std::size_t>(i)] -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[static_cast<std::size_t>(i)])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

}  // namespace rootdetail

// Certify all complex roots of a squarefree polynomial with disk radius at
// most 2^-prec. Deterministic; throws PrecisionExceededError past the cap.
inline CertifiedRoots certify_roots(const PolyQ& squarefree, unsigned prec) {
    using namespace rootdetail;
    if (squarefree.degree() < 1) throw InputError("certify_roots: degree < 1");
    PolyQ p = poly_from_int_coeffs(primitive_form(squarefree).p);
    const int n = p.degree();
    PolyQ dp = p.derivative();
    const Rat eps(Int(1), Int(1) << prec);
    const Rat n2 = Rat(n) * Rat(n);

    int attempt = 0;
    for (double angle : {0.41, 1.17, 2.03, 2.89}) {
        ++attempt;
        auto seeds = aberth_seeds(p, 400 * attempt, angle);
        unsigned wp = std::max(prec + 64, 128u);
        bool ok = true;
        std::vector<RootBox> boxes;
        for (int escalation = 0; escalation < 8 && wp <= kPrecisionCapBits; ++escalation, wp *= 2) {
            boxes.clear();
            ok = true;
            for (const auto& s : seeds) {
                double sr = std::isfinite(s.real()) ? s.real() : 0.0;
                double si = std::isfinite(s.imag()) ? s.imag() : 0.0;
                QC z{round_to_dyadic(Rat(sr), wp), round_to_dyadic(Rat(si), wp)};
                Rat bound2;
                bool converged = false;
                for (int it = 0; it < 100; ++it) {
                    QC f = eval_qc(p, z), df = eval_qc(dp, z);
                    Rat fd2 = qc_norm2(df);
                    if (fd2 == 0) break;  // retry at higher precision
                    QC delta = qc_div(f, df);
                    bound2 = n2 * qc_norm2(delta);
                    if (bound2 * 4 <= eps * eps) {
                        converged = true;
                        break;
                    }
                    z = {round_to_dyadic(z.re - delta.re, wp), round_to_dyadic(z.im - delta.im, wp)};
                }
                if (!converged) {
                    ok = false;
                    break;
                }
                Rat radius = sqrt_upper(bound2, prec + 8);
                boxes.push_back(RootBox{z.re, z.im, radius, false});
            }
            if (!ok) continue;
            // pairwise disjoint disks => exactly one root per disk
            for (std::size_t i = 0; ok && i < boxes.size(); ++i)
                for (std::size_t j = i + 1; ok && j < boxes.size(); ++j) {
                    Rat dx = boxes[i].re - boxes[j].re, dy = boxes[i].im - boxes[j].im;
                    Rat rr = boxes[i].radius + boxes[j].radius;
                    if (dx * dx + dy * dy <= rr * rr) ok = false;
                }
            if (ok) break;
        }
        if (!ok) continue;

        // realness flags via exact real-root counting
        SturmChain chain(p);
        for (auto& b : boxes) {
            if (b.im != 0 && rat_abs(b.im) > b.radius) continue;
            // the count is over a half-open interval; test the left endpoint too
            if (chain.poly()(b.re - b.radius) == 0 ||
                chain.count_in(b.re - b.radius, b.re + b.radius) >= 1)
                b.real = true;
        }
        std::sort(boxes.begin(), boxes.end(), [](const RootBox& a, const RootBox& b) {
            if (a.re != b.re) return a.re < b.re;
            return a.im < b.im;
        });
        CertifiedRoots out;
        out.poly = p;
        out.roots = std::move(boxes);
        return out;
    }
    throw PrecisionExceededError("certify_roots: could not certify within the precision cap");
}

// Shrink one certified disk to radius <= 2^-prec (Newton from the center).
inline RootBox refine_root_box(const CertifiedRoots& cr, const RootBox& b, unsigned prec) {
    using namespace rootdetail;
    const Rat eps(Int(1), Int(1) << prec);
    if (b.radius <= eps) return b;
    const int n = cr.poly.degree();
    const Rat n2 = Rat(n) * Rat(n);
    PolyQ dp = cr.poly.derivative();
    unsigned wp = std::max(prec + 64, 128u);
    for (; wp <= kPrecisionCapBits; wp *= 2) {
        QC z{b.re, b.im};
        Rat bound2;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            QC f = eval_qc(cr.poly, z), df = eval_qc(dp, z);
            Rat fd2 = qc_norm2(df);
            if (fd2 == 0) break;
            QC delta = qc_div(f, df);
            bound2 = n2 * qc_norm2(delta);
            if (bound2 * 4 <= eps * eps) {
                converged = true;
                break;
            }
            z = {round_to_dyadic(z.re - delta.re, wp), round_to_dyadic(z.im - delta.im, wp)};
        }
        if (!converged) continue;
        Rat radius = sqrt_upper(bound2, prec + 8);
        // the refined disk must stay inside the certified one (same root)
        Rat dx = z.re - b.re, dy = z.im - b.im;
        Rat slack = b.radius + radius;
        if (dx * dx + dy * dy > slack * slack) continue;
        return RootBox{z.re, z.im, radius, b.real};
    }
    throw PrecisionExceededError("refine_root_box: precision cap exceeded");
}

// log of the Mahler measure of the primitive integer form of p (squarefree),
// as a certified enclosure with width <= 2^-prec.
inline RatInterval log_mahler_interval(const PolyQ& p, unsigned prec) {
    if (p.is_zero()) throw ZeroInputError("mahler measure of zero");
    PrimitiveForm pf = primitive_form(p);
    Rat lead = rat_abs(Rat(pf.p.back()));
    if (p.degree() == 0) return log_interval_exact(lead, prec + 2);
    unsigned root_prec = prec + 8;
    for (int rounds = 0; rounds < 10; ++rounds, root_prec *= 2) {
        CertifiedRoots cr = certify_roots(p, root_prec);
        RatInterval total = log_interval_exact(lead, prec + 6);
        for (const auto& b : cr.roots) {
            RatInterval m = b.modulus_interval(root_prec);
            if (m.hi <= 1) continue;
            Rat lo = rat_max(m.lo, Rat(1));
            total = total + log_interval({lo, m.hi}, prec + 6);
        }
        if (total.width() <= Rat(Int(1), Int(1) << prec)) return total;
    }
    throw PrecisionExceededError("log_mahler_interval: did not converge");
}

}  // namespace lrslab

#endif
