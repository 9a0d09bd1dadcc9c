#ifndef LRSLAB_STURM_HPP
#define LRSLAB_STURM_HPP

#include <optional>
#include <vector>

#include "lrslab/poly.hpp"

namespace lrslab {

// Sturm chain of a squarefree rational polynomial; exact real-root counting
// and isolation with rational interval endpoints.
class SturmChain {
  public:
    explicit SturmChain(const PolyQ& p) : p_(make_monic(p)) {
        if (p_.is_zero()) throw ZeroInputError("sturm chain of zero polynomial");
        chain_.push_back(p_);
        if (p_.degree() >= 1) {
            chain_.push_back(p_.derivative());
            while (chain_.back().degree() >= 1) {
                PolyQ r = chain_[chain_.size() - 2] % chain_.back();
                if (r.is_zero()) break;
                chain_.push_back(-r);
            }
        }
    }

    const PolyQ& poly() const { return p_; }

    int sign_changes_at(const Rat& x) const {
        int changes = 0, last = 0;
        for (const auto& f : chain_) {
            Rat v = f(x);
            int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
            if (s != 0) {
                if (last != 0 && s != last) ++changes;
                last = s;
            }
        }
        return changes;
    }

    int sign_changes_at_inf(int sign) const {  // sign = +1 or -1
        int changes = 0, last = 0;
        for (const auto& f : chain_) {
            int s = f.is_zero() ? 0 : (f.leading() > 0 ? 1 : -1);
            if (sign < 0 && f.degree() % 2 == 1) s = -s;
            if (s != 0) {
                if (last != 0 && s != last) ++changes;
                last = s;
            }
        }
        return changes;
    }

    // Number of real roots in (a, b].
    int count_in(const Rat& a, const Rat& b) const {
        return sign_changes_at(a) - sign_changes_at(b);
    }

    int count_all() const { return sign_changes_at_inf(-1) - sign_changes_at_inf(1); }

  private:
    PolyQ p_;
    std::vector<PolyQ> chain_;
};

// Cauchy bound: all roots have |x| <= 1 + max|c_i|/|c_n|.
inline Rat root_bound(const PolyQ& p) {
    if (p.is_zero()) throw ZeroInputError("root bound of zero polynomial");
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) m = rat_max(m, rat_abs(p[static_cast<std::size_t>(i)]));
    return Rat(1) + m / rat_abs(p.leading());
}

struct RealRootInterval {
    Rat lo, hi;      // root lies in (lo, hi], or lo == hi for an exact rational root
    bool exact() const { return lo == hi; }
    Rat mid() const { return (lo + hi) / 2; }
};

// Isolating intervals, ascending, for the distinct real roots of a squarefree
// polynomial.
inline std::vector<RealRootInterval> isolate_real_roots(const PolyQ& p) {
    SturmChain chain(p);
    std::vector<RealRootInterval> out;
    if (p.degree() < 1) return out;
    Rat bound = root_bound(p);
    struct Seg {
        Rat a, b;
        int na, nb;
    };
    std::vector<Seg> work;
    int total = chain.count_in(-bound, bound);
    if (total == 0) return out;
    work.push_back({-bound, bound, chain.sign_changes_at(-bound), chain.sign_changes_at(bound)});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        int n = s.na - s.nb;
        if (n == 0) continue;
        if (n == 1) {
            out.push_back({s.a, s.b});
            continue;
        }
        Rat m = (s.a + s.b) / 2;
        if (chain.poly()(m) == 0) {
            out.push_back({m, m});
            // shrink both halves until the midpoint root is excluded
            Rat eps = (s.b - s.a) / 4;
            while (true) {
                int left = chain.count_in(s.a, m - eps);
                int right = chain.count_in(m + eps, s.b);
                if (left + right == n - 1) {
                    if (left > 0)
                        work.push_back({s.a, m - eps, chain.sign_changes_at(s.a),
                                        chain.sign_changes_at(m - eps)});
                    if (right > 0)
                        work.push_back({m + eps, s.b, chain.sign_changes_at(m + eps),
                                        chain.sign_changes_at(s.b)});
                    break;
                }
                eps = eps / 2;
            }
        } else {
            int nm = chain.sign_changes_at(m);
            work.push_back({s.a, m, s.na, nm});
            work.push_back({m, s.b, nm, s.nb});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RealRootInterval& x, const RealRootInterval& y) { return x.lo < y.lo; });
    return out;
}

// Bisect an isolating interval until its width is at most eps.
inline RealRootInterval refine_root(const PolyQ& p, RealRootInterval iv, const Rat& eps) {
    if (iv.exact()) return iv;
    SturmChain chain(p);
    int inside = chain.count_in(iv.lo, iv.hi);
    while (iv.hi - iv.lo > eps) {
        Rat m = (iv.lo + iv.hi) / 2;
        if (chain.poly()(m) == 0) return {m, m};
        if (chain.count_in(iv.lo, m) == inside)
            iv.hi = m;
        else
            iv.lo = m;
    }
    return iv;
}

}  // namespace lrslab

#endif
