#ifndef LRSLAB_FACTOR_HPP
#define LRSLAB_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lrslab/poly.hpp"

namespace lrslab {

// ---------------------------------------------------------------------------
// Arithmetic mod a word-sized prime
// ---------------------------------------------------------------------------
namespace modp {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Dense polynomial over F_p, ascending coefficients, trimmed.
using Fp = std::vector<std::uint64_t>;

inline void trim(Fp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const Fp& f) { return static_cast<int>(f.size()) - 1; }

inline Fp add(const Fp& a, const Fp& b, std::uint64_t p) {
    Fp r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

inline Fp sub(const Fp& a, const Fp& b, std::uint64_t p) {
    Fp r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    trim(r);
    return r;
}

inline Fp mul(const Fp& a, const Fp& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
    trim(r);
    return r;
}

inline Fp scale(Fp a, std::uint64_t c, std::uint64_t p) {
    for (auto& x : a) x = mulmod(x, c, p);
    trim(a);
    return a;
}

inline std::pair<Fp, Fp> divrem(const Fp& a, const Fp& b, std::uint64_t p) {
    if (b.empty()) throw InputError("mod-p division by zero");
    if (deg(a) < deg(b)) return {{}, a};
    Fp r = a, q(static_cast<std::size_t>(deg(a) - deg(b) + 1), 0);
    std::uint64_t inv = invmod(b.back(), p);
    for (int i = deg(a); i >= deg(b); --i) {
        std::uint64_t c = mulmod(r[static_cast<std::size_t>(i)], inv, p);
        if (c == 0) continue;
        q[static_cast<std::size_t>(i - deg(b))] = c;
        for (int j = 0; j <= deg(b); ++j) {
            auto& slot = r[static_cast<std::size_t>(i - deg(b) + j)];
            slot = (slot + p - mulmod(c, b[static_cast<std::size_t>(j)], p)) % p;
        }
    }
    trim(r);
    return {q, r};
}

inline Fp rem(const Fp& a, const Fp& b, std::uint64_t p) { return divrem(a, b, p).second; }

inline Fp gcd(Fp a, Fp b, std::uint64_t p) {
    while (!b.empty()) {
        Fp r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) a = scale(a, invmod(a.back(), p), p);
    return a;
}

inline Fp monic(Fp f, std::uint64_t p) {
    if (!f.empty() && f.back() != 1) f = scale(f, invmod(f.back(), p), p);
    return f;
}

inline Fp derivative(const Fp& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    Fp r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mulmod(f[i], i % p, p);
    trim(r);
    return r;
}

inline Fp powmod_poly(Fp base, Int e, const Fp& f, std::uint64_t p) {
    Fp r{1};
    base = rem(base, f, p);
    while (e > 0) {
        if ((e & 1) != 0) r = rem(mul(r, base, p), f, p);
        base = rem(mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

// Distinct-degree decomposition of a squarefree monic f: list of (product, d).
inline std::vector<std::pair<Fp, int>> distinct_degree(const Fp& f0, std::uint64_t p) {
    std::vector<std::pair<Fp, int>> out;
    Fp f = f0;
    Fp h{0, 1};  // x
    int d = 0;
    while (deg(f) > 0) {
        ++d;
        if (2 * d > deg(f)) {
            out.emplace_back(f, deg(f));
            break;
        }
        h = powmod_poly(h, Int(p), f, p);
        Fp hx = sub(h, Fp{0, 1}, p);
        Fp g = gcd(f, hx, p);
        if (deg(g) > 0) {
            out.emplace_back(g, d);
            f = divrem(f, g, p).first;
            h = rem(h, f, p);
        }
    }
    return out;
}

// Cantor-Zassenhaus split of a product of irreducibles of equal degree d.
inline void equal_degree(const Fp& f, int d, std::uint64_t p, std::mt19937_64& rng,
                         std::vector<Fp>& out) {
    if (deg(f) == d) {
        out.push_back(monic(f, p));
        return;
    }
    Int exponent = (boost::multiprecision::pow(Int(p), static_cast<unsigned>(d)) - 1) / 2;
    while (true) {
        Fp t(static_cast<std::size_t>(deg(f)), 0);
        for (auto& c : t) c = rng() % p;
        trim(t);
        if (deg(t) < 1) continue;
        Fp g = gcd(f, t, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            equal_degree(g, d, p, rng, out);
            equal_degree(divrem(f, g, p).first, d, p, rng, out);
            return;
        }
        Fp h = powmod_poly(t, exponent, f, p);
        h = sub(h, Fp{1}, p);
        g = gcd(f, h, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            equal_degree(g, d, p, rng, out);
            equal_degree(divrem(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

// Full factorization of a squarefree monic f over F_p; deterministic.
inline std::vector<Fp> factor_squarefree(const Fp& f, std::uint64_t p) {
    std::vector<Fp> out;
    std::mt19937_64 rng(0x5DEECE66Dull ^ p);
    for (const auto& [part, d] : distinct_degree(f, p)) equal_degree(part, d, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace modp

// ---------------------------------------------------------------------------
// Arithmetic mod p^l (over cpp_int), used by Hensel lifting
// ---------------------------------------------------------------------------
namespace modm {

using Pm = std::vector<Int>;

inline void trim(Pm& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const Pm& f) { return static_cast<int>(f.size()) - 1; }

inline Int norm_mod(Int a, const Int& m) {
    a %= m;
    if (a < 0) a += m;
    return a;
}

inline Pm reduce(Pm f, const Int& m) {
    for (auto& c : f) c = norm_mod(c, m);
    trim(f);
    return f;
}

inline Pm add(const Pm& a, const Pm& b, const Int& m) {
    Pm r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm_mod(r[i] + b[i], m);
    trim(r);
    return r;
}

inline Pm sub(const Pm& a, const Pm& b, const Int& m) {
    Pm r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm_mod(r[i] - b[i], m);
    trim(r);
    return r;
}

inline Pm mul(const Pm& a, const Pm& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    Pm r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return reduce(std::move(r), m);
}

// Division by a monic divisor.
inline std::pair<Pm, Pm> divrem_monic(const Pm& a, const Pm& b, const Int& m) {
    if (b.empty() || b.back() != 1) throw InputError("divrem_monic: divisor not monic");
    if (deg(a) < deg(b)) return {{}, a};
    Pm r = a, q(static_cast<std::size_t>(deg(a) - deg(b) + 1), 0);
    for (int i = deg(a); i >= deg(b); --i) {
        Int c = r[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        q[static_cast<std::size_t>(i - deg(b))] = c;
        for (int j = 0; j <= deg(b); ++j) {
            auto& slot = r[static_cast<std::size_t>(i - deg(b) + j)];
            slot = norm_mod(slot - c * b[static_cast<std::size_t>(j)], m);
        }
    }
    trim(r);
    return {reduce(std::move(q), m), r};
}

}  // namespace modm

// ---------------------------------------------------------------------------
// Hensel lifting (quadratic, factor tree)
// ---------------------------------------------------------------------------
namespace detail {

struct HenselNode {
    modm::Pm g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod current modulus)
    int left = -1, right = -1;
    int leaf_index = -1;  // >= 0 for leaves
};

struct HenselTree {
    std::vector<HenselNode> nodes;
    std::vector<modm::Pm> leaves;
    int root = -1;
};

// Extended Euclid over F_p embedded into Pm form.
inline void bezout_mod_p(const modm::Pm& a, const modm::Pm& b, std::uint64_t p, modm::Pm& s,
                         modm::Pm& t) {
    auto to_fp = [&](const modm::Pm& f) {
        modp::Fp r(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            r[i] = static_cast<std::uint64_t>(f[i] % p);
        modp::trim(r);
        return r;
    };
    modp::Fp r0 = to_fp(a), r1 = to_fp(b);
    modp::Fp s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = modp::divrem(r0, r1, p);
        modp::Fp s2 = modp::sub(s0, modp::mul(q, s1, p), p);
        modp::Fp t2 = modp::sub(t0, modp::mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = s2;
        t0 = std::move(t1);
        t1 = t2;
    }
    if (modp::deg(r0) != 0) throw Error("hensel: factors not coprime mod p");
    std::uint64_t inv = modp::invmod(r0[0], p);
    s0 = modp::scale(s0, inv, p);
    t0 = modp::scale(t0, inv, p);
    auto from_fp = [](const modp::Fp& f) {
        modm::Pm r(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) r[i] = Int(f[i]);
        return r;
    };
    s = from_fp(s0);
    t = from_fp(t0);
}

inline int build_hensel_tree(HenselTree& tree, const std::vector<modp::Fp>& factors, int lo,
                             int hi, std::uint64_t p) {
    if (hi - lo == 1) {
        HenselNode node;
        node.leaf_index = lo;
        tree.nodes.push_back(node);
        return static_cast<int>(tree.nodes.size()) - 1;
    }
    int mid = (lo + hi) / 2;
    int l = build_hensel_tree(tree, factors, lo, mid, p);
    int r = build_hensel_tree(tree, factors, mid, hi, p);
    auto product = [&](int lo2, int hi2) {
        modp::Fp acc{1};
        for (int i = lo2; i < hi2; ++i) acc = modp::mul(acc, factors[static_cast<std::size_t>(i)], p);
        return acc;
    };
    HenselNode node;
    node.left = l;
    node.right = r;
    modp::Fp gp = product(lo, mid), hp = product(mid, hi);
    node.g.assign(gp.size(), 0);
    for (std::size_t i = 0; i < gp.size(); ++i) node.g[i] = Int(gp[i]);
    node.h.assign(hp.size(), 0);
    for (std::size_t i = 0; i < hp.size(); ++i) node.h[i] = Int(hp[i]);
    bezout_mod_p(node.g, node.h, p, node.s, node.t);
    tree.nodes.push_back(node);
    return static_cast<int>(tree.nodes.size()) - 1;
}

// One quadratic lifting step at a node: modulus m -> m^2.
inline void hensel_step(HenselNode& n, const modm::Pm& f, const Int& m2) {
    using namespace modm;
    Pm e = sub(f, mul(n.g, n.h, m2), m2);
    auto [q, r] = divrem_monic(mul(n.s, e, m2), n.h, m2);
    Pm gstar = add(n.g, add(mul(n.t, e, m2), mul(q, n.g, m2), m2), m2);
    Pm hstar = add(n.h, r, m2);
    Pm b = sub(add(mul(n.s, gstar, m2), mul(n.t, hstar, m2), m2), Pm{1}, m2);
    auto [c, d] = divrem_monic(mul(n.s, b, m2), hstar, m2);
    n.s = sub(n.s, d, m2);
    n.t = sub(n.t, add(mul(n.t, b, m2), mul(c, gstar, m2), m2), m2);
    n.g = std::move(gstar);
    n.h = std::move(hstar);
}

inline void lift_node(HenselTree& tree, int idx, const modm::Pm& f, const Int& m2) {
    HenselNode& n = tree.nodes[static_cast<std::size_t>(idx)];
    if (n.leaf_index >= 0) {
        tree.leaves[static_cast<std::size_t>(n.leaf_index)] = f;
        return;
    }
    hensel_step(n, f, m2);
    lift_node(tree, n.left, n.g, m2);
    lift_node(tree, n.right, n.h, m2);
}

// Lift the mod-p factorization of monic T to factors mod p^(2^j) >= target
// (all monic); returns the leaf factors and the final modulus.
inline std::pair<std::vector<modm::Pm>, Int> hensel_lift(const PolyZ& T,
                                                         const std::vector<modp::Fp>& factors,
                                                         std::uint64_t p, const Int& target) {
    HenselTree tree;
    tree.leaves.resize(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        modm::Pm leaf(factors[i].size());
        for (std::size_t j = 0; j < factors[i].size(); ++j) leaf[j] = Int(factors[i][j]);
        tree.leaves[i] = std::move(leaf);
    }
    tree.root = build_hensel_tree(tree, factors, 0, static_cast<int>(factors.size()), p);
    Int m(p);
    if (factors.size() == 1) {
        modm::Pm f(T.size());
        while (m < target) m *= m;
        for (std::size_t i = 0; i < T.size(); ++i) f[i] = modm::norm_mod(T[i], m);
        return {{f}, m};
    }
    while (m < target) {
        Int m2 = m * m;
        modm::Pm f(T.size());
        for (std::size_t i = 0; i < T.size(); ++i) f[i] = modm::norm_mod(T[i], m2);
        lift_node(tree, tree.root, f, m2);
        m = m2;
    }
    return {tree.leaves, m};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// factor_over_Q
// ---------------------------------------------------------------------------

// Complete factorization over Q: p = unit * prod factors[i]^mult[i] with the
// factors monic irreducible, ordered by degree then coefficient order.
struct FactorList {
    Rat unit;
    std::vector<std::pair<PolyQ, int>> factors;

    PolyQ reconstruct() const {
        PolyQ r{unit};
        for (const auto& [f, e] : factors) r = r * poly_pow(f, static_cast<unsigned long>(e));
        return r;
    }
};

namespace detail {

inline Int sym_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

// Subset-sum closure of the modular factor degrees.
inline std::vector<char> degree_sums(const std::vector<int>& degs, int total) {
    std::vector<char> feasible(static_cast<std::size_t>(total) + 1, 0);
    feasible[0] = 1;
    for (int d : degs)
        for (int s = total; s >= d; --s)
            if (feasible[static_cast<std::size_t>(s - d)]) feasible[static_cast<std::size_t>(s)] = 1;
    return feasible;
}

// Zassenhaus factorization of a primitive squarefree integer polynomial with
// positive leading coefficient. Returns primitive irreducible integer factors.
inline std::vector<PolyZ> zassenhaus_squarefree(PolyZ S) {
    std::vector<PolyZ> result;
    trim_z(S);
    while (!S.empty() && S.front() == 0) {  // peel x so that S(0) != 0 below
        S.erase(S.begin());
        result.push_back(PolyZ{0, 1});
    }
    int m = deg_z(S);
    if (m <= 0) return result;
    if (m == 1) {
        result.push_back(S);
        return result;
    }

    // Make monic: T(x) = L^(m-1) S(x/L) has the same factorization structure.
    const Int L = S.back();
    PolyZ T(S.size());
    {
        T[static_cast<std::size_t>(m)] = 1;
        Int pw = 1;  // L^(m-1-i)
        for (int i = m - 1; i >= 0; --i) {
            T[static_cast<std::size_t>(i)] = S[static_cast<std::size_t>(i)] * pw;
            pw *= L;
        }
    }
    if (T.back() != 1) throw Error("zassenhaus: monic transform failed");

    // Prime selection: first 5 odd primes where T stays squarefree; keep the
    // one with the fewest modular factors. Intersect feasible factor degrees.
    struct Candidate {
        std::uint64_t p;
        std::vector<modp::Fp> factors;
    };
    std::vector<Candidate> cands;
    std::vector<char> feasible(static_cast<std::size_t>(m) + 1, 1);
    std::uint64_t p = 1000003;
    while (cands.size() < 5) {
        while (!modp::is_prime_u64(p)) p += 2;
        modp::Fp Tp(T.size());
        for (std::size_t i = 0; i < T.size(); ++i)
            Tp[i] = static_cast<std::uint64_t>(modm::norm_mod(T[i], Int(p)));
        modp::trim(Tp);
        if (modp::deg(Tp) == m) {
            modp::Fp g = modp::gcd(Tp, modp::derivative(Tp, p), p);
            if (modp::deg(g) == 0) {
                Candidate c{p, modp::factor_squarefree(Tp, p)};
                std::vector<int> degs;
                for (const auto& f : c.factors) degs.push_back(modp::deg(f));
                auto fs = degree_sums(degs, m);
                for (std::size_t i = 0; i < feasible.size(); ++i) feasible[i] &= fs[i];
                cands.push_back(std::move(c));
            }
        }
        p += 2;
    }
    bool irreducible = true;
    for (int d = 1; d < m; ++d)
        if (feasible[static_cast<std::size_t>(d)]) irreducible = false;
    if (irreducible) {
        result.push_back(S);
        return result;
    }
    auto best = std::min_element(cands.begin(), cands.end(),
                                 [](const Candidate& a, const Candidate& b) {
                                     if (a.factors.size() != b.factors.size())
                                         return a.factors.size() < b.factors.size();
                                     return a.p < b.p;
                                 });

    // Landau-Mignotte style bound on factor coefficients of monic T.
    Int norm2 = 0;
    for (const auto& c : T) norm2 += c * c;
    Int bound = (isqrt(norm2) + 1) << static_cast<unsigned>(m + 1);
    auto [lifted, modulus] = hensel_lift(T, best->factors, best->p, 2 * bound + 1);

    // Recombination by subset cardinality with exact trial division.
    std::vector<int> active(lifted.size());
    for (std::size_t i = 0; i < active.size(); ++i) active[i] = static_cast<int>(i);
    PolyZ rem_poly = T;
    std::vector<PolyZ> monic_factors;

    auto subset_candidate = [&](const std::vector<int>& subset) {
        modm::Pm acc{1};
        for (int i : subset) acc = modm::mul(acc, lifted[static_cast<std::size_t>(i)], modulus);
        PolyZ cand(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) cand[i] = sym_mod(acc[i], modulus);
        return cand;
    };
    auto divides_z = [](const PolyZ& d, const PolyZ& a, PolyZ* quotient) {
        // exact division of integer polynomials, monic divisor
        PolyZ r = a, q(a.size() - d.size() + 1, 0);
        for (int i = deg_z(r); i >= deg_z(d); --i) {
            Int c = r[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            q[static_cast<std::size_t>(i - deg_z(d))] = c;
            for (int j = 0; j <= deg_z(d); ++j)
                r[static_cast<std::size_t>(i - deg_z(d) + j)] -= c * d[static_cast<std::size_t>(j)];
        }
        trim_z(r);
        if (!r.empty()) return false;
        if (quotient) *quotient = q;
        return true;
    };

    std::size_t card = 1;
    while (2 * card <= active.size()) {
        // lexicographic combinations of `card` indices into `active`
        std::vector<std::size_t> idx(card);
        for (std::size_t i = 0; i < card; ++i) idx[i] = i;
        bool advanced = true;
        while (advanced) {
            int degree_sum = 0;
            for (std::size_t i : idx) degree_sum += modm::deg(lifted[static_cast<std::size_t>(active[i])]);
            bool try_subset = degree_sum <= deg_z(rem_poly) &&
                              feasible[static_cast<std::size_t>(degree_sum)];
            if (try_subset) {
                std::vector<int> subset;
                for (std::size_t i : idx) subset.push_back(active[i]);
                PolyZ cand = subset_candidate(subset);
                PolyZ quotient;
                if (rem_poly.front() % cand.front() == 0 && divides_z(cand, rem_poly, &quotient)) {
                    monic_factors.push_back(cand);
                    rem_poly = quotient;
                    std::vector<int> next_active;
                    std::size_t k = 0;
                    for (std::size_t i = 0; i < active.size(); ++i) {
                        if (k < idx.size() && idx[k] == i)
                            ++k;
                        else
                            next_active.push_back(active[i]);
                    }
                    active = std::move(next_active);
                    if (2 * card > active.size()) break;
                    for (std::size_t i = 0; i < card; ++i) idx[i] = i;
                    continue;
                }
            }
            // next combination
            advanced = false;
            for (std::size_t i = card; i-- > 0;) {
                if (idx[i] + (card - i) < active.size()) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
        }
        ++card;
    }
    if (deg_z(rem_poly) > 0) monic_factors.push_back(rem_poly);

    // Map the monic factors of T back to primitive factors of S.
    for (const auto& G : monic_factors) {
        PolyZ g(G.size());
        Int pw = 1;  // L^i
        for (std::size_t i = 0; i < G.size(); ++i) {
            g[i] = G[i] * pw;
            pw *= L;
        }
        result.push_back(primitive_part_z(std::move(g)));
    }
    return result;
}

}  // namespace detail

inline FactorList factor_over_Q(const PolyQ& p) {
    if (p.is_zero()) throw ZeroInputError("factor_over_Q: zero polynomial");
    FactorList out;
    out.unit = Rat(1);
    if (p.degree() == 0) {
        out.unit = p[0];
        return out;
    }
    for (const auto& [sq, mult] : squarefree_decomposition(p)) {
        PolyZ prim = primitive_form(sq).p;
        if (prim.back() < 0)
            for (auto& c : prim) c = -c;
        for (const auto& f : detail::zassenhaus_squarefree(prim))
            out.factors.emplace_back(make_monic(poly_from_int_coeffs(f)), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_compare(a.first, b.first) < 0; });
    // the unit folds in every leading coefficient scaled away above
    PolyQ prod{Rat(1)};
    for (const auto& [f, e] : out.factors) prod = prod * poly_pow(f, static_cast<unsigned long>(e));
    PolyQ q = exact_div(p, prod);
    if (q.degree() != 0) throw Error("factor_over_Q: internal reconstruction failure");
    out.unit = q[0];
    return out;
}

inline bool is_irreducible_over_Q(const PolyQ& p) {
    if (p.degree() < 1) return false;
    FactorList f = factor_over_Q(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

// ---------------------------------------------------------------------------
// gcd-free basis
// ---------------------------------------------------------------------------

// Pairwise-coprime squarefree monic basis with input_i = unit_i * prod
// basis_j^exponents[i][j].
struct GcdFreeBasis {
    std::vector<PolyQ> basis;
    std::vector<std::vector<int>> exponents;  // one row per input
    std::vector<Rat> units;
};

inline GcdFreeBasis gcd_free_basis(const std::vector<PolyQ>& inputs) {
    for (const auto& f : inputs)
        if (f.is_zero()) throw ZeroInputError("gcd_free_basis: zero input");
    std::vector<PolyQ> work;
    for (const auto& f : inputs) {
        if (f.degree() == 0) continue;
        for (const auto& [g, e] : squarefree_decomposition(f)) {
            (void)e;
            work.push_back(g);
        }
    }
    // refine to pairwise coprime
    std::vector<PolyQ> basis;
    while (!work.empty()) {
        PolyQ cur = work.back();
        work.pop_back();
        if (cur.degree() < 1) continue;
        bool split = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            PolyQ g = poly_gcd(cur, basis[j]);
            if (g.degree() > 0) {
                if (g != basis[j]) {
                    PolyQ rest = exact_div(basis[j], g);
                    basis[j] = g;
                    if (rest.degree() > 0) work.push_back(make_monic(rest));
                }
                PolyQ cur_rest = exact_div(cur, g);
                if (cur_rest.degree() > 0) work.push_back(make_monic(cur_rest));
                split = true;
                break;
            }
        }
        if (!split) basis.push_back(make_monic(cur));
    }
    std::sort(basis.begin(), basis.end(),
              [](const PolyQ& a, const PolyQ& b) { return poly_compare(a, b) < 0; });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

    GcdFreeBasis out;
    out.basis = std::move(basis);
    for (const auto& f : inputs) {
        std::vector<int> row(out.basis.size(), 0);
        PolyQ rest = f;
        for (std::size_t j = 0; j < out.basis.size(); ++j) {
            while (rest.degree() >= out.basis[j].degree() && divides(out.basis[j], rest)) {
                rest = exact_div(rest, out.basis[j]);
                ++row[j];
            }
        }
        if (rest.degree() != 0) throw Error("gcd_free_basis: refinement incomplete");
        out.exponents.push_back(std::move(row));
        out.units.push_back(rest[0]);
    }
    return out;
}

}  // namespace lrslab

#endif
