#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lrslab/factor.hpp"
#include "lrslab/roots.hpp"

using namespace lrslab;

namespace {

PolyQ x() { return PolyQ::x(); }

PolyQ random_irreducible(std::mt19937_64& rng, int deg) {
    while (true) {
        std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
        for (auto& v : c) v = Rat(static_cast<long>(rng() % 11) - 5);
        c.back() = Rat(static_cast<long>(rng() % 4) + 1);
        PolyQ p{std::move(c)};
        if (p.degree() == deg && is_irreducible_over_Q(p)) return p;
    }
}

// Independent irreducibility certificate for small degrees: any nontrivial
// rational factor corresponds to a subset of the certified complex roots
// whose monic product has rational coefficients with denominator dividing a
// power of the leading coefficient. We enumerate all proper subsets, round
// the interval coefficients to nearby rationals and verify by exact division.
bool brute_force_irreducible(const PolyQ& p) {
    REQUIRE(p.degree() >= 1);
    if (p.degree() == 1) return true;
    auto cr = certify_roots(p, 160);
    const int n = p.degree();
    Int lead = int_abs(num(primitive_form(p).unit * p.leading()));
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        // interval product of (x - z_i) over the subset
        std::vector<ComplexInterval> coeffs{ComplexInterval(Rat(1))};
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            ComplexInterval z = cr.roots[static_cast<std::size_t>(i)].box();
            std::vector<ComplexInterval> next(coeffs.size() + 1);
            for (std::size_t j = 0; j + 1 < next.size(); ++j) {
                next[j + 1] = next[j + 1] + coeffs[j];
                ComplexInterval prod = coeffs[j] * z;
                next[j] = next[j] - prod;
            }
            coeffs = std::move(next);
        }
        // candidate rational coefficients with denominator lead^(deg)
        std::vector<Rat> cand(coeffs.size());
        bool plausible = true;
        for (std::size_t j = 0; j + 1 < coeffs.size() && plausible; ++j) {
            if (!coeffs[j].im.contains_zero()) { plausible = false; break; }
            Rat mid = coeffs[j].re.mid();
            Rat scaled = mid * Rat(lead);
            Int nearest = num(scaled) / den(scaled);
            // round to nearest integer over denominator `lead`
            Rat r0(nearest, lead), r1(nearest + 1, lead), rm(nearest - 1, lead);
            Rat best = r0;
            for (const Rat& r : {r1, rm})
                if (rat_abs(r - mid) < rat_abs(best - mid)) best = r;
            if (!coeffs[j].re.contains(best)) { plausible = false; break; }
            cand[j] = best;
        }
        if (!plausible) continue;
        cand.back() = Rat(1);
        PolyQ candidate{std::move(cand)};
        if (candidate.degree() >= 1 && candidate.degree() < n && divides(candidate, p))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("factor_over_Q classic examples") {
    SECTION("x^4 - 1") {
        FactorList f = factor_over_Q(poly_pow(x(), 4) - PolyQ(Rat(1)));
        REQUIRE(f.factors.size() == 3);
        CHECK(f.factors[0].first == x() - PolyQ(Rat(1)));
        CHECK(f.factors[1].first == x() + PolyQ(Rat(1)));
        CHECK(f.factors[2].first == x() * x() + PolyQ(Rat(1)));
        for (const auto& [g, e] : f.factors) CHECK(e == 1);
        CHECK(f.unit == 1);
        CHECK(f.reconstruct() == poly_pow(x(), 4) - PolyQ(Rat(1)));
    }
    SECTION("x^2+x+1 irreducible") {
        FactorList f = factor_over_Q(x() * x() + x() + PolyQ(Rat(1)));
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].second == 1);
    }
    SECTION("x^6 - (x+1)^6") {
        PolyQ p = poly_pow(x(), 6) - poly_pow(x() + PolyQ(Rat(1)), 6);
        FactorList f = factor_over_Q(p);
        // -(2x+1)(x^2+x+1)(3x^2+3x+1): monic factors of degrees 1, 2, 2
        REQUIRE(f.factors.size() == 3);
        CHECK(f.factors[0].first.degree() == 1);
        CHECK(f.factors[1].first.degree() == 2);
        CHECK(f.factors[2].first.degree() == 2);
        CHECK(f.unit == Rat(-6));
        CHECK(f.reconstruct() == p);
        for (const auto& [g, e] : f.factors) CHECK(brute_force_irreducible(g));
    }
    SECTION("multiplicities") {
        PolyQ p = poly_pow(x() - PolyQ(Rat(1)), 3) * poly_pow(x() * x() + PolyQ(Rat(1)), 2);
        FactorList f = factor_over_Q(p.scaled(Rat(7, 3)));
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0].second == 3);
        CHECK(f.factors[1].second == 2);
        CHECK(f.unit == Rat(7, 3));
        CHECK(f.reconstruct() == p.scaled(Rat(7, 3)));
    }
    SECTION("zero rejected") { CHECK_THROWS_AS(factor_over_Q(PolyQ()), ZeroInputError); }
    SECTION("x factor peeling") {
        PolyQ p = x() * x() * (x() + PolyQ(Rat(2)));
        FactorList f = factor_over_Q(p);
        REQUIRE(f.factors.size() == 2);
        CHECK(f.reconstruct() == p);
    }
}

TEST_CASE("factorization of x^n - (x+1)^n family members") {
    for (int n : {7, 11, 13}) {
        // degree n-1, irreducible (roots generate the n-th cyclotomic field)
        PolyQ p = poly_pow(x(), static_cast<unsigned long>(n)) -
                  poly_pow(x() + PolyQ(Rat(1)), static_cast<unsigned long>(n));
        FactorList f = factor_over_Q(p);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].first.degree() == n - 1);
    }
    // composite n splits: n = 12 gives factor degrees phi(d), d | 12, d > 1
    PolyQ p12 = poly_pow(x(), 12) - poly_pow(x() + PolyQ(Rat(1)), 12);
    FactorList f12 = factor_over_Q(p12);
    std::vector<int> degs;
    for (const auto& [g, e] : f12.factors) {
        CHECK(e == 1);
        degs.push_back(g.degree());
    }
    std::sort(degs.begin(), degs.end());
    // one factor per divisor d | 12, d > 1, of degree phi(d)
    CHECK(degs == std::vector<int>{1, 2, 2, 2, 4});
}

TEST_CASE("factor_over_Q random reconstruction and irreducibility certificates") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 40; ++iter) {
        // build a product of known irreducibles
        PolyQ p{Rat(static_cast<long>(rng() % 5) + 1)};
        int nf = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < nf; ++i) {
            int d = 1 + static_cast<int>(rng() % 3);
            int e = 1 + static_cast<int>(rng() % 2);
            p = p * poly_pow(random_irreducible(rng, d), static_cast<unsigned long>(e));
        }
        FactorList f = factor_over_Q(p);
        CHECK(f.reconstruct() == p);
        for (const auto& [g, e] : f.factors) {
            CHECK(is_monic(g));
            if (g.degree() <= 6) CHECK(brute_force_irreducible(g));
        }
        // pairwise coprime
        for (std::size_t i = 0; i < f.factors.size(); ++i)
            for (std::size_t j = i + 1; j < f.factors.size(); ++j)
                CHECK(poly_gcd(f.factors[i].first, f.factors[j].first).degree() == 0);
    }
}

TEST_CASE("deterministic factor ordering") {
    PolyQ p = (x() - PolyQ(Rat(3))) * (x() - PolyQ(Rat(1))) * (x() + PolyQ(Rat(2)));
    FactorList a = factor_over_Q(p);
    FactorList b = factor_over_Q(p);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) CHECK(a.factors[i].first == b.factors[i].first);
    for (std::size_t i = 0; i + 1 < a.factors.size(); ++i)
        CHECK(poly_compare(a.factors[i].first, a.factors[i + 1].first) < 0);
}
