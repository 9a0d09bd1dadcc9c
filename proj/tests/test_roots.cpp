#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "lrslab/elfun.hpp"
#include "lrslab/roots.hpp"

using namespace lrslab;

namespace {
double iv_mid(const RatInterval& iv) { return rat_to_double(iv.mid()); }
}  // namespace

TEST_CASE("certified log / pi / atan enclosures") {
    RatInterval l2 = ln2_interval(64);
    CHECK(rat_to_double(l2.lo) <= 0.6931471805599453);
    CHECK(rat_to_double(l2.hi) >= 0.6931471805599453);
    CHECK(l2.width() < Rat(Int(1), Int(1) << 60));

    RatInterval pi = pi_interval(64);
    CHECK(rat_to_double(pi.lo) <= 3.141592653589793);
    CHECK(rat_to_double(pi.hi) >= 3.141592653589793);

    RatInterval l10 = log_interval_exact(Rat(10), 64);
    CHECK(iv_mid(l10) == Catch::Approx(std::log(10.0)).epsilon(1e-12));
    RatInterval lhalf = log_interval_exact(Rat(1, 2), 64);
    CHECK(iv_mid(lhalf) == Catch::Approx(-std::log(2.0)).epsilon(1e-12));

    for (double v : {0.3, 0.9, 1.7, 5.0, 100.0}) {
        RatInterval at = atan_interval_exact(Rat(v), 60);
        CHECK(rat_to_double(at.lo) <= std::atan(v));
        CHECK(rat_to_double(at.hi) >= std::atan(v));
        CHECK(at.width() < Rat(Int(1), Int(1) << 50));
    }
}

TEST_CASE("arg and sincos enclosures") {
    ComplexInterval z{RatInterval::around(Rat(1), Rat(1, 1000000)),
                      RatInterval::around(Rat(1), Rat(1, 1000000))};
    RatInterval a = arg_interval(z, 60);
    CHECK(iv_mid(a) == Catch::Approx(std::atan2(1.0, 1.0)).margin(1e-5));

    ComplexInterval w{RatInterval::around(Rat(-2), Rat(1, 1000000)),
                      RatInterval::around(Rat(1), Rat(1, 1000000))};
    RatInterval aw = arg_interval(w, 60);
    CHECK(iv_mid(aw) == Catch::Approx(std::atan2(1.0, -2.0)).margin(1e-5));

    RatInterval s = sin_interval(RatInterval(Rat(1, 2)), 60);
    CHECK(iv_mid(s) == Catch::Approx(std::sin(0.5)).epsilon(1e-12));
    RatInterval c = cos_interval(RatInterval(Rat(3)), 60);
    CHECK(iv_mid(c) == Catch::Approx(std::cos(3.0)).epsilon(1e-10));
}

TEST_CASE("certified roots of small polynomials") {
    PolyQ x = PolyQ::x();
    SECTION("x^2 - 2") {
        auto cr = certify_roots(x * x - PolyQ(Rat(2)), 80);
        REQUIRE(cr.roots.size() == 2);
        CHECK(cr.roots[0].real);
        CHECK(cr.roots[1].real);
        CHECK(rat_to_double(cr.roots[1].re) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(cr.roots[0].radius < Rat(Int(1), Int(1) << 80));
    }
    SECTION("x^2 + 1") {
        auto cr = certify_roots(x * x + PolyQ(Rat(1)), 80);
        REQUIRE(cr.roots.size() == 2);
        CHECK_FALSE(cr.roots[0].real);
        auto m = cr.roots[0].modulus_interval();
        CHECK(m.contains(Rat(1)));
    }
    SECTION("degree 1") {
        auto cr = certify_roots(x.scaled(Rat(3)) - PolyQ(Rat(2)), 60);
        REQUIRE(cr.roots.size() == 1);
        Rat d = cr.roots[0].re - Rat(2, 3);
        CHECK(rat_abs(d) <= cr.roots[0].radius);
        CHECK(cr.roots[0].real);
    }
}

TEST_CASE("certified roots: random products of linear factors") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 25; ++iter) {
        // distinct small rational roots
        std::vector<Rat> roots;
        int k = 2 + static_cast<int>(rng() % 5);
        while (static_cast<int>(roots.size()) < k) {
            Rat r(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1);
            bool dup = false;
            for (const auto& s : roots) dup |= (s == r);
            if (!dup) roots.push_back(r);
        }
        PolyQ p{Rat(1)};
        for (const auto& r : roots) p = p * (PolyQ::x() - PolyQ(r));
        auto cr = certify_roots(p, 70);
        REQUIRE(cr.roots.size() == roots.size());
        std::sort(roots.begin(), roots.end());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(cr.roots[i].real);
            Rat d = cr.roots[i].re - roots[i];
            CHECK(d * d <= cr.roots[i].radius * cr.roots[i].radius);
        }
    }
}

TEST_CASE("certified roots handle moderately large degree") {
    // x^24 - (x+1)^24 has degree 23; all roots lie on the line Re = -1/2
    PolyQ x = PolyQ::x();
    PolyQ f = poly_pow(x, 24) - poly_pow(x + PolyQ(Rat(1)), 24);
    PolyQ sf = radical(f);
    auto cr = certify_roots(sf, 64);
    CHECK(cr.roots.size() == static_cast<std::size_t>(sf.degree()));
    for (const auto& b : cr.roots) {
        CHECK(rat_to_double(b.re) == Catch::Approx(-0.5).margin(1e-9));
    }
}

TEST_CASE("refine_root_box shrinks and stays consistent") {
    PolyQ x = PolyQ::x();
    auto cr = certify_roots(x * x - x - PolyQ(Rat(1)), 32);
    for (const auto& b : cr.roots) {
        RootBox rb = refine_root_box(cr, b, 200);
        CHECK(rb.radius <= Rat(Int(1), Int(1) << 200));
        Rat dx = rb.re - b.re, dy = rb.im - b.im;
        Rat rr = rb.radius + b.radius;
        CHECK(dx * dx + dy * dy <= rr * rr);
    }
}

TEST_CASE("mahler measure enclosures") {
    PolyQ x = PolyQ::x();
    // golden ratio polynomial: M = (1+sqrt 5)/2, log M = 0.4812118250596...
    RatInterval m = log_mahler_interval(x * x - x - PolyQ(Rat(1)), 40);
    CHECK(rat_to_double(m.lo) <= 0.48121182505960347);
    CHECK(rat_to_double(m.hi) >= 0.48121182505960347);
    CHECK(m.width() <= Rat(Int(1), Int(1) << 40));
    // cyclotomic: measure 1, log 0
    RatInterval c = log_mahler_interval(x * x + x + PolyQ(Rat(1)), 40);
    CHECK(c.contains(Rat(0)));
    CHECK(c.width() <= Rat(Int(1), Int(1) << 40));
    // M(x^n - 2) = 2
    RatInterval t = log_mahler_interval(poly_pow(x, 7) - PolyQ(Rat(2)), 40);
    CHECK(rat_to_double(t.lo) <= std::log(2.0));
    CHECK(rat_to_double(t.hi) >= std::log(2.0));
    // non-monic: M(2x - 1) = 2 * max(1, 1/2) = 2
    RatInterval nm = log_mahler_interval(x.scaled(Rat(2)) - PolyQ(Rat(1)), 40);
    CHECK(rat_to_double(nm.lo) <= std::log(2.0));
    CHECK(rat_to_double(nm.hi) >= std::log(2.0));
}
