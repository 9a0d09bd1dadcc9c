#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "lrslab/algnum.hpp"

using namespace lrslab;

namespace {
PolyQ x() { return PolyQ::x(); }

FieldPtr sqrt2_field() { return NumberField::create(x() * x() - PolyQ(Rat(2))); }
FieldPtr gauss_field() { return NumberField::create(x() * x() + PolyQ(Rat(1))); }
}  // namespace

TEST_CASE("min_poly_of") {
    auto K = sqrt2_field();
    CHECK(min_poly_of(NFElem::generator(K)) == x() * x() - PolyQ(Rat(2)));
    CHECK(min_poly_of(NFElem::from_rat(K, Rat(3, 2))) == x() - PolyQ(Rat(3, 2)));
    // t+1 in Q[t]/(t^2-2) has minimal polynomial x^2 - 2x - 1
    NFElem u = NFElem::generator(K) + NFElem::from_rat(K, Rat(1));
    CHECK(min_poly_of(u) == x() * x() - x().scaled(Rat(2)) - PolyQ(Rat(1)));
}

TEST_CASE("field arithmetic") {
    auto K = gauss_field();
    NFElem i = NFElem::generator(K);
    CHECK((i * i).as_rat() == Rat(-1));
    CHECK((i.pow(4)).as_rat() == Rat(1));
    NFElem z = i + NFElem::from_rat(K, Rat(1));  // 1 + i
    CHECK(z.norm() == Rat(2));
    CHECK((z * z.conj()).as_rat() == Rat(2));
    CHECK((z / z).as_rat() == Rat(1));
    CHECK(z.inverse() * z == NFElem::from_rat(K, Rat(1)));
    CHECK_THROWS_AS(NFElem::from_rat(K, Rat(0)).inverse(), InputError);
}

TEST_CASE("is_root_of_unity") {
    auto K3 = NumberField::create(x() * x() + x() + PolyQ(Rat(1)));
    CHECK(is_root_of_unity(NFElem::generator(K3)) == 3);
    auto Kphi = NumberField::create(x() * x() - x() - PolyQ(Rat(1)));
    CHECK_FALSE(is_root_of_unity(NFElem::generator(Kphi)));
    auto KI = gauss_field();
    CHECK(is_root_of_unity(-NFElem::generator(KI)) == 4);
    CHECK(is_root_of_unity(NFElem::from_rat(KI, Rat(1))) == 1);
    CHECK(is_root_of_unity(NFElem::from_rat(KI, Rat(-1))) == 2);
    CHECK_FALSE(is_root_of_unity(NFElem::from_rat(KI, Rat(1, 2))));
    CHECK_THROWS_AS(is_root_of_unity(NFElem::from_rat(KI, Rat(0))), ZeroInputError);
    // order checks exactly: u^n = 1 and no smaller positive power
    NFElem z6 = NFElem::generator(NumberField::cyclotomic_field(6));
    auto ord = is_root_of_unity(z6);
    REQUIRE(ord == 6);
    CHECK(z6.pow(6).as_rat() == Rat(1));
    for (long j : {1L, 2L, 3L}) CHECK(z6.pow(j) != NFElem::from_rat(z6.field(), Rat(1)));
}

TEST_CASE("weil_height examples") {
    auto K = gauss_field();
    HeightValue h23 = weil_height(NFElem::from_rat(K, Rat(2, 3)));
    CHECK(h23.exact);
    CHECK(h23.value == Catch::Approx(std::log(3.0)).epsilon(1e-10));
    // golden ratio
    auto Kphi = NumberField::create(x() * x() - x() - PolyQ(Rat(1)));
    HeightValue hphi = weil_height(NFElem::generator(Kphi));
    CHECK_FALSE(hphi.exact);
    CHECK(hphi.value == Catch::Approx(0.2406059125529010).margin(1e-9));
    CHECK(hphi.error_bound <= 1e-9);
    // root of unity
    auto K3 = NumberField::create(x() * x() + x() + PolyQ(Rat(1)));
    HeightValue hz = weil_height(NFElem::generator(K3));
    CHECK(hz.value == 0.0);
    CHECK(hz.exact);
    // h(2^{1/3}) = log(2)/3
    auto Kc = NumberField::create(poly_pow(x(), 3) - PolyQ(Rat(2)));
    HeightValue hc = weil_height(NFElem::generator(Kc));
    CHECK(hc.value == Catch::Approx(std::log(2.0) / 3).margin(1e-9));
}

TEST_CASE("weil_height properties") {
    std::mt19937_64 rng(77);
    std::vector<FieldPtr> fields{sqrt2_field(), gauss_field(),
                                 NumberField::create(poly_pow(x(), 3) - x() - PolyQ(Rat(1))),
                                 NumberField::cyclotomic_field(7)};
    int checked = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const auto& K = fields[iter % fields.size()];
        std::vector<Rat> c(static_cast<std::size_t>(K->degree()));
        for (auto& v : c) v = Rat(static_cast<long>(rng() % 7) - 3);
        NFElem u(K, PolyQ(std::move(c)));
        if (u.is_zero()) continue;
        HeightValue h = weil_height(u);
        CHECK(h.value >= -1e-12);  // nonnegative
        bool torsion = is_root_of_unity(u).has_value();
        if (torsion || (u.is_rational() && rat_abs(u.as_rat()) == 1)) {
            CHECK(h.value == 0.0);
        } else if (!u.is_rational() || rat_abs(u.as_rat()) != 1) {
            // Kronecker: height zero only for zero and roots of unity
            if (h.value <= h.error_bound) CHECK(torsion);
        }
        ++checked;
    }
    CHECK(checked >= 150);
    // h(u^n) = n h(u)
    NFElem g = NFElem::generator(sqrt2_field()) + NFElem::from_rat(sqrt2_field(), Rat(1));
    HeightValue h1 = weil_height(g);
    for (long n : {2L, 5L, 10L}) {
        HeightValue hn = weil_height(g.pow(n));
        CHECK(std::abs(hn.value - n * h1.value) <= hn.error_bound + n * h1.error_bound + 1e-12);
    }
}

TEST_CASE("modulus_compare") {
    auto K = gauss_field();
    NFElem i = NFElem::generator(K);
    NFElem one = NFElem::from_rat(K, Rat(1));
    CHECK(modulus_compare(NFElem::from_rat(K, Rat(4)), NFElem::from_rat(K, Rat(2))) ==
          Ordering::Greater);
    CHECK(modulus_compare(one + i, one - i) == Ordering::Equal);  // conjugates
    // golden ratio: |phi| > |1 - phi| at the embedding with the larger root
    auto Kphi = NumberField::create(x() * x() - x() - PolyQ(Rat(1)));
    NFElem t = NFElem::generator(Kphi);
    NFElem w = NFElem::from_rat(Kphi, Rat(1)) - t;
    CHECK(modulus_compare(t, w, 1) == Ordering::Greater);
    CHECK(modulus_compare(t, w, 0) == Ordering::Less);
    // equal via nontrivial algebraic identity: |t| = |2/t| in Q(sqrt 2)
    auto K2 = sqrt2_field();
    NFElem s = NFElem::generator(K2);
    CHECK(modulus_compare(s, NFElem::from_rat(K2, Rat(2)) / s, 0) == Ordering::Equal);
}

TEST_CASE("count_rou_degree") {
    CHECK(count_rou_degree(1) == 2);
    CHECK(count_rou_degree(2) == 8);
    for (long D = 1; D <= 100; ++D) {
        Int r = count_rou_degree(D);
        CHECK(r <= Int(23) * D * D);
    }
    // independent check for the enumeration window: no order between the
    // bound and 10x the bound contributes for small D
    for (long D : {1L, 2L, 3L, 5L}) {
        long limit = std::max<long>(6, 4 * D * D);
        for (long m = limit + 1; m <= 10 * limit; ++m) CHECK(euler_phi(m) > D);
    }
}

TEST_CASE("embeddings are certified and refinable") {
    auto K = NumberField::cyclotomic_field(5);
    auto cr = K->embeddings(100);
    REQUIRE(cr->roots.size() == 4);
    for (const auto& b : cr->roots) {
        CHECK(b.radius <= Rat(Int(1), Int(1) << 100));
        auto m = b.modulus_interval();
        CHECK(m.contains(Rat(1)));
    }
    // designated root is exp(2 pi i / 5): re = cos(72 deg) > 0, im > 0
    const auto& des = cr->roots[static_cast<std::size_t>(K->root_index())];
    CHECK(rat_to_double(des.re) == Catch::Approx(std::cos(2 * 3.14159265358979 / 5)).margin(1e-9));
    CHECK(rat_to_double(des.im) == Catch::Approx(std::sin(2 * 3.14159265358979 / 5)).margin(1e-9));
}
