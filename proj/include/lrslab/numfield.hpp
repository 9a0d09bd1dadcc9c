#ifndef LRSLAB_NUMFIELD_HPP
#define LRSLAB_NUMFIELD_HPP

#include <memory>
#include <mutex>
#include <optional>

#include "lrslab/cyclotomic.hpp"
#include "lrslab/factor.hpp"
#include "lrslab/roots.hpp"

namespace lrslab {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[t]/(minpoly) with certified complex embeddings. Immutable except for the
// embedding cache, which refines copy-on-write under a lock.
class NumberField {
  public:
    static FieldPtr create(const PolyQ& minpoly, int root_index = 0,
                           bool check_irreducible = true) {
        PolyQ m = make_monic(minpoly);
        if (m.degree() < 1) throw InputError("NumberField: minimal polynomial must have degree >= 1");
        if (check_irreducible && !is_irreducible_over_Q(m))
            throw InputError("NumberField: minimal polynomial is reducible");
        if (root_index < 0 || root_index >= m.degree())
            throw InputError("NumberField: root index out of range");
        return FieldPtr(new NumberField(std::move(m), root_index, std::nullopt));
    }

    static FieldPtr rationals() {
        static FieldPtr q(new NumberField(PolyQ::x() - PolyQ(Rat(1)), 0, 1L));
        return q;
    }

    // Q(zeta_M); the designated embedding is exp(2*pi*i/M).
    static FieldPtr cyclotomic_field(long M) {
        if (M < 1) throw InputError("cyclotomic_field: M >= 1 required");
        if (M == 1) return rationals();
        PolyQ m = cyclotomic(M);
        int idx = 0;
        if (M == 2) {
            idx = 0;
        } else {
            // boxes sort by (re, im); exp(2*pi*i/M) has maximal real part
            // among the primitive roots and positive imaginary part
            idx = m.degree() - 1;
        }
        return FieldPtr(new NumberField(std::move(m), idx, M));
    }

    int degree() const { return minpoly_.degree(); }
    const PolyQ& minpoly() const { return minpoly_; }
    int root_index() const { return root_index_; }
    std::optional<long> cyclotomic_order() const { return cyclo_order_; }
    bool is_rationals() const { return degree() == 1; }

    bool same(const NumberField& o) const {
        return this == &o || (minpoly_ == o.minpoly_ && root_index_ == o.root_index_);
    }

    // All embedding boxes refined to radius <= 2^-prec.
    std::shared_ptr<const CertifiedRoots> embeddings(unsigned prec) const {
        std::lock_guard<std::mutex> lock(mu_);
        Rat eps(Int(1), Int(1) << prec);
        if (!roots_) {
            auto cr = std::make_shared<CertifiedRoots>(certify_roots(minpoly_, std::max(prec, 128u)));
            roots_ = cr;
        }
        bool fine = true;
        for (const auto& b : roots_->roots) fine &= (b.radius <= eps);
        if (!fine) {
            auto next = std::make_shared<CertifiedRoots>(*roots_);
            for (auto& b : next->roots)
                if (b.radius > eps) b = refine_root_box(*next, b, prec);
            roots_ = next;
        }
        return roots_;
    }

  private:
    NumberField(PolyQ m, int idx, std::optional<long> order)
        : minpoly_(std::move(m)), root_index_(idx), cyclo_order_(order) {}

    PolyQ minpoly_;
    int root_index_;
    std::optional<long> cyclo_order_;
    mutable std::mutex mu_;
    mutable std::shared_ptr<const CertifiedRoots> roots_;
};

// Element of a number field in the power basis of t, reduced mod minpoly.
class NFElem {
  public:
    NFElem() = default;  // detached zero; usable only after assignment

    NFElem(FieldPtr field, PolyQ rep) : K_(std::move(field)) {
        if (!K_) throw InputError("NFElem: null field");
        rep_ = rep % K_->minpoly();
    }

    static NFElem from_rat(FieldPtr field, const Rat& x) { return NFElem(std::move(field), PolyQ(x)); }
    static NFElem generator(FieldPtr field) {
        if (field->degree() == 1) {
            // minpoly x - c: the generator is the rational c itself
            Rat c = -field->minpoly()[0];
            return from_rat(std::move(field), c);
        }
        return NFElem(std::move(field), PolyQ::x());
    }

    const FieldPtr& field() const { return K_; }
    const PolyQ& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rat as_rat() const {
        if (!is_rational()) throw InputError("NFElem: not rational");
        return rep_.is_zero() ? Rat(0) : rep_[0];
    }

    friend bool operator==(const NFElem& a, const NFElem& b) {
        a.check_same(b);
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    friend NFElem operator+(const NFElem& a, const NFElem& b) {
        a.check_same(b);
        return NFElem(a.K_, a.rep_ + b.rep_, reduced_tag{});
    }
    friend NFElem operator-(const NFElem& a, const NFElem& b) {
        a.check_same(b);
        return NFElem(a.K_, a.rep_ - b.rep_, reduced_tag{});
    }
    friend NFElem operator-(const NFElem& a) { return NFElem(a.K_, -a.rep_, reduced_tag{}); }
    friend NFElem operator*(const NFElem& a, const NFElem& b) {
        a.check_same(b);
        return NFElem(a.K_, (a.rep_ * b.rep_) % a.K_->minpoly(), reduced_tag{});
    }
    friend NFElem operator*(const NFElem& a, const Rat& c) {
        return NFElem(a.K_, a.rep_.scaled(c), reduced_tag{});
    }
    friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

    NFElem inverse() const {
        if (is_zero()) throw InputError("NFElem: inverse of zero");
        auto eg = ext_gcd(rep_, K_->minpoly());
        if (eg.g.degree() != 0) throw Error("NFElem: inverse failed (reducible modulus?)");
        return NFElem(K_, eg.s.scaled(Rat(1) / eg.g[0]) % K_->minpoly(), reduced_tag{});
    }

    NFElem pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        NFElem r = from_rat(K_, Rat(1)), b = *this;
        unsigned long u = static_cast<unsigned long>(e);
        while (u) {
            if (u & 1) r = r * b;
            b = b * b;
            u >>= 1;
        }
        return r;
    }

    // Product of the element over all embeddings.
    Rat norm() const {
        if (is_zero()) return Rat(0);
        if (K_->degree() == 1) return as_rat();
        return resultant(K_->minpoly(), rep_);
    }

    // Complex conjugation, available for rational and cyclotomic fields.
    NFElem conj() const {
        if (K_->degree() == 1) return *this;
        auto M = K_->cyclotomic_order();
        if (!M) throw ConjugationUnavailableError("conjugation needs a cyclotomic field");
        PolyQ tinv = poly_pow(PolyQ::x(), static_cast<unsigned long>(*M - 1)) % K_->minpoly();
        return NFElem(K_, compose(rep_, tinv) % K_->minpoly(), reduced_tag{});
    }

    // Enclosure of the element under one complex embedding.
    ComplexInterval eval_box_at(int embedding_index, unsigned prec) const {
        auto cr = K_->embeddings(prec);
        if (embedding_index < 0 || embedding_index >= static_cast<int>(cr->roots.size()))
            throw InputError("NFElem: embedding index out of range");
        ComplexInterval t = cr->roots[static_cast<std::size_t>(embedding_index)].box();
        return eval_poly_with(rep_, t, [](const Rat& c) { return ComplexInterval(c); });
    }
    ComplexInterval eval_box(unsigned prec) const { return eval_box_at(K_->root_index(), prec); }

  private:
    struct reduced_tag {};
    NFElem(FieldPtr K, PolyQ rep, reduced_tag) : K_(std::move(K)), rep_(std::move(rep)) {}

    void check_same(const NFElem& o) const {
        if (!K_ || !o.K_) throw InputError("NFElem: detached element");
        if (!K_->same(*o.K_)) throw InputError("NFElem: mixed fields without explicit embedding");
    }

    FieldPtr K_;
    PolyQ rep_;
};

inline bool coeff_is_zero(const NFElem& x) { return x.is_zero(); }
inline NFElem coeff_from_int(const NFElem& like, int n) {
    return NFElem::from_rat(like.field(), Rat(n));
}

// Monic minimal polynomial over Q, via the first linear dependency among the
// powers of u (always irreducible).
inline PolyQ min_poly_of(const NFElem& u) {
    const int D = u.field()->degree();
    // echelon rows over the power basis, each with its combination over
    // 1, u, u^2, ...
    struct Row {
        std::vector<Rat> vec;   // length D
        std::vector<Rat> combo; // length D+1
        int pivot;
    };
    std::vector<Row> rows;
    NFElem power = NFElem::from_rat(u.field(), Rat(1));
    for (int i = 0; i <= D; ++i) {
        std::vector<Rat> v(static_cast<std::size_t>(D), Rat(0));
        for (int j = 0; j <= power.rep().degree(); ++j) v[static_cast<std::size_t>(j)] = power.rep()[static_cast<std::size_t>(j)];
        std::vector<Rat> combo(static_cast<std::size_t>(D) + 1, Rat(0));
        combo[static_cast<std::size_t>(i)] = Rat(1);
        for (const Row& r : rows) {
            const Rat& c = v[static_cast<std::size_t>(r.pivot)];
            if (c == 0) continue;
            Rat f = c;  // rows are normalized to pivot 1
            for (int j = 0; j < D; ++j) v[static_cast<std::size_t>(j)] -= f * r.vec[static_cast<std::size_t>(j)];
            for (int j = 0; j <= D; ++j) combo[static_cast<std::size_t>(j)] -= f * r.combo[static_cast<std::size_t>(j)];
        }
        int pivot = -1;
        for (int j = 0; j < D; ++j)
            if (v[static_cast<std::size_t>(j)] != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0) {
            // dependency found: combo gives the minimal polynomial
            return make_monic(PolyQ(std::move(combo)));
        }
        Rat inv = Rat(1) / v[static_cast<std::size_t>(pivot)];
        for (auto& x : v) x *= inv;
        for (auto& x : combo) x *= inv;
        rows.push_back(Row{std::move(v), std::move(combo), pivot});
        power = power * u;
    }
    throw Error("min_poly_of: no dependency found");  // unreachable
}

}  // namespace lrslab

#endif
