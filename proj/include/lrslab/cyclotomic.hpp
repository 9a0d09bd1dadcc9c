#ifndef LRSLAB_CYCLOTOMIC_HPP
#define LRSLAB_CYCLOTOMIC_HPP

#include <map>
#include <mutex>
#include <vector>

#include "lrslab/poly.hpp"

namespace lrslab {

inline long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

namespace detail {
struct CyclotomicCache {
    std::mutex mu;
    std::map<long, PolyQ> table;
};
inline CyclotomicCache& cyclotomic_cache() {
    static CyclotomicCache c;
    return c;
}
}  // namespace detail

// n-th cyclotomic polynomial; memoized, safe for concurrent use.
inline PolyQ cyclotomic(long n) {
    if (n < 1) throw InputError("cyclotomic: n must be >= 1");
    auto& cache = detail::cyclotomic_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.table.find(n);
        if (it != cache.table.end()) return it->second;
    }
    // x^n - 1 divided by the cyclotomics of the proper divisors of n
    std::vector<Rat> xn(static_cast<std::size_t>(n) + 1, Rat(0));
    xn[0] = Rat(-1);
    xn[static_cast<std::size_t>(n)] = Rat(1);
    PolyQ phi{std::move(xn)};
    for (long d = 1; d < n; ++d) {
        if (n % d == 0) phi = exact_div(phi, cyclotomic(d));
    }
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        cache.table.emplace(n, phi);
    }
    return phi;
}

// All m with phi(m) <= bound. Uses phi(m) > sqrt(m)/2 for m > 6, so the
// enumeration window max(6, 4*bound^2) is exhaustive.
inline std::vector<long> orders_with_phi_at_most(long bound) {
    std::vector<long> out;
    long limit = std::max<long>(6, 4 * bound * bound);
    for (long m = 1; m <= limit; ++m)
        if (euler_phi(m) <= bound) out.push_back(m);
    return out;
}

inline std::vector<long> orders_with_phi_equal(long d) {
    std::vector<long> out;
    long limit = std::max<long>(6, 4 * d * d);
    for (long m = 1; m <= limit; ++m)
        if (euler_phi(m) == d) out.push_back(m);
    return out;
}

}  // namespace lrslab

#endif
