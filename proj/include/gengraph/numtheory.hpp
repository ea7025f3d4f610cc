#pragma once

// Exact arithmetic helpers: totient, Moebius, squarefree radical, divisor
// lists, unit groups and Ramanujan sums. Everything is total on n >= 1 and
// rejects n = 0 with invalid_input. Plain trial division throughout; the
// inputs in this library stay in the low thousands.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "gengraph/errors.hpp"

namespace gengraph {

struct Factorization {
    long long n = 1;
    std::vector<std::pair<long long, int>> primes; // (p, e), p strictly increasing

    int distinct_prime_count() const { return static_cast<int>(primes.size()); }

    static Factorization of(long long n) {
        if (n < 1) throw invalid_input("Factorization: n must be >= 1");
        Factorization f;
        f.n = n;
        long long m = n;
        for (long long p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            f.primes.emplace_back(p, e);
        }
        if (m > 1) f.primes.emplace_back(m, 1);
        return f;
    }
};

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline long long smallest_prime_factor(long long n) {
    if (n < 2) throw invalid_input("smallest_prime_factor: n must be >= 2");
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

inline long long euler_phi(long long n) {
    if (n < 1) throw invalid_input("euler_phi: n must be >= 1");
    long long phi = n;
    for (auto [p, e] : Factorization::of(n).primes) phi -= phi / p;
    return phi;
}

inline int mobius(long long n) {
    if (n < 1) throw invalid_input("mobius: n must be >= 1");
    auto f = Factorization::of(n);
    for (auto [p, e] : f.primes)
        if (e > 1) return 0;
    return f.primes.size() % 2 == 0 ? 1 : -1;
}

// Squarefree part: the product of the distinct primes dividing n; radical(1) = 1.
inline long long radical(long long n) {
    if (n < 1) throw invalid_input("radical: n must be >= 1");
    long long r = 1;
    for (auto [p, e] : Factorization::of(n).primes) r *= p;
    return r;
}

inline std::vector<long long> divisors(long long n) {
    if (n < 1) throw invalid_input("divisors: n must be >= 1");
    std::vector<long long> ds{1};
    for (auto [p, e] : Factorization::of(n).primes) {
        std::size_t base = ds.size();
        long long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Residues 0 <= a < n with gcd(a, n) = 1; U(1) = {0} by the gcd(0,1)=1 convention.
inline std::vector<long long> unit_group(long long n) {
    if (n < 1) throw invalid_input("unit_group: n must be >= 1");
    std::vector<long long> us;
    for (long long a = 0; a < n; ++a)
        if (std::gcd(a, n) == 1) us.push_back(a);
    return us;
}

// c_q(l): sum of the l-th powers of the primitive q-th roots of unity,
// evaluated as mu(d) * phi(q) / phi(d) with d = q / gcd(q, l).
inline long long ramanujan_sum(long long q, long long l) {
    if (q < 1) throw invalid_input("ramanujan_sum: q must be >= 1");
    if (l < 0) throw invalid_input("ramanujan_sum: l must be >= 0");
    long long d = q / std::gcd(q, l);
    return mobius(d) * (euler_phi(q) / euler_phi(d));
}

} // namespace gengraph
