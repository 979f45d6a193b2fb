#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace etaforms {

inline std::vector<long long> primes_up_to(long long n) {
    std::vector<long long> ps;
    if (n < 2) return ps;
    std::vector<bool> sieve(static_cast<std::size_t>(n + 1), true);
    sieve[0] = sieve[1] = false;
    for (long long p = 2; p * p <= n; ++p)
        if (sieve[static_cast<std::size_t>(p)])
            for (long long k = p * p; k <= n; k += p) sieve[static_cast<std::size_t>(k)] = false;
    for (long long p = 2; p <= n; ++p)
        if (sieve[static_cast<std::size_t>(p)]) ps.push_back(p);
    return ps;
}

/// Smallest prime factor table, spf[0] = spf[1] = 0.
inline std::vector<long long> smallest_prime_factor(long long n) {
    std::vector<long long> spf(static_cast<std::size_t>(n + 1), 0);
    for (long long i = 2; i <= n; ++i) {
        if (spf[static_cast<std::size_t>(i)] == 0)
            for (long long k = i; k <= n; k += i)
                if (spf[static_cast<std::size_t>(k)] == 0) spf[static_cast<std::size_t>(k)] = i;
    }
    return spf;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long long> prime_factors(long long n) {
    if (n < 1) throw std::invalid_argument("prime_factors: positive argument required");
    std::vector<long long> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::vector<long long> divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace etaforms
