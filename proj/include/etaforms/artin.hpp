#pragma once

#include "etaforms/primes.hpp"
#include "etaforms/qseries.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace etaforms::artin {

/// Local Euler factor (1 - trace p^{-s} + det p^{-2s})^{-1}.
/// For unramified p: trace = a_p, det = chi(p); for ramified p det = 0.
struct LocalFactor {
    long long p;
    CycNum trace;
    CycNum det;
};

/// Coefficients a(p^0) .. a(p^rmax) of the local factor expansion:
/// a(1) = 1, a(p) = trace, a(p^{r+1}) = trace a(p^r) - det a(p^{r-1}).
inline std::vector<CycNum> prime_power_coeffs(const LocalFactor& lf, long long rmax) {
    if (rmax < 0) throw std::invalid_argument("prime_power_coeffs: rmax must be >= 0");
    std::vector<CycNum> a(static_cast<std::size_t>(rmax) + 1);
    a[0] = CycNum(1);
    if (rmax >= 1) a[1] = lf.trace;
    for (long long r = 1; r < rmax; ++r)
        a[static_cast<std::size_t>(r) + 1] =
            lf.trace * a[static_cast<std::size_t>(r)] - lf.det * a[static_cast<std::size_t>(r) - 1];
    return a;
}

/// Multiplicative assembly of Dirichlet coefficients a(1) .. a(nmax) from
/// local factors; every prime <= nmax must be supplied.
inline std::vector<CycNum> dirichlet_from_euler(const std::map<long long, LocalFactor>& factors,
                                                long long nmax) {
    if (nmax < 1) throw std::invalid_argument("dirichlet_from_euler: nmax must be positive");
    std::vector<long long> spf = smallest_prime_factor(nmax);
    for (long long p = 2; p <= nmax; ++p)
        if (spf[static_cast<std::size_t>(p)] == p && factors.find(p) == factors.end())
            throw std::invalid_argument("dirichlet_from_euler: missing local factor for p = " +
                                        std::to_string(p));
    // a(p^r) tables per prime
    std::map<long long, std::vector<CycNum>> pp;
    for (auto& [p, lf] : factors) {
        if (p > nmax) continue;
        long long rmax = 0;
        for (long long q = p; q <= nmax; q *= p) {
            ++rmax;
            if (q > nmax / p) break;
        }
        pp[p] = prime_power_coeffs(lf, rmax);
    }
    std::vector<CycNum> a(static_cast<std::size_t>(nmax) + 1);
    a[1] = CycNum(1);
    for (long long n = 2; n <= nmax; ++n) {
        long long p = spf[static_cast<std::size_t>(n)];
        long long m = n, r = 0;
        while (m % p == 0) {
            m /= p;
            ++r;
        }
        a[static_cast<std::size_t>(n)] =
            pp.at(p)[static_cast<std::size_t>(r)] * a[static_cast<std::size_t>(m)];
    }
    return std::vector<CycNum>(a.begin() + 1, a.end());  // a(1) first
}

struct CompareReport {
    long long checked_upto = 0;
    std::vector<long long> mismatches;
    bool pass() const { return mismatches.empty(); }
};

/// Exact coefficientwise comparison of a q-expansion against Dirichlet
/// coefficients on 1..upto.  dirichlet[k] holds a(k+1).
inline CompareReport compare(const QSeries& series, const std::vector<CycNum>& dirichlet,
                             long long upto) {
    if (series.scale() != 1) throw std::invalid_argument("artin compare: series must be at scale 1");
    if (series.prec() <= upto)
        throw std::invalid_argument("artin compare: series precision " +
                                    std::to_string(series.prec()) + " too small for upto = " +
                                    std::to_string(upto));
    if (static_cast<long long>(dirichlet.size()) < upto)
        throw std::invalid_argument("artin compare: Dirichlet list too short");
    CompareReport rep;
    rep.checked_upto = upto;
    for (long long n = 1; n <= upto; ++n)
        if (!(series.coefficient(n) == dirichlet[static_cast<std::size_t>(n) - 1]))
            rep.mismatches.push_back(n);
    return rep;
}

} // namespace etaforms::artin
