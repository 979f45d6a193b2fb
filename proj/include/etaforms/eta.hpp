#pragma once

#include "etaforms/primes.hpp"
#include "etaforms/qseries.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace etaforms::eta {

/// Product over divisors m | level of eta(m z)^{a_m}.
struct EtaQuotient {
    long long level = 1;
    std::map<long long, long long> exponents;  // m -> a_m, a_m != 0

    void validate() const {
        if (level < 1) throw std::invalid_argument("EtaQuotient: level must be positive");
        for (auto [m, a] : exponents) {
            if (m < 1 || level % m != 0)
                throw std::invalid_argument("EtaQuotient: argument " + std::to_string(m) +
                                            " does not divide level " + std::to_string(level));
            if (a == 0)
                throw std::invalid_argument("EtaQuotient: zero exponent for argument " + std::to_string(m));
        }
    }

    /// z -> d*z: argument m becomes m*d, level scales accordingly.
    EtaQuotient rescaled(long long d) const {
        EtaQuotient out;
        out.level = level * d;
        for (auto [m, a] : exponents) out.exponents[m * d] = a;
        return out;
    }

    /// Sum of m * a_m, i.e. 24 times the order at infinity.
    long long exponent_sum() const {
        long long s = 0;
        for (auto [m, a] : exponents) s += m * a;
        return s;
    }
};

struct OnoCheck {
    long long weight;
    bool cond_a;  // sum of m * a_m divisible by 24
    bool cond_b;  // sum of (N/m) * a_m divisible by 24
};

inline OnoCheck ono_check(const EtaQuotient& eq) {
    eq.validate();
    long long asum = 0, sum_a = 0, sum_b = 0;
    for (auto [m, a] : eq.exponents) {
        asum += a;
        sum_a += m * a;
        sum_b += (eq.level / m) * a;
    }
    if (asum % 2 != 0)
        throw std::domain_error("ono_check: half-integral weight (sum of exponents is odd)");
    auto mod24 = [](long long x) { return ((x % 24) + 24) % 24; };
    return OnoCheck{asum / 2, mod24(sum_a) == 0, mod24(sum_b) == 0};
}

namespace detail {

/// Squarefree kernel of a rational x: sign(x) times the product of primes
/// with odd exponent in x.
inline long long squarefree_kernel(const Rat& x) {
    if (x.is_zero()) throw std::invalid_argument("squarefree_kernel: zero");
    std::map<long long, long long> par;
    auto fold = [&par](Bigint v, int dir) {
        for (long long p = 2; p * p <= v; ++p) {
            while (v % p == 0) {
                v /= p;
                par[p] += dir;
            }
        }
        if (v > 1) par[v.convert_to<long long>()] += dir;
    };
    Bigint n = x.num() < 0 ? Bigint(-x.num()) : x.num();
    fold(n, +1);
    fold(x.den(), -1);
    long long out = x.sign();
    for (auto [p, e] : par)
        if (e % 2 != 0) out *= p;
    return out;
}

} // namespace detail

/// Squarefree integer D with chi(d) = Kronecker(D, d), computed as the
/// squarefree kernel of (-1)^k * prod m^{a_m}.  Any integer differing from
/// D by a square factor labels the same character.
inline long long character_discriminant(const EtaQuotient& eq) {
    OnoCheck oc = ono_check(eq);
    Rat s(1);
    for (auto [m, a] : eq.exponents) {
        Rat f(m);
        for (long long k = 0; k < (a > 0 ? a : -a); ++k) s = (a > 0) ? s * f : s / f;
    }
    if (oc.weight % 2 != 0) s = -s;
    return detail::squarefree_kernel(s);
}

/// True when Kronecker(D1, .) and Kronecker(D2, .) are the same character,
/// i.e. D1 and D2 agree up to a square factor.
inline bool same_quadratic_character(long long d1, long long d2) {
    return detail::squarefree_kernel(Rat(d1)) == detail::squarefree_kernel(Rat(d2));
}

/// Order of vanishing at each cusp of Gamma_0(level), keyed by the cusp
/// denominator d | level (Ligozat).  Order at infinity is the d = level row.
inline std::vector<std::pair<long long, Rat>> cusp_orders(const EtaQuotient& eq) {
    eq.validate();
    std::vector<std::pair<long long, Rat>> out;
    const long long N = eq.level;
    for (long long d : divisors(N)) {
        Rat order(0);
        for (auto [m, a] : eq.exponents) {
            long long g = std::gcd(d, m);
            order += Rat(Bigint(N) * g * g * a, Bigint(24) * std::gcd(d, N / d) * d * m);
        }
        out.emplace_back(d, order);
    }
    return out;
}

namespace detail {

/// Integer series supported on the arithmetic progression
/// lead + step * j of u-exponents (u = q^{1/24}).
struct GridSeries {
    long long lead = 0;
    long long step = 1;
    std::vector<Bigint> c;
};

/// Exponent/sign pairs of prod_{n>=1} (1 - x^n) = sum_k (-1)^k x^{k(3k-1)/2}
/// (pentagonal number theorem), skipping the constant 1, with exponents
/// scaled by `stride` and truncated at `bound`.
inline std::vector<std::pair<long long, int>> pentagonal_terms(long long stride, long long bound) {
    std::vector<std::pair<long long, int>> terms;
    for (long long k = 1;; ++k) {
        long long g1 = k * (3 * k - 1) / 2;
        long long g2 = k * (3 * k + 1) / 2;
        int sign = (k % 2 == 0) ? +1 : -1;
        if (g1 * stride > bound) break;
        terms.emplace_back(g1 * stride, sign);
        if (g2 * stride <= bound) terms.emplace_back(g2 * stride, sign);
    }
    std::sort(terms.begin(), terms.end());
    return terms;
}

/// In-place multiply of f by a sparse unit 1 + sum t_k x^{o_k} (t_k = +-1).
inline void apply_sparse_mul(std::vector<Bigint>& f, const std::vector<std::pair<long long, int>>& terms) {
    const long long n = static_cast<long long>(f.size());
    for (long long j = n - 1; j >= 0; --j) {
        // f[j] = sum over terms landing on j, plus the original f[j]
        for (auto [off, sgn] : terms) {
            if (off > j) break;
            const Bigint& src = f[static_cast<std::size_t>(j - off)];
            if (src.is_zero()) continue;
            if (sgn > 0) f[static_cast<std::size_t>(j)] += src;
            else f[static_cast<std::size_t>(j)] -= src;
        }
    }
}

/// In-place divide of f by a sparse unit 1 + sum t_k x^{o_k} (synthetic division).
inline void apply_sparse_div(std::vector<Bigint>& f, const std::vector<std::pair<long long, int>>& terms) {
    const long long n = static_cast<long long>(f.size());
    for (long long j = 0; j < n; ++j) {
        for (auto [off, sgn] : terms) {
            if (off > j) break;
            const Bigint& src = f[static_cast<std::size_t>(j - off)];
            if (src.is_zero()) continue;
            if (sgn > 0) f[static_cast<std::size_t>(j)] -= src;
            else f[static_cast<std::size_t>(j)] += src;
        }
    }
}

/// Exact integer expansion of prod eta(m z)^{a_m} with u-exponents < uprec.
inline GridSeries expand_grid(const std::map<long long, long long>& exponents, long long uprec) {
    GridSeries out;
    for (auto [m, a] : exponents) out.lead += m * a;
    if (out.lead < 0)
        throw std::domain_error("eta expand: pole at infinity (leading exponent " +
                                std::to_string(out.lead) + " < 0)");
    long long step = 0;
    for (auto [m, a] : exponents) step = std::gcd(step, 24 * m);
    if (step == 0) step = 1;
    out.step = step;
    if (out.lead >= uprec) {
        // nothing representable below the precision horizon
        out.c.assign(1, Bigint(0));
        return out;
    }
    const long long len = (uprec - 1 - out.lead) / step + 1;
    out.c.assign(static_cast<std::size_t>(len), Bigint(0));
    out.c[0] = 1;
    const long long max_offset = len - 1;  // offsets live on the index grid
    for (auto [m, a] : exponents) {
        auto terms = pentagonal_terms(24 * m / step, max_offset);
        for (long long k = 0; k < (a > 0 ? a : -a); ++k) {
            if (a > 0) apply_sparse_mul(out.c, terms);
            else apply_sparse_div(out.c, terms);
        }
    }
    return out;
}

} // namespace detail

/// q^{1/24} * prod (1 - q^n) as a scale-24 series (pentagonal fill).
inline QSeries eta_expansion(long long prec) {
    if (prec < 1) throw std::invalid_argument("eta_expansion: prec must be positive");
    std::vector<CycNum> c(static_cast<std::size_t>(prec));
    auto put = [&](long long e, int sgn) {
        if (e < prec) c[static_cast<std::size_t>(e)] = CycNum(sgn);
    };
    put(1, +1);
    for (long long k = 1; 24 * (k * (3 * k - 1) / 2) + 1 < prec; ++k) {
        int sign = (k % 2 == 0) ? +1 : -1;
        put(24 * (k * (3 * k - 1) / 2) + 1, sign);
        put(24 * (k * (3 * k + 1) / 2) + 1, sign);
    }
    return QSeries(24, std::move(c));
}

/// Exact expansion of the quotient as a scale-24 series.
inline QSeries expand(const EtaQuotient& eq, long long prec) {
    eq.validate();
    if (prec < 1) throw std::invalid_argument("eta expand: prec must be positive");
    detail::GridSeries g = detail::expand_grid(eq.exponents, prec);
    std::vector<CycNum> c(static_cast<std::size_t>(prec));
    for (std::size_t j = 0; j < g.c.size(); ++j) {
        if (g.c[j].is_zero()) continue;
        long long e = g.lead + g.step * static_cast<long long>(j);
        if (e < prec) c[static_cast<std::size_t>(e)] = CycNum(Rat(g.c[j]));
    }
    return QSeries(24, std::move(c));
}

/// Expansion directly on the integer q-grid (scale 1).  The support lives
/// on (sum m a_m) + 24 gcd(m) Z in u-exponents, so the expansion is an
/// integral q-series exactly when 24 divides the exponent sum (the first
/// 24-divisibility condition).  Equivalent to reading expand() on the
/// coarse grid, without materialising the fractional one.
inline QSeries expand_q(const EtaQuotient& eq, long long prec) {
    eq.validate();
    if (prec < 1) throw std::invalid_argument("eta expand_q: prec must be positive");
    if (((eq.exponent_sum() % 24) + 24) % 24 != 0)
        throw std::domain_error("eta expand_q: exponent sum " + std::to_string(eq.exponent_sum()) +
                                " not divisible by 24; expansion is not an integral q-series");
    detail::GridSeries g = detail::expand_grid(eq.exponents, 24 * (prec - 1) + 1);
    std::vector<CycNum> c(static_cast<std::size_t>(prec));
    for (std::size_t j = 0; j < g.c.size(); ++j) {
        if (g.c[j].is_zero()) continue;
        long long e = (g.lead + g.step * static_cast<long long>(j)) / 24;
        if (e < prec) c[static_cast<std::size_t>(e)] = CycNum(Rat(g.c[j]));
    }
    return QSeries(1, std::move(c));
}

} // namespace etaforms::eta
