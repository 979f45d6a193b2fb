#pragma once

#include "etaforms/galois.hpp"
#include "etaforms/primes.hpp"
#include "etaforms/qseries.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace etaforms::classify {

/// c(Frob_p) = a_p^2 / chi(p).
inline CycNum c_value(const CycNum& a_p, int chi_p) {
    if (chi_p != 1 && chi_p != -1) throw std::invalid_argument("c_value: chi(p) must be +-1");
    CycNum c = a_p * a_p;
    return chi_p == 1 ? c : -c;
}

/// Empirical distribution of c over sampled primes.
struct CDistribution {
    std::map<CycNum, Rat> proportions;
    long long samples = 0;
};

/// Distribution of c_value(a_p, chi(p)) over primes p <= pmax outside the
/// excluded set (level/ramified primes).  Coefficients must cover pmax.
inline CDistribution empirical_c(const QSeries& form, long long disc, long long pmax,
                                 const std::set<long long>& exclude) {
    if (form.scale() != 1) throw std::invalid_argument("empirical_c: series must be at scale 1");
    if (form.prec() <= pmax)
        throw std::invalid_argument("empirical_c: coefficients available only up to " +
                                    std::to_string(form.prec() - 1) + ", need " +
                                    std::to_string(pmax));
    std::map<CycNum, long long> counts;
    long long n = 0;
    for (long long p : primes_up_to(pmax)) {
        if (exclude.count(p)) continue;
        int chi_p = galois::kronecker(disc, p);
        if (chi_p == 0)
            throw std::invalid_argument("empirical_c: chi vanishes at unexcluded prime " +
                                        std::to_string(p));
        ++counts[c_value(form.coefficient(p), chi_p)];
        ++n;
    }
    CDistribution dist;
    dist.samples = n;
    for (auto& [c, k] : counts) dist.proportions[c] = Rat(Bigint(k), Bigint(n));
    return dist;
}

enum class Verdict { DIHEDRAL, A4, S4, A5, INCONCLUSIVE };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::DIHEDRAL: return "DIHEDRAL";
        case Verdict::A4: return "A4";
        case Verdict::S4: return "S4";
        case Verdict::A5: return "A5";
        default: return "INCONCLUSIVE";
    }
}

struct Classification {
    Verdict verdict = Verdict::INCONCLUSIVE;
    // c-values mapped to projective Frobenius orders (0 = unrecognized)
    std::map<int, Rat> order_proportions;
    Rat dihedral_mass;      // proportion with c = 0
    Rat tv_distance;        // total variation to the matched reference row
    std::string matched;    // "A4" / "S4" / "A5" when an exotic row matched
};

namespace detail {

/// Reference proportions of projective Frobenius orders for the exotic
/// images.  The order-1 entry of the S4 row is 1/24 = 1/|S4|, forced by the
/// class census (each row must sum to 1).
inline const std::map<int, Rat>& reference_row(Verdict v) {
    static const std::map<int, Rat> a4{
        {1, Rat(Bigint(1), Bigint(12))}, {2, Rat(Bigint(1), Bigint(4))}, {3, Rat(Bigint(2), Bigint(3))}};
    static const std::map<int, Rat> s4{{1, Rat(Bigint(1), Bigint(24))},
                                       {2, Rat(Bigint(3), Bigint(8))},
                                       {3, Rat(Bigint(1), Bigint(3))},
                                       {4, Rat(Bigint(1), Bigint(4))}};
    static const std::map<int, Rat> a5{{1, Rat(Bigint(1), Bigint(60))},
                                       {2, Rat(Bigint(1), Bigint(4))},
                                       {3, Rat(Bigint(1), Bigint(3))},
                                       {5, Rat(Bigint(2), Bigint(5))}};
    switch (v) {
        case Verdict::A4: return a4;
        case Verdict::S4: return s4;
        case Verdict::A5: return a5;
        default: throw std::logic_error("reference_row: exotic verdict required");
    }
}

/// Projective Frobenius order attached to a c-value:
/// 4 -> 1, 0 -> 2, 1 -> 3, 2 -> 4, (3 +- sqrt5)/2 -> 5; 0 when unrecognized.
inline int projective_order(const CycNum& c) {
    if (c == CycNum(4)) return 1;
    if (c.is_zero()) return 2;
    if (c == CycNum(1)) return 3;
    if (c == CycNum(2)) return 4;
    // (3 +- sqrt5)/2 is not in Q(zeta_8); match numerically
    auto z = c.to_complex();
    if (std::abs(z.imag()) < 1e-9) {
        double golden1 = (3.0 + std::sqrt(5.0)) / 2.0;
        double golden2 = (3.0 - std::sqrt(5.0)) / 2.0;
        if (std::abs(z.real() - golden1) < 1e-9 || std::abs(z.real() - golden2) < 1e-9) return 5;
    }
    return 0;
}

inline Rat total_variation(const std::map<int, Rat>& a, const std::map<int, Rat>& b) {
    Rat tv(0);
    std::set<int> keys;
    for (auto& [k, v] : a) keys.insert(k);
    for (auto& [k, v] : b) keys.insert(k);
    for (int k : keys) {
        Rat va = a.count(k) ? a.at(k) : Rat(0);
        Rat vb = b.count(k) ? b.at(k) : Rat(0);
        tv += (va - vb).abs();
    }
    return tv * Rat(Bigint(1), Bigint(2));
}

} // namespace detail

/// Projective-image verdict from the c-distribution.  Dihedral first: a
/// c = 0 mass >= 0.45 settles it (dihedral-type images have mass >= 1/2,
/// the largest exotic mass is 3/8).  Otherwise nearest exotic row by total
/// variation, INCONCLUSIVE beyond distance 0.1.
inline Classification classify(const CDistribution& dist) {
    if (dist.samples < 100)
        throw std::invalid_argument("classify: need at least 100 sampled primes, have " +
                                    std::to_string(dist.samples));
    Classification out;
    for (auto& [c, prop] : dist.proportions) out.order_proportions[detail::projective_order(c)] += prop;
    if (out.order_proportions.count(2)) out.dihedral_mass = out.order_proportions.at(2);
    if (out.dihedral_mass >= Rat(Bigint(45), Bigint(100))) {
        out.verdict = Verdict::DIHEDRAL;
        return out;
    }
    Rat best;
    Verdict best_v = Verdict::INCONCLUSIVE;
    bool first = true;
    for (Verdict v : {Verdict::A4, Verdict::S4, Verdict::A5}) {
        Rat tv = detail::total_variation(out.order_proportions, detail::reference_row(v));
        if (first || tv < best) {
            best = tv;
            best_v = v;
            first = false;
        }
    }
    out.tv_distance = best;
    if (best <= Rat(Bigint(1), Bigint(10))) {
        out.verdict = best_v;
        out.matched = verdict_name(best_v);
    }
    return out;
}

} // namespace etaforms::classify
