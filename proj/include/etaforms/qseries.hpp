#pragma once

#include "etaforms/cyclotomic.hpp"

#include <cstdint>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace etaforms {

/// Truncated power series in u = q^(1/scale) with exact CycNum coefficients.
/// Coefficients are known (exactly) for u-exponents 0 .. prec()-1; reading
/// past that is an error, never a fabricated zero.
class QSeries {
public:
    QSeries(long long scale, std::vector<CycNum> coeffs)
        : scale_(scale), c_(std::move(coeffs)) {
        if (scale_ < 1) throw std::invalid_argument("QSeries: scale must be positive");
        if (c_.empty()) throw std::invalid_argument("QSeries: precision must be positive");
    }

    static QSeries zero(long long scale, long long prec) {
        return QSeries(scale, std::vector<CycNum>(static_cast<std::size_t>(prec)));
    }
    static QSeries one(long long scale, long long prec) {
        QSeries f = zero(scale, prec);
        f.c_[0] = CycNum(1);
        return f;
    }

    long long scale() const { return scale_; }
    long long prec() const { return static_cast<long long>(c_.size()); }

    const CycNum& coefficient(long long n) const {
        if (n < 0 || n >= prec())
            throw std::out_of_range("QSeries: coefficient " + std::to_string(n) +
                                    " beyond precision " + std::to_string(prec()));
        return c_[static_cast<std::size_t>(n)];
    }
    CycNum& coefficient_mut(long long n) {
        if (n < 0 || n >= prec())
            throw std::out_of_range("QSeries: coefficient " + std::to_string(n) +
                                    " beyond precision " + std::to_string(prec()));
        return c_[static_cast<std::size_t>(n)];
    }

    const std::vector<CycNum>& coefficients() const { return c_; }

    /// Smallest exponent with a nonzero coefficient, or prec() if none.
    long long leading_exponent() const {
        for (long long n = 0; n < prec(); ++n)
            if (!c_[static_cast<std::size_t>(n)].is_zero()) return n;
        return prec();
    }

    QSeries truncated(long long new_prec) const {
        if (new_prec < 1 || new_prec > prec())
            throw std::invalid_argument("QSeries::truncated: bad precision");
        return QSeries(scale_, std::vector<CycNum>(c_.begin(), c_.begin() + new_prec));
    }

private:
    long long scale_;
    std::vector<CycNum> c_;
};

namespace detail {
inline void require_same_scale(const QSeries& f, const QSeries& g, const char* op) {
    if (f.scale() != g.scale())
        throw std::invalid_argument(std::string("QSeries ") + op + ": scale mismatch (" +
                                    std::to_string(f.scale()) + " vs " + std::to_string(g.scale()) + ")");
}
} // namespace detail

inline QSeries add(const QSeries& f, const QSeries& g) {
    detail::require_same_scale(f, g, "add");
    long long p = std::min(f.prec(), g.prec());
    std::vector<CycNum> c(static_cast<std::size_t>(p));
    for (long long n = 0; n < p; ++n) c[n] = f.coefficient(n) + g.coefficient(n);
    return QSeries(f.scale(), std::move(c));
}

inline QSeries sub(const QSeries& f, const QSeries& g) {
    detail::require_same_scale(f, g, "sub");
    long long p = std::min(f.prec(), g.prec());
    std::vector<CycNum> c(static_cast<std::size_t>(p));
    for (long long n = 0; n < p; ++n) c[n] = f.coefficient(n) - g.coefficient(n);
    return QSeries(f.scale(), std::move(c));
}

inline QSeries scalar_mul(const CycNum& a, const QSeries& f) {
    std::vector<CycNum> c(static_cast<std::size_t>(f.prec()));
    if (!a.is_zero()) {
        for (long long n = 0; n < f.prec(); ++n) {
            const CycNum& x = f.coefficient(n);
            if (!x.is_zero()) c[n] = a * x;
        }
    }
    return QSeries(f.scale(), std::move(c));
}

/// Cauchy product truncated to min precision.
inline QSeries mul(const QSeries& f, const QSeries& g) {
    detail::require_same_scale(f, g, "mul");
    long long p = std::min(f.prec(), g.prec());
    std::vector<CycNum> c(static_cast<std::size_t>(p));
    for (long long i = 0; i < p; ++i) {
        const CycNum& fi = f.coefficient(i);
        if (fi.is_zero()) continue;
        for (long long j = 0; i + j < p; ++j) {
            const CycNum& gj = g.coefficient(j);
            if (gj.is_zero()) continue;
            c[i + j] += fi * gj;
        }
    }
    return QSeries(f.scale(), std::move(c));
}

/// Multiplicative inverse; requires a unit constant term.
inline QSeries invert(const QSeries& f) {
    if (f.coefficient(0).is_zero())
        throw std::domain_error("QSeries invert: zero constant term");
    long long p = f.prec();
    CycNum lead_inv = f.coefficient(0).inverse();
    std::vector<CycNum> r(static_cast<std::size_t>(p));
    r[0] = lead_inv;
    for (long long n = 1; n < p; ++n) {
        CycNum acc;
        for (long long j = 1; j <= n; ++j) {
            const CycNum& fj = f.coefficient(j);
            if (fj.is_zero()) continue;
            acc += fj * r[n - j];
        }
        if (!acc.is_zero()) r[n] = -(lead_inv * acc);
    }
    return QSeries(f.scale(), std::move(r));
}

/// Substitution z -> d*z: exponent n maps to d*n on the same u-grid.  When
/// d equals the scale the result collapses onto the integer q-grid and is
/// returned at scale 1 with the exponents unchanged (u^n -> q^n).
inline QSeries rescale(const QSeries& f, long long d) {
    if (d < 1) throw std::invalid_argument("QSeries rescale: factor must be positive");
    if (d == 1) return f;
    if (d == f.scale()) {
        return QSeries(1, f.coefficients());
    }
    long long p = d * (f.prec() - 1) + 1;
    std::vector<CycNum> c(static_cast<std::size_t>(p));
    for (long long n = 0; n < f.prec(); ++n) {
        const CycNum& x = f.coefficient(n);
        if (!x.is_zero()) c[static_cast<std::size_t>(d * n)] = x;
    }
    return QSeries(f.scale(), std::move(c));
}

/// Compares two series as abstract q-series on the common exponent grid,
/// over the q-range where both are defined.  Exponents known to one series
/// but off the other's grid must be zero.
inline bool equal_as_q_series(const QSeries& f, const QSeries& g) {
    long long L = std::lcm(f.scale(), g.scale());
    long long sf = L / f.scale();
    long long sg = L / g.scale();
    // common precision on the L-grid
    long long bound = std::min(((f.prec() - 1) * sf), ((g.prec() - 1) * sg)) + 1;
    for (long long e = 0; e < bound; ++e) {
        const bool on_f = (e % sf == 0);
        const bool on_g = (e % sg == 0);
        const CycNum* a = on_f ? &f.coefficient(e / sf) : nullptr;
        const CycNum* b = on_g ? &g.coefficient(e / sg) : nullptr;
        if (a && b) {
            if (!(*a == *b)) return false;
        } else if (a) {
            if (!a->is_zero()) return false;
        } else if (b) {
            if (!b->is_zero()) return false;
        }
    }
    return true;
}

/// Text dump: header "scale=s prec=P", then one line "n: c" per nonzero
/// coefficient.
inline void dump(const QSeries& f, std::ostream& os) {
    os << "scale=" << f.scale() << " prec=" << f.prec() << "\n";
    for (long long n = 0; n < f.prec(); ++n) {
        const CycNum& c = f.coefficient(n);
        if (!c.is_zero()) os << n << ": " << c.str() << "\n";
    }
}

inline QSeries parse_dump(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("QSeries parse: empty input");
    long long scale = 0, prec = 0;
    if (std::sscanf(header.c_str(), "scale=%lld prec=%lld", &scale, &prec) != 2)
        throw std::invalid_argument("QSeries parse: bad header: " + header);
    if (scale < 1 || prec < 1) throw std::invalid_argument("QSeries parse: bad header values");
    std::vector<CycNum> c(static_cast<std::size_t>(prec));
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("QSeries parse: bad line: " + line);
        long long n = std::stoll(line.substr(0, colon));
        std::string val = line.substr(colon + 1);
        auto start = val.find_first_not_of(" \t");
        if (start == std::string::npos)
            throw std::invalid_argument("QSeries parse: bad line: " + line);
        if (n < 0 || n >= prec) throw std::invalid_argument("QSeries parse: exponent out of range");
        c[static_cast<std::size_t>(n)] = CycNum::parse(val.substr(start));
    }
    return QSeries(scale, std::move(c));
}

} // namespace etaforms
