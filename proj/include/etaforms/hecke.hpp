#pragma once

#include "etaforms/galois.hpp"
#include "etaforms/matrix.hpp"
#include "etaforms/primes.hpp"
#include "etaforms/qseries.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace etaforms::hecke {

/// Level, weight and quadratic nebentypus chi(.) = Kronecker(disc, .).
/// Weight 1 forces an odd character, i.e. disc < 0.
struct HeckeContext {
    long long level;
    long long weight;
    long long disc;

    HeckeContext(long long N, long long k, long long D) : level(N), weight(k), disc(D) {
        if (N < 1) throw std::invalid_argument("HeckeContext: level must be positive");
        if (galois::kronecker(D, -1) != (k % 2 == 0 ? 1 : -1))
            throw std::invalid_argument("HeckeContext: chi(-1) must equal (-1)^k");
    }

    CycNum chi(long long n) const { return CycNum(galois::kronecker(disc, n)); }
};

/// T_p on a scale-1 expansion: b(n) = a(pn) + chi(p) p^{k-1} a(n/p).
inline QSeries hecke_tp(const QSeries& f, long long p, const HeckeContext& ctx) {
    if (f.scale() != 1) throw std::invalid_argument("hecke_tp: series must be at scale 1");
    if (ctx.level % p == 0)
        throw std::invalid_argument("hecke_tp: p = " + std::to_string(p) + " divides the level");
    if (f.prec() < 2) throw std::invalid_argument("hecke_tp: need precision >= 2");
    long long out_prec = (f.prec() - 1) / p + 1;
    CycNum chi_p = ctx.chi(p);
    Bigint pk1 = 1;
    for (long long k = 1; k < ctx.weight; ++k) pk1 *= p;
    CycNum scaled_chi = chi_p * CycNum(Rat(pk1));
    std::vector<CycNum> b(static_cast<std::size_t>(out_prec));
    for (long long n = 0; n < out_prec; ++n) {
        CycNum v = f.coefficient(p * n);
        if (n % p == 0 && !scaled_chi.is_zero()) v += scaled_chi * f.coefficient(n / p);
        b[static_cast<std::size_t>(n)] = std::move(v);
    }
    return QSeries(1, std::move(b));
}

/// floor(k*m/12) with m = [SL2(Z) : Gamma_0(N)] = N prod_{p|N} (1 + 1/p).
inline long long sturm_bound(long long N, long long k) {
    if (N < 1 || k < 1) throw std::invalid_argument("sturm_bound: N, k must be positive");
    Bigint m = N;
    for (long long p : prime_factors(N)) {
        m *= (p + 1);
        m /= p;
    }
    return ((m * k) / 12).convert_to<long long>();
}

struct EigenCheck {
    bool ok = false;
    std::map<long long, CycNum> eigenvalues;
    // first violated (p, n) when ok is false
    long long bad_prime = 0;
    long long bad_index = 0;
};

/// Verifies T_p f = a_p f on every available coefficient for each listed
/// prime, reading a_p off the q^p coefficient of the normalized series.
inline EigenCheck is_eigenform(const QSeries& f, const std::vector<long long>& primes,
                               const HeckeContext& ctx) {
    if (f.scale() != 1) throw std::invalid_argument("is_eigenform: series must be at scale 1");
    if (f.prec() < 2 || !(f.coefficient(1) == CycNum(1)))
        throw std::invalid_argument("is_eigenform: series must be normalized with a(1) = 1");
    EigenCheck res;
    for (long long p : primes) {
        if (ctx.level % p == 0)
            throw std::invalid_argument("is_eigenform: p = " + std::to_string(p) + " divides the level");
        if (p >= f.prec())
            throw std::invalid_argument("is_eigenform: precision " + std::to_string(f.prec()) +
                                        " too small to read a_" + std::to_string(p) +
                                        "; need at least " + std::to_string(p + 1));
        CycNum a_p = f.coefficient(p);
        QSeries tp = hecke_tp(f, p, ctx);
        for (long long n = 0; n < tp.prec(); ++n) {
            if (!(tp.coefficient(n) == a_p * f.coefficient(n))) {
                res.ok = false;
                res.bad_prime = p;
                res.bad_index = n;
                return res;
            }
        }
        res.eigenvalues[p] = a_p;
    }
    res.ok = true;
    return res;
}

/// Matrix of T_p on the span of the given series: T_p basis_j =
/// sum_i M(i,j) basis_i, solved exactly from coefficient columns.
inline CycMatrix hecke_matrix(const std::vector<QSeries>& basis, long long p,
                              const HeckeContext& ctx) {
    if (basis.empty()) throw std::invalid_argument("hecke_matrix: empty basis");
    const std::size_t r = basis.size();
    long long prec = basis[0].prec();
    for (const QSeries& b : basis) {
        if (b.scale() != 1) throw std::invalid_argument("hecke_matrix: series must be at scale 1");
        prec = std::min(prec, b.prec());
    }
    const long long margin = 2;
    if (prec < p * (static_cast<long long>(r) + margin) + 1)
        throw std::invalid_argument("hecke_matrix: precision " + std::to_string(prec) +
                                    " too small; need at least " +
                                    std::to_string(p * (static_cast<long long>(r) + margin) + 1));
    const long long rows = (prec - 1) / p + 1;  // available coefficients of each image

    std::vector<QSeries> images;
    images.reserve(r);
    for (const QSeries& b : basis) images.push_back(hecke_tp(b.truncated(prec), p, ctx));

    // [basis columns | image columns], reduced simultaneously
    CycMatrix sys(static_cast<std::size_t>(rows), 2 * r);
    for (long long n = 0; n < rows; ++n)
        for (std::size_t j = 0; j < r; ++j) {
            sys.at(static_cast<std::size_t>(n), j) = basis[j].coefficient(n);
            sys.at(static_cast<std::size_t>(n), r + j) = images[j].coefficient(n);
        }
    std::vector<std::size_t> pivots;
    sys.row_reduce(&pivots);
    std::size_t rank = 0;
    for (std::size_t c : pivots) {
        if (c < r) ++rank;
        else throw std::domain_error("hecke_matrix: span not Hecke-stable");
    }
    if (rank < r) throw std::domain_error("hecke_matrix: basis dependent");
    // pivot columns are exactly 0..r-1, so row i of the reduced right block
    // lists the coordinates of each image in terms of basis_i
    CycMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) m.at(i, j) = sys.at(i, r + j);
    // consistency: rows beyond the rank must have vanished
    for (std::size_t i = r; i < static_cast<std::size_t>(rows); ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (!sys.at(i, r + j).is_zero())
                throw std::domain_error("hecke_matrix: span not Hecke-stable");
    return m;
}

namespace detail {

/// Recognizes a complex double as an element of Q(zeta_8) with coordinate
/// denominators <= max_den, by matching real and imaginary parts against
/// a + b*sqrt(2)/2 with bounded rational a, b.  Candidates are approximate;
/// callers must verify exactly.
inline std::optional<CycNum> recognize(std::complex<double> z, long long max_den,
                                       long long max_height) {
    static const double half_sqrt2 = std::sqrt(2.0) / 2.0;
    struct Best {
        double err = 1e100;
        Rat a, b;
    };
    auto fit = [&](double x) -> std::optional<std::pair<Rat, Rat>> {
        Best best;
        for (long long den = 1; den <= max_den; ++den) {
            for (long long nb = -max_height * den; nb <= max_height * den; ++nb) {
                double rest = x - (static_cast<double>(nb) / den) * half_sqrt2;
                long long na = std::llround(rest * den);
                if (std::abs(na) > max_height * den) continue;
                double err = std::abs(rest - static_cast<double>(na) / den);
                if (err < best.err) {
                    best.err = err;
                    best.a = Rat(Bigint(na), Bigint(den));
                    best.b = Rat(Bigint(nb), Bigint(den));
                }
            }
        }
        if (best.err > 1e-7) return std::nullopt;
        return std::make_pair(best.a, best.b);
    };
    auto re = fit(z.real());
    auto im = fit(z.imag());
    if (!re || !im) return std::nullopt;
    // x = a + u*sqrt2/2, y = c + v*sqrt2/2  ->  coords (a, (u+v)/2, c, (v-u)/2)
    Rat half(Bigint(1), Bigint(2));
    Rat c1 = (re->second + im->second) * half;
    Rat c3 = (im->second - re->second) * half;
    return CycNum(re->first, c1, im->first, c3);
}

} // namespace detail

struct Eigenform {
    std::vector<CycNum> coeffs;               // combination in terms of the basis
    std::map<long long, CycNum> eigenvalues;  // prime -> a_p
};

struct SearchResult {
    std::vector<Eigenform> eigenforms;
    // joint eigenspaces of dimension > 1 after all supplied primes, reported
    // as column bases; the caller adds more primes to split them
    std::vector<std::vector<std::vector<CycNum>>> unresolved;
};

/// Simultaneous one-dimensional eigenvectors of the commuting T_p matrices,
/// each normalized so the q^1 coefficient of the combination equals 1.
/// Eigenvalues are found numerically on the exact characteristic polynomial,
/// recognized in Q(zeta_8) with denominators <= 48, and verified exactly by
/// a kernel computation before acceptance.
inline SearchResult eigenform_search(const std::vector<QSeries>& basis,
                                     const std::vector<long long>& primes,
                                     const HeckeContext& ctx) {
    if (primes.empty()) throw std::invalid_argument("eigenform_search: no primes supplied");
    const std::size_t r = basis.size();
    std::map<long long, CycMatrix> mats;
    for (long long p : primes) mats.emplace(p, hecke_matrix(basis, p, ctx));

    // subspaces as lists of column vectors in the basis coordinates
    using Subspace = std::vector<std::vector<CycNum>>;
    Subspace full;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<CycNum> e(r);
        e[i] = CycNum(1);
        full.push_back(std::move(e));
    }
    std::vector<Subspace> spaces{full};

    for (long long p : primes) {
        const CycMatrix& M = mats.at(p);
        std::vector<Subspace> next;
        for (const Subspace& S : spaces) {
            const std::size_t s = S.size();
            if (s == 1) {
                next.push_back(S);
                continue;
            }
            // restriction A of M to S: M * S = S * A, solved column by column
            CycMatrix sys(r, s + s);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < s; ++j) {
                    sys.at(i, j) = S[j][i];
                    CycNum img;
                    for (std::size_t k = 0; k < r; ++k)
                        if (!M.at(i, k).is_zero() && !S[j][k].is_zero())
                            img += M.at(i, k) * S[j][k];
                    sys.at(i, s + j) = img;
                }
            std::vector<std::size_t> pivots;
            sys.row_reduce(&pivots);
            for (std::size_t c : pivots)
                if (c >= s) throw std::domain_error("eigenform_search: span not Hecke-stable");
            if (pivots.size() < s) throw std::domain_error("eigenform_search: basis dependent");
            CycMatrix A(s, s);
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < s; ++j) A.at(i, j) = sys.at(i, s + j);

            // split S along the eigenspaces of A
            auto cp = char_poly(A);
            auto roots = poly_roots(cp);
            std::vector<CycNum> seen;
            std::size_t covered = 0;
            for (auto root : roots) {
                auto cand = detail::recognize(root, 48, 400);
                if (!cand) continue;
                bool dup = false;
                for (const CycNum& s0 : seen) dup = dup || s0 == *cand;
                if (dup) continue;
                CycMatrix shifted = A;
                for (std::size_t i = 0; i < s; ++i) shifted.at(i, i) -= *cand;
                auto ker = kernel_basis(shifted);
                if (ker.empty()) continue;  // numeric candidate was wrong
                seen.push_back(*cand);
                covered += ker.size();
                Subspace sub;
                for (const auto& kv : ker) {
                    std::vector<CycNum> v(r);
                    for (std::size_t j = 0; j < s; ++j)
                        for (std::size_t i = 0; i < r; ++i)
                            if (!kv[j].is_zero() && !S[j][i].is_zero()) v[i] += kv[j] * S[j][i];
                    sub.push_back(std::move(v));
                }
                next.push_back(std::move(sub));
            }
            if (covered < s)
                throw std::domain_error(
                    "eigenform_search: failed to recognize all eigenvalues of T_" +
                    std::to_string(p) + " in Q(zeta_8) with denominator <= 48");
        }
        spaces = std::move(next);
    }

    SearchResult out;
    long long prec = basis[0].prec();
    for (const QSeries& b : basis) prec = std::min(prec, b.prec());
    for (Subspace& S : spaces) {
        if (S.size() > 1) {
            out.unresolved.push_back(std::move(S));
            continue;
        }
        std::vector<CycNum>& v = S[0];
        // normalize the combination to a(1) = 1
        CycNum a1;
        for (std::size_t i = 0; i < r; ++i)
            if (!v[i].is_zero()) a1 += v[i] * basis[i].coefficient(1);
        if (a1.is_zero())
            throw std::domain_error("eigenform_search: eigenvector has vanishing q^1 coefficient");
        CycNum inv = a1.inverse();
        for (auto& x : v) x = inv * x;
        std::vector<CycNum> comb(static_cast<std::size_t>(prec));
        for (std::size_t i = 0; i < r; ++i) {
            if (v[i].is_zero()) continue;
            for (long long n = 0; n < prec; ++n) {
                const CycNum& c = basis[i].coefficient(n);
                if (!c.is_zero()) comb[static_cast<std::size_t>(n)] += v[i] * c;
            }
        }
        QSeries g(1, std::move(comb));
        EigenCheck chk = is_eigenform(g, primes, ctx);
        if (!chk.ok)
            throw std::logic_error("eigenform_search: candidate failed verification at p = " +
                                   std::to_string(chk.bad_prime));
        out.eigenforms.push_back(Eigenform{std::move(v), std::move(chk.eigenvalues)});
    }
    return out;
}

} // namespace etaforms::hecke
