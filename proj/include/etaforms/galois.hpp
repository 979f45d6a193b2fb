#pragma once

#include "etaforms/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace etaforms::galois {

/// Full Kronecker symbol (a/n), completely multiplicative in n, with the
/// standard conventions for n = 0, -1 and 2.
inline int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int k = 1;
    long long v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v % 2 != 0) {
        long long r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) k = -k;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // now n odd and positive: standard Jacobi flip
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 != 0 && (n % 8 == 3 || n % 8 == 5)) k = -k;
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        long long t = a;
        a = n % t;
        n = t;
    }
    return n == 1 ? k : 0;
}

/// Integer polynomial, coefficients low-to-high degree.
struct IntPoly {
    std::vector<Bigint> c;

    long long degree() const {
        for (long long d = static_cast<long long>(c.size()) - 1; d >= 0; --d)
            if (c[static_cast<std::size_t>(d)] != 0) return d;
        return -1;
    }

    static IntPoly parse(const std::string& csv) {
        IntPoly h;
        std::stringstream ss(csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto b = tok.find_first_not_of(" \t");
            auto e = tok.find_last_not_of(" \t");
            if (b == std::string::npos) throw std::invalid_argument("IntPoly: empty coefficient");
            h.c.emplace_back(tok.substr(b, e - b + 1));
        }
        if (h.degree() < 0) throw std::invalid_argument("IntPoly: zero polynomial");
        return h;
    }

    std::string str() const {
        std::string out;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) out += ",";
            out += c[k].str();
        }
        return out;
    }
};

/// Multiset of irreducible factor degrees of h mod p, sorted ascending.
using SplitType = std::vector<int>;

namespace detail {

// dense polynomials over F_p, low-to-high, no leading zeros
using PolyP = std::vector<std::uint64_t>;

inline void normalize(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PolyP reduce_mod(const IntPoly& h, long long p) {
    PolyP f(h.c.size());
    for (std::size_t k = 0; k < h.c.size(); ++k) {
        Bigint r = h.c[k] % p;
        if (r < 0) r += p;
        f[k] = r.convert_to<std::uint64_t>();
    }
    normalize(f);
    return f;
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
        b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return powmod_u64(a, p - 2, p); }

inline PolyP mul(const PolyP& a, const PolyP& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = static_cast<std::uint64_t>(
                (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p);
        }
    }
    normalize(r);
    return r;
}

inline void rem_inplace(PolyP& a, const PolyP& f, std::uint64_t p) {
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a.back()) * lead_inv) % p);
        if (q != 0) {
            std::size_t shift = a.size() - 1 - df;
            for (std::size_t k = 0; k < f.size(); ++k) {
                unsigned __int128 t = static_cast<unsigned __int128>(q) * f[k] % p;
                std::uint64_t& dst = a[shift + k];
                dst = (dst + p - static_cast<std::uint64_t>(t)) % p;
            }
        }
        a.pop_back();
        normalize(a);
        if (a.empty()) return;
    }
}

inline PolyP mulmod(const PolyP& a, const PolyP& b, const PolyP& f, std::uint64_t p) {
    PolyP r = mul(a, b, p);
    rem_inplace(r, f, p);
    return r;
}

inline PolyP gcd(PolyP a, PolyP b, std::uint64_t p) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        rem_inplace(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint64_t inv = inv_mod(a.back(), p);
        for (auto& x : a) x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * inv) % p);
    }
    return a;
}

inline PolyP derivative(const PolyP& f, std::uint64_t p) {
    PolyP d;
    for (std::size_t k = 1; k < f.size(); ++k)
        d.push_back(static_cast<std::uint64_t>((static_cast<unsigned __int128>(f[k]) * (k % p)) % p));
    normalize(d);
    return d;
}

// x^(p^e) mod f, iterating Frobenius from a given power of x
inline PolyP frobenius_step(const PolyP& w, const PolyP& f, std::uint64_t p) {
    // w^p mod f by square-and-multiply on the exponent p
    PolyP r{1};
    PolyP base = w;
    std::uint64_t e = p;
    while (e) {
        if (e & 1) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline PolyP divide_exact(const PolyP& a, const PolyP& b, std::uint64_t p) {
    PolyP rem = a;
    PolyP q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (rem.size() >= b.size() && !rem.empty()) {
        std::uint64_t qc = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(rem.back()) * lead_inv) % p);
        std::size_t shift = rem.size() - b.size();
        q[shift] = qc;
        for (std::size_t k = 0; k < b.size(); ++k) {
            unsigned __int128 t = static_cast<unsigned __int128>(qc) * b[k] % p;
            rem[shift + k] = (rem[shift + k] + p - static_cast<std::uint64_t>(t)) % p;
        }
        normalize(rem);
        if (rem.size() < b.size()) break;
    }
    if (!rem.empty()) throw std::logic_error("galois: inexact polynomial division");
    normalize(q);
    return q;
}

} // namespace detail

/// Factor-degree multiset of h mod p via distinct-degree factorization;
/// std::nullopt when p ramifies (h mod p not squarefree).  Degree counting
/// only, no root extraction, so the result is deterministic.
inline std::optional<SplitType> split_type(const IntPoly& h, long long p) {
    if (h.degree() < 1) throw std::invalid_argument("split_type: polynomial must be nonconstant");
    if (h.c[static_cast<std::size_t>(h.degree())] % p == 0)
        throw std::invalid_argument("split_type: p divides the leading coefficient");
    const std::uint64_t up = static_cast<std::uint64_t>(p);
    detail::PolyP f = detail::reduce_mod(h, p);
    // make monic
    if (f.back() != 1) {
        std::uint64_t inv = detail::inv_mod(f.back(), up);
        for (auto& x : f)
            x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * inv) % up);
    }
    detail::PolyP d = detail::derivative(f, up);
    detail::PolyP g = detail::gcd(f, d, up);
    if (g.size() != 1) return std::nullopt;  // ramified: p divides disc(h)

    SplitType degrees;
    detail::PolyP w{0, 1};  // x
    detail::rem_inplace(w, f, up);
    int d_stage = 0;
    while (f.size() > 1) {
        ++d_stage;
        long long remaining = static_cast<long long>(f.size()) - 1;
        if (2LL * d_stage > remaining) {
            degrees.push_back(static_cast<int>(remaining));
            break;
        }
        w = detail::frobenius_step(w, f, up);
        // gcd(w - x, f) collects all irreducible factors of degree d_stage
        detail::PolyP wx = w;
        if (wx.size() < 2) wx.resize(2, 0);
        wx[1] = (wx[1] + up - 1) % up;
        detail::normalize(wx);
        detail::PolyP fac = detail::gcd(wx, f, up);
        if (fac.size() > 1) {
            long long deg = static_cast<long long>(fac.size()) - 1;
            for (long long k = 0; k < deg / d_stage; ++k) degrees.push_back(d_stage);
            f = detail::divide_exact(f, fac, up);
            detail::rem_inplace(w, f, up);
        }
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

/// Residue degree of p in the compositum of the splitting fields of the
/// given polynomials: lcm over polynomials of the lcm of factor degrees.
/// std::nullopt when any polynomial reports ramification.
inline std::optional<long long> frobenius_order(const std::vector<IntPoly>& polys, long long p) {
    if (polys.empty()) throw std::invalid_argument("frobenius_order: empty polynomial list");
    long long f_p = 1;
    for (const IntPoly& h : polys) {
        auto st = split_type(h, p);
        if (!st) return std::nullopt;
        for (int d : *st) f_p = std::lcm(f_p, static_cast<long long>(d));
    }
    return f_p;
}

/// Number of primes above p in O_L for unramified p: |G| / f_p.
inline long long splitting_count(long long group_order, long long f_p) {
    if (f_p < 1 || group_order % f_p != 0)
        throw std::domain_error("splitting_count: residue degree " + std::to_string(f_p) +
                                " does not divide the group order " + std::to_string(group_order));
    return group_order / f_p;
}

} // namespace etaforms::galois
