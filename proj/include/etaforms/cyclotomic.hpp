#pragma once

#include "etaforms/rational.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace etaforms {

/// Element of Q(zeta_8), coordinates in the basis {1, z, z^2, z^3} with
/// z = e^{i pi/4}, so z^4 = -1.  In particular i = z^2, sqrt(2) = z - z^3,
/// i*sqrt(2) = z + z^3.  The representation is unique, so equality is
/// coordinatewise.
class CycNum {
public:
    CycNum() : c_{} {}
    CycNum(long long n) : c_{Rat(n), Rat(), Rat(), Rat()} {}
    CycNum(Rat r) : c_{std::move(r), Rat(), Rat(), Rat()} {}
    CycNum(Rat a, Rat b, Rat c, Rat d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static CycNum i() { return CycNum(Rat(0), Rat(0), Rat(1), Rat(0)); }
    static CycNum sqrt2() { return CycNum(Rat(0), Rat(1), Rat(0), Rat(-1)); }
    static CycNum i_sqrt2() { return CycNum(Rat(0), Rat(1), Rat(0), Rat(1)); }
    /// z^k for any integer k (z^8 = 1, z^4 = -1).
    static CycNum zeta_pow(long long k) {
        k %= 8;
        if (k < 0) k += 8;
        CycNum r;
        Rat one(k < 4 ? 1 : -1);
        r.c_[k % 4] = one;
        return r;
    }

    const Rat& coord(int k) const { return c_[k]; }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    bool is_rational() const {
        return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    const Rat& rational_part() const { return c_[0]; }

    CycNum operator-() const { return CycNum(-c_[0], -c_[1], -c_[2], -c_[3]); }

    CycNum& operator+=(const CycNum& o) {
        for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
        return *this;
    }
    CycNum& operator-=(const CycNum& o) {
        for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
        return *this;
    }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        // convolution with z^4 = -1
        std::array<Rat, 4> r{};
        for (int j = 0; j < 4; ++j) {
            if (a.c_[j].is_zero()) continue;
            for (int k = 0; k < 4; ++k) {
                if (b.c_[k].is_zero()) continue;
                Rat t = a.c_[j] * b.c_[k];
                int e = j + k;
                if (e >= 4) r[e - 4] -= t;
                else r[e] += t;
            }
        }
        return CycNum(std::move(r[0]), std::move(r[1]), std::move(r[2]), std::move(r[3]));
    }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    /// Galois conjugate z -> z^k, k odd.
    CycNum galois(int k) const {
        switch (k & 7) {
            case 1: return *this;
            case 3: return CycNum(c_[0], c_[3], -c_[2], c_[1]);
            case 5: return CycNum(c_[0], -c_[1], c_[2], -c_[3]);
            case 7: return CycNum(c_[0], -c_[3], -c_[2], -c_[1]);
            default: throw std::invalid_argument("CycNum::galois: k must be odd");
        }
    }

    /// Complex conjugation (= galois(7)).
    CycNum conj() const { return galois(7); }

    /// Field norm to Q as a rational: product of all four conjugates.
    Rat norm_q() const {
        CycNum n = *this * galois(3) * galois(5) * galois(7);
        return n.c_[0];
    }

    /// |x|^2 = x * conj(x), rational for elements closed under conjugation pairs.
    CycNum abs_square() const { return *this * conj(); }

    CycNum inverse() const {
        if (is_zero()) throw std::domain_error("CycNum: division by zero");
        CycNum y = galois(3) * galois(5) * galois(7);
        CycNum n = *this * y;
        // n is the field norm, a nonzero rational
        Rat inv = n.c_[0].inverse();
        return CycNum(y.c_[0] * inv, y.c_[1] * inv, y.c_[2] * inv, y.c_[3] * inv);
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
    CycNum& operator/=(const CycNum& o) { return *this = *this * o.inverse(); }

    friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }
    friend bool operator<(const CycNum& a, const CycNum& b) {
        for (int k = 0; k < 4; ++k) {
            if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
        }
        return false;
    }

    std::complex<double> to_complex() const {
        static const double h = std::sqrt(2.0) / 2.0;
        double x = c_[0].to_double() + (c_[1].to_double() - c_[3].to_double()) * h;
        double y = c_[2].to_double() + (c_[1].to_double() + c_[3].to_double()) * h;
        return {x, y};
    }

    /// 4-tuple wire encoding, basis order {1, z, z^2, z^3}.
    std::array<std::string, 4> to_tuple() const {
        return {c_[0].str(), c_[1].str(), c_[2].str(), c_[3].str()};
    }
    static CycNum from_tuple(const std::array<std::string, 4>& t) {
        return CycNum(Rat::parse(t[0]), Rat::parse(t[1]), Rat::parse(t[2]), Rat::parse(t[3]));
    }

    /// Compact display: plain rational when rational, "(a,b,c,d)" otherwise.
    std::string str() const {
        if (is_rational()) return c_[0].str();
        return "(" + c_[0].str() + "," + c_[1].str() + "," + c_[2].str() + "," + c_[3].str() + ")";
    }
    static CycNum parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("CycNum::parse: empty string");
        if (s.front() != '(') return CycNum(Rat::parse(s));
        if (s.back() != ')') throw std::invalid_argument("CycNum::parse: bad tuple: " + s);
        std::array<std::string, 4> parts;
        std::size_t pos = 1;
        for (int k = 0; k < 4; ++k) {
            std::size_t end = (k == 3) ? s.size() - 1 : s.find(',', pos);
            if (end == std::string::npos) throw std::invalid_argument("CycNum::parse: bad tuple: " + s);
            parts[k] = s.substr(pos, end - pos);
            pos = end + 1;
        }
        return from_tuple(parts);
    }

    /// Human form in the {1, i, sqrt2, i*sqrt2} basis, e.g. "i*sqrt(2)", "-2".
    std::string pretty() const;

private:
    std::array<Rat, 4> c_;
};

inline std::string CycNum::pretty() const {
    Rat a = c_[0];
    Rat b = c_[2];
    Rat half(Bigint(1), Bigint(2));
    Rat s = (c_[1] - c_[3]) * half;  // sqrt(2) coefficient
    Rat t = (c_[1] + c_[3]) * half;  // i*sqrt(2) coefficient
    auto term = [](const Rat& r, const char* unit, bool first) -> std::string {
        if (r.is_zero()) return "";
        std::string out;
        if (!first) out += (r.sign() > 0) ? "+" : "-";
        else if (r.sign() < 0) out += "-";
        Rat ar = r.abs();
        if (!(ar == Rat(1)) || unit[0] == '\0') out += ar.str();
        if (!(ar == Rat(1)) && unit[0] != '\0') out += "*";
        out += unit;
        return out;
    };
    std::string out;
    out += term(a, "", true);
    out += term(b, "i", out.empty());
    out += term(s, "sqrt(2)", out.empty());
    out += term(t, "i*sqrt(2)", out.empty());
    return out.empty() ? "0" : out;
}

} // namespace etaforms
