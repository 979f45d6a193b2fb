#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace etaforms {

using Bigint = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always reduced, denominator >= 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(Bigint n) : num_(std::move(n)), den_(1) {}
    Rat(Bigint n, Bigint d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Bigint& num() const { return num_; }
    const Bigint& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat& operator+=(const Rat& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ += o.num_;
            return *this;
        }
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ -= o.num_;
            return *this;
        }
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        if (den_ != 1) reduce();
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        reduce();
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    Rat inverse() const {
        if (num_ == 0) throw std::domain_error("Rat: inverse of zero");
        return Rat(den_, num_);
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Parses "n" or "n/d".
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Bigint(s));
        return Rat(Bigint(s.substr(0, slash)), Bigint(s.substr(slash + 1)));
    }

private:
    void reduce() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Bigint g = boost::multiprecision::gcd(num_ < 0 ? Bigint(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Bigint num_;
    Bigint den_;
};

} // namespace etaforms
