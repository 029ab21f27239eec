/**
 * @file rational.hpp
 * @brief Exact rational arithmetic over arbitrary-precision integers.
 *
 * Rational is the universal numeric type of the library: every invariant
 * (K^2, delta, different contributions 1 - 1/r, degree thresholds d/3) is an
 * exact fraction. Values are reduced eagerly on construction, the denominator
 * is always positive, and there is no floating point anywhere.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace stablepair {

using Int = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}

    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0)
            throw std::domain_error("rational with zero denominator");
        normalize();
    }

    // Accepts "p/q" or "p" with an optional leading minus sign.
    static Rational parse(const std::string& s);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        std::string out = num_.str();
        if (den_ != 1)
            out += "/" + den_.str();
        return out;
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0)
            throw std::domain_error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Denominators are positive, so cross multiplication preserves order.
        Int lhs = a.num_ * b.den_;
        Int rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    Int num_;
    Int den_;

    void normalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

inline Rational Rational::parse(const std::string& s) {
    auto bad = [&]() -> Rational {
        throw std::domain_error("malformed rational '" + s + "', expected p/q or p");
    };
    if (s.empty())
        return bad();
    std::size_t pos = 0;
    auto scan_int = [&](bool allow_sign) -> std::string {
        std::size_t start = pos;
        if (allow_sign && pos < s.size() && s[pos] == '-')
            ++pos;
        std::size_t digits = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            ++pos;
            ++digits;
        }
        if (digits == 0)
            bad();
        return s.substr(start, pos - start);
    };
    std::string num = scan_int(true);
    if (pos == s.size())
        return Rational(Int(num));
    if (s[pos] != '/')
        return bad();
    ++pos;
    std::string den = scan_int(false);
    if (pos != s.size())
        return bad();
    Int d(den);
    if (d == 0)
        return bad();
    return Rational(Int(num), d);
}

}  // namespace stablepair
