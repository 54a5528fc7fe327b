#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "ehrcomb/errors.hpp"

namespace ehrcomb {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always kept in lowest terms with a positive
// denominator; construction from a zero denominator throws ZeroDenominator
// instead of producing a singular value.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
    Rational(BigInt n) : v_(std::move(n)) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw ZeroDenominator("rational denominator is zero");
        // The backend rejects a negative denominator at construction, so
        // normalize via exact division instead.
        v_ = Backend(num);
        v_ /= Backend(den);
    }
    Rational(long long num, long long den)
        : Rational(BigInt(static_cast<std::int64_t>(num)), BigInt(static_cast<std::int64_t>(den))) {}

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw ZeroDenominator("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Renders "p/q" in lowest terms, or just "p" for integers.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer())
            s += "/" + denominator().str();
        return s;
    }

    static Rational parse(std::string_view s);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    using Backend = boost::multiprecision::cpp_rational;
    Backend v_;
};

namespace detail {

inline BigInt parse_big_int(std::string_view s, std::size_t offset) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        throw ParseError("expected an integer", offset + i);
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw ParseError("unexpected character in integer", offset + j);
    return BigInt(std::string(s));
}

} // namespace detail

inline Rational Rational::parse(std::string_view s) {
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(detail::parse_big_int(s, 0));
    BigInt num = detail::parse_big_int(s.substr(0, slash), 0);
    BigInt den = detail::parse_big_int(s.substr(slash + 1), slash + 1);
    if (den == 0)
        throw ParseError("denominator is zero", slash + 1);
    return Rational(num, den);
}

// Converts an exact rational known to be integral; throws NonIntegral if a
// fractional part is present (used where lattice-point counts are expected).
inline BigInt rational_as_integer(const Rational& r) {
    if (!r.is_integer())
        throw NonIntegral("expected an integer, got " + r.str());
    return r.numerator();
}

} // namespace ehrcomb
