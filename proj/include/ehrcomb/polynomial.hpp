#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ehrcomb/rational.hpp"

namespace ehrcomb {

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending degree order. The zero polynomial has an empty coefficient list
// and degree -1; trailing zero coefficients are trimmed on construction.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

    static Polynomial constant(const Rational& a) { return Polynomial({a}); }

    // a * x^degree
    static Polynomial monomial(int degree, const Rational& a = Rational(1)) {
        if (degree < 0)
            throw NegativeDegree("monomial degree is negative");
        if (a.is_zero())
            return Polynomial();
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
        c.back() = a;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational coefficient(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }

    // Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += c_[i];
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rational& a) {
        if (a.is_zero()) {
            c_.clear();
            return *this;
        }
        for (Rational& ci : c_)
            ci *= a;
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(Polynomial p, const Rational& a) { p *= a; return p; }
    friend Polynomial operator*(const Rational& a, Polynomial p) { p *= a; return p; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero())
            return Polynomial();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

    // Renders e.g. "1/6*x^3 + 1/2*x^2 + 1/3*x" with terms in descending degree.
    std::string str() const {
        if (c_.empty())
            return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rational& a = c_[i];
            if (a.is_zero())
                continue;
            Rational mag = a.sign() < 0 ? -a : a;
            if (s.empty())
                s += a.sign() < 0 ? "-" : "";
            else
                s += a.sign() < 0 ? " - " : " + ";
            bool unit = (mag == Rational(1)) && i > 0;
            if (!unit)
                s += mag.str();
            if (i > 0) {
                if (!unit)
                    s += "*";
                s += "x";
                if (i > 1)
                    s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Coefficient of x^1.
inline Rational linear_coeff(const Polynomial& p) { return p.coefficient(1); }

// p(x + a), expanded exactly via Horner in the shifted variable.
inline Polynomial shift(const Polynomial& p, const Rational& a) {
    Polynomial acc;
    Polynomial lin({a, Rational(1)}); // x + a
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * lin;
        acc += Polynomial::constant(c[i]);
    }
    return acc;
}

// Unique polynomial of degree < points.size() through the given nodes.
// Computed via the master product and exact synthetic division, so the result
// is exact; repeated abscissae raise DuplicateNode.
inline Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    const std::size_t n = points.size();
    if (n == 0)
        return Polynomial();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw DuplicateNode("repeated interpolation node " + points[i].first.str());

    // master(x) = prod_i (x - x_i), coefficients master[0..n]
    std::vector<Rational> master(n + 1, Rational(0));
    master[0] = Rational(1);
    std::size_t deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = deg + 2; j-- > 1;)
            master[j] = master[j - 1] - points[i].first * master[j];
        master[0] = -points[i].first * master[0];
        ++deg;
    }

    std::vector<Rational> result(n, Rational(0));
    std::vector<Rational> q(n, Rational(0)); // master / (x - x_i)
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& xi = points[i].first;
        q[n - 1] = master[n];
        for (std::size_t j = n - 1; j-- > 0;)
            q[j] = master[j + 1] + xi * q[j + 1];
        Rational w(0); // q(x_i) = prod_{j != i} (x_i - x_j)
        for (std::size_t j = n; j-- > 0;) {
            w *= xi;
            w += q[j];
        }
        Rational scale = points[i].second / w;
        for (std::size_t j = 0; j < n; ++j)
            result[j] += scale * q[j];
    }
    return Polynomial(std::move(result));
}

// q with q(k) = sum_{j=0}^{k} p(j) for every integer k >= 0; q has degree
// deg(p) + 1 and is obtained by interpolating partial sums.
inline Polynomial discrete_sum(const Polynomial& p) {
    if (p.is_zero())
        return Polynomial();
    int d = p.degree();
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(static_cast<std::size_t>(d) + 2);
    Rational acc(0);
    for (int k = 0; k <= d + 1; ++k) {
        acc += p(Rational(k));
        points.emplace_back(Rational(k), acc);
    }
    return interpolate(points);
}

// p^e by repeated multiplication (exact).
inline Polynomial power(const Polynomial& p, int e) {
    if (e < 0)
        throw NegativeDegree("polynomial power is negative");
    Polynomial acc = Polynomial::constant(Rational(1));
    for (int i = 0; i < e; ++i)
        acc *= p;
    return acc;
}

// Binomial-coefficient polynomial C(x + offset, d) =
// (x+offset)(x+offset-1)...(x+offset-d+1) / d! ; C(x+offset, 0) = 1.
inline Polynomial binomial_poly(int d, const Rational& offset) {
    if (d < 0)
        throw NegativeDegree("binomial polynomial degree is negative");
    Polynomial acc = Polynomial::constant(Rational(1));
    Rational dfact(1);
    for (int i = 0; i < d; ++i) {
        acc *= Polynomial({offset - Rational(i), Rational(1)});
        dfact *= Rational(i + 1);
    }
    acc *= Rational(1) / dfact;
    return acc;
}

} // namespace ehrcomb
