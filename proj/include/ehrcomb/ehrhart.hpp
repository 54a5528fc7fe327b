#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ehrcomb/numbers.hpp"
#include "ehrcomb/polynomial.hpp"
#include "ehrcomb/poset.hpp"
#include "ehrcomb/symmetric.hpp"

namespace ehrcomb {

// h*-vector of a d-dimensional lattice polytope: entries 0..d of the
// numerator of the Ehrhart series.
struct HStarVector {
    int dim = 0;
    std::vector<BigInt> entries; // size dim + 1

    friend bool operator==(const HStarVector& a, const HStarVector& b) {
        return a.dim == b.dim && a.entries == b.entries;
    }
    friend bool operator!=(const HStarVector& a, const HStarVector& b) { return !(a == b); }
};

struct EhrhartData {
    int dim = 0;
    Polynomial ehrhart;
    HStarVector hstar;
};

// Number of order-preserving maps p -> {1..k}, counted by depth-first search
// over elements in topological order; each element ranges from the maximum of
// its predecessors' values up to k, so the work is proportional to the number
// of partial maps visited. k = 0 admits only the empty map of the empty poset.
inline BigInt order_polynomial_value(const Poset& p, int k) {
    if (k < 0)
        throw NegativeIndex("order polynomial argument is negative");
    int n = p.size();
    if (n == 0)
        return BigInt(1);
    if (k == 0)
        return BigInt(0);

    // topological element order plus, for each position, the positions of
    // cover-predecessors (their values bound ours from below)
    NaturalLabeling lab = canonical_labeling(p);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e)
        order[static_cast<std::size_t>(lab.labels[static_cast<std::size_t>(e)]) - 1] = e;
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<std::vector<int>> pred_pos(static_cast<std::size_t>(n));
    for (auto [a, b] : p.covers())
        pred_pos[static_cast<std::size_t>(pos[static_cast<std::size_t>(b)])]
            .push_back(pos[static_cast<std::size_t>(a)]);

    BigInt count(0);
    std::vector<int> val(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            ++count;
            return;
        }
        int lb = 1;
        for (int pp : pred_pos[static_cast<std::size_t>(i)])
            lb = std::max(lb, val[static_cast<std::size_t>(pp)]);
        for (int v = lb; v <= k; ++v) {
            val[static_cast<std::size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return count;
}

// Ehrhart polynomial of the order polytope of p: the unique polynomial of
// degree |p| whose value at integer x >= 0 is the number of order-preserving
// maps p -> {1..x+1}. Interpolated from the values at x = 0..|p|.
inline Polynomial ehrhart_polynomial(const Poset& p) {
    int d = p.size();
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(static_cast<std::size_t>(d) + 1);
    for (int x = 0; x <= d; ++x)
        points.emplace_back(Rational(x), Rational(order_polynomial_value(p, x + 1)));
    return interpolate(points);
}

// h*-vector from an Ehrhart polynomial of dimension d, via
//   h*_j = sum_{i=0}^{j} (-1)^i C(d+1, i) ehr(j - i).
// All values involved must be integers.
inline HStarVector hstar_from_polynomial(const Polynomial& ehr, int d) {
    if (d < 0)
        throw NegativeIndex("dimension is negative");
    if (ehr.degree() > d)
        throw SizeExceeded("polynomial degree exceeds the stated dimension");
    std::vector<BigInt> values;
    values.reserve(static_cast<std::size_t>(d) + 1);
    for (int x = 0; x <= d; ++x)
        values.push_back(rational_as_integer(ehr(Rational(x))));
    HStarVector h;
    h.dim = d;
    h.entries.reserve(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        BigInt s(0);
        for (int i = 0; i <= j; ++i) {
            BigInt term = binomial(d + 1, i) * values[static_cast<std::size_t>(j - i)];
            if (i % 2 == 0)
                s += term;
            else
                s -= term;
        }
        h.entries.push_back(std::move(s));
    }
    return h;
}

// Inverse of the extraction: ehr(x) = sum_j h*_j C(x + d - j, d).
inline Polynomial polynomial_from_hstar(const HStarVector& h) {
    Polynomial acc;
    for (int j = 0; j <= h.dim; ++j) {
        const BigInt& hj = h.entries[static_cast<std::size_t>(j)];
        if (hj == 0)
            continue;
        acc += Rational(hj) * binomial_poly(h.dim, Rational(h.dim - j));
    }
    return acc;
}

// Interior counting polynomial q(x) = (-1)^d ehr(-x) for a d-dimensional
// polytope (Ehrhart reciprocity).
inline Polynomial reciprocity_interior(const Polynomial& ehr, int d) {
    if (d < 0)
        throw NegativeIndex("dimension is negative");
    if (ehr.degree() > d)
        throw SizeExceeded("polynomial degree exceeds the stated dimension");
    std::vector<Rational> c = ehr.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i)
        if ((static_cast<int>(i) + d) % 2 == 1)
            c[i] = -c[i];
    return Polynomial(std::move(c));
}

// Linear coefficient of ehr(x-1) read off the h*-vector alone:
//   (-1)^{d-1} h*_d H_d + (1/d) sum_{j=0}^{d-1} (-1)^j h*_j / C(d-1, j).
inline Rational linear_coeff_shifted_from_hstar(const HStarVector& h) {
    int d = h.dim;
    if (d < 1)
        throw ZeroDimension("formula needs dimension at least 1");
    Rational s(0);
    for (int j = 0; j <= d - 1; ++j) {
        Rational term = Rational(h.entries[static_cast<std::size_t>(j)]) / Rational(binomial(d - 1, j));
        s += (j % 2 == 0) ? term : -term;
    }
    Rational top = Rational(h.entries[static_cast<std::size_t>(d)]) * harmonic(d);
    if (d % 2 == 0)
        top = -top;
    return top + s / Rational(d);
}

// Linear coefficient of ehr(x) itself, valid when h*_0 = 1:
//   H_d + (1/d) sum_{j=1}^{d} (-1)^{j-1} h*_j / C(d-1, j-1).
inline Rational linear_coeff_from_hstar(const HStarVector& h) {
    int d = h.dim;
    if (d < 1)
        throw ZeroDimension("formula needs dimension at least 1");
    if (h.entries[0] != 1)
        throw BadHZero("formula needs h*_0 = 1");
    Rational s(0);
    for (int j = 1; j <= d; ++j) {
        Rational term = Rational(h.entries[static_cast<std::size_t>(j)]) / Rational(binomial(d - 1, j - 1));
        s += (j % 2 == 1) ? term : -term;
    }
    return harmonic(d) + s / Rational(d);
}

inline EhrhartData ehrhart_data_from_polynomial(Polynomial ehr, int d) {
    EhrhartData data;
    data.dim = d;
    data.hstar = hstar_from_polynomial(ehr, d);
    data.ehrhart = std::move(ehr);
    return data;
}

// Full brute-force route: dimension |p|, interpolated polynomial, extracted
// h*-vector.
inline EhrhartData ehrhart_data(const Poset& p) {
    return ehrhart_data_from_polynomial(ehrhart_polynomial(p), p.size());
}

namespace detail {

inline std::vector<BigInt> ehrhart_values(const Polynomial& ehr, int from, int to) {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(to - from + 1));
    for (int x = from; x <= to; ++x)
        out.push_back(rational_as_integer(ehr(Rational(x))));
    return out;
}

} // namespace detail

// Ehrhart value at x = k of the order polytope of bicomb_over(p, r, n),
// computed without building the big poset: the complete homogeneous h_n of
// the products ehr_p(i) * ehr_r(k - i), i = 0..k, where ehr_p and ehr_r are
// the Ehrhart polynomials of the two attached posets.
inline BigInt comb_ehrhart_value(const Polynomial& ehr_p, const Polynomial& ehr_r, int n, int k) {
    if (n < 0)
        throw NegativeIndex("number of copies is negative");
    if (k < 0)
        throw NegativeIndex("Ehrhart argument is negative");
    std::vector<BigInt> values;
    values.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i)
        values.push_back(rational_as_integer(ehr_p(Rational(i)))
                         * rational_as_integer(ehr_r(Rational(k - i))));
    return complete_homogeneous<BigInt>(n, values);
}

inline BigInt comb_ehrhart_value(const Poset& p, const Poset& r, int n, int k) {
    return comb_ehrhart_value(ehrhart_polynomial(p), ehrhart_polynomial(r), n, k);
}

// Ehrhart polynomial of the order polytope of bicomb_over(p, r, n) by
// interpolating the fast values at x = 0..dim, dim = n(|p| + |r| + 1).
inline Polynomial comb_ehrhart_polynomial(const Polynomial& ehr_p, int p_size,
                                          const Polynomial& ehr_r, int r_size, int n) {
    if (n < 0)
        throw NegativeIndex("number of copies is negative");
    int dim = n * (p_size + r_size + 1);
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(static_cast<std::size_t>(dim) + 1);
    for (int x = 0; x <= dim; ++x)
        points.emplace_back(Rational(x), Rational(comb_ehrhart_value(ehr_p, ehr_r, n, x)));
    return interpolate(points);
}

inline Polynomial comb_ehrhart_polynomial(const Poset& p, const Poset& r, int n) {
    return comb_ehrhart_polynomial(ehrhart_polynomial(p), p.size(), ehrhart_polynomial(r), r.size(), n);
}

// Order-preserving maps stirling_poset(k, r) -> {1..m}, counted by a
// prefix-sum sweep along the spine; spine position j picks up a factor of
// its value whenever a tooth attaches there (j = 1, r, 2r-1, ...).
inline BigInt stirling_order_value(int k, int r, int m) {
    if (k < 0)
        throw NegativeIndex("number of copies is negative");
    if (r < 1)
        throw IndexTooSmall("multiplicity must be at least 1");
    if (m < 0)
        throw NegativeIndex("map range is negative");
    if (k == 0)
        return 1;
    if (m == 0)
        return 0;
    if (r == 1) { // teeth only: every element maps freely
        BigInt out(1);
        for (int i = 0; i < k; ++i)
            out *= m;
        return out;
    }
    std::vector<BigInt> dp(static_cast<std::size_t>(m) + 1, BigInt(0));
    for (int v = 1; v <= m; ++v)
        dp[static_cast<std::size_t>(v)] = v;
    int len = k * (r - 1);
    for (int j = 2; j <= len; ++j) {
        for (int v = 2; v <= m; ++v)
            dp[static_cast<std::size_t>(v)] += dp[static_cast<std::size_t>(v) - 1];
        if ((j - 1) % (r - 1) == 0)
            for (int v = 1; v <= m; ++v)
                dp[static_cast<std::size_t>(v)] *= v;
    }
    BigInt total(0);
    for (int v = 1; v <= m; ++v)
        total += dp[static_cast<std::size_t>(v)];
    return total;
}

// Ehrhart polynomial of O(stirling_poset(k, r)) by interpolating the sweep
// values; avoids enumerating the k*r-element poset.
inline Polynomial stirling_ehrhart_polynomial(int k, int r) {
    if (k < 0)
        throw NegativeIndex("number of copies is negative");
    if (r < 1)
        throw IndexTooSmall("multiplicity must be at least 1");
    int dim = k * r;
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(static_cast<std::size_t>(dim) + 1);
    for (int x = 0; x <= dim; ++x)
        points.emplace_back(Rational(x), Rational(stirling_order_value(k, r, x + 1)));
    return interpolate(points);
}

// Interior lattice-point count of the k-th dilate of the order polytope of
// comb_over(p, n): the elementary symmetric e_n of the interior values
// (-1)^{|p|} ehr_p(-j), j = 1..k-1. Zero for k <= n by e_n on a short list.
inline BigInt open_comb_interior_value(const Polynomial& ehr_p, int p_size, int n, int k) {
    if (n < 0)
        throw NegativeIndex("number of copies is negative");
    if (k < 0)
        throw NegativeIndex("Ehrhart argument is negative");
    std::vector<BigInt> values;
    for (int j = 1; j <= k - 1; ++j) {
        BigInt v = rational_as_integer(ehr_p(Rational(-j)));
        if (p_size % 2 == 1)
            v = -v;
        values.push_back(std::move(v));
    }
    return elementary_symmetric<BigInt>(n, values);
}

inline BigInt open_comb_interior_value(const Poset& p, int n, int k) {
    return open_comb_interior_value(ehrhart_polynomial(p), p.size(), n, k);
}

// S_i(x) = sum_{j=0}^{x} ehr_p(j)^i as a polynomial.
inline Polynomial power_sum_polynomial(const Polynomial& ehr_p, int i) {
    if (i < 1)
        throw IndexTooSmall("power-sum index must be at least 1");
    return discrete_sum(power(ehr_p, i));
}

inline Polynomial power_sum_polynomial(const Poset& p, int i) {
    return power_sum_polynomial(ehrhart_polynomial(p), i);
}

// The two linear coefficients of the Ehrhart polynomial of comb_over(p, n)'s
// order polytope, straight from the power sums of ehr_p:
//   first  = [x] S_n(x - 1) / n,
//   second = sum_{i=1}^{n} [x] S_i(x) / i.
inline std::pair<Rational, Rational> comb_linear_coeffs(const Polynomial& ehr_p, int n) {
    if (n < 1)
        throw IndexTooSmall("number of copies must be at least 1");
    Rational first(0), second(0);
    Polynomial pw = Polynomial::constant(Rational(1));
    for (int i = 1; i <= n; ++i) {
        pw *= ehr_p;
        Polynomial s = discrete_sum(pw);
        if (i == n)
            first = linear_coeff(shift(s, Rational(-1))) / Rational(n);
        second += linear_coeff(s) / Rational(i);
    }
    return {first, second};
}

inline std::pair<Rational, Rational> comb_linear_coeffs(const Poset& p, int n) {
    return comb_linear_coeffs(ehrhart_polynomial(p), n);
}

} // namespace ehrcomb
