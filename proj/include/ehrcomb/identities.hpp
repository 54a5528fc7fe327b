#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ehrcomb/ehrhart.hpp"
#include "ehrcomb/numbers.hpp"
#include "ehrcomb/poset.hpp"
#include "ehrcomb/stirling_permutations.hpp"

namespace ehrcomb {

// Outcome of one identity check. lhs and rhs always come from computationally
// independent paths; the *_path fields say which. Values are rendered exactly
// (rationals in lowest terms, vectors elementwise), so a report is
// self-contained evidence.
struct IdentityReport {
    std::string name;
    std::string params;
    std::string lhs;
    std::string rhs;
    std::string lhs_path;
    std::string rhs_path;
    bool pass = false;
};

namespace detail {

inline std::string vec_str(const std::vector<BigInt>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

inline std::vector<BigInt> pad(std::vector<BigInt> v, std::size_t len) {
    if (v.size() < len)
        v.resize(len, BigInt(0));
    return v;
}

inline std::string eulerian_path_label(int n, int threshold) {
    return n <= threshold ? "second-order Eulerian row by word enumeration"
                          : "second-order Eulerian row by gated recurrence";
}

} // namespace detail

// 2 B_n = sum_{j=0}^{n-1} (-1)^j E2(n, j) / C(2n-1, j).
inline IdentityReport verify_bernoulli_descent_sum(int n, int enumeration_threshold = 8) {
    IdentityReport rep;
    rep.name = "bernoulli-descent-sum";
    rep.params = "n=" + std::to_string(n);
    Rational lhs = Rational(2) * bernoulli(n);
    DescentVector row = second_eulerian_row(n, enumeration_threshold);
    Rational rhs(0);
    for (int j = 0; j < n; ++j) {
        Rational term = j < static_cast<int>(row.size())
                            ? Rational(row[static_cast<std::size_t>(j)]) / Rational(binomial(2 * n - 1, j))
                            : Rational(0);
        rhs += (j % 2 == 0) ? term : -term;
    }
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.lhs_path = "Bernoulli recursion";
    rep.rhs_path = "alternating binomial-weighted sum over the " + detail::eulerian_path_label(n, enumeration_threshold);
    rep.pass = lhs == rhs;
    return rep;
}

// sum_{j=1}^{n} B_j / j
//   = H_{2n} - n + (1/2n) sum_{j=1}^{n-1} (-1)^{j-1} E2(n, j) / C(2n-1, j-1).
inline IdentityReport verify_bernoulli_harmonic_sum(int n, int enumeration_threshold = 8) {
    IdentityReport rep;
    rep.name = "bernoulli-harmonic-sum";
    rep.params = "n=" + std::to_string(n);
    Rational lhs(0);
    for (int j = 1; j <= n; ++j)
        lhs += bernoulli(j) / Rational(j);
    DescentVector row = second_eulerian_row(n, enumeration_threshold);
    Rational rhs = harmonic(2 * n) - Rational(n);
    Rational s(0);
    for (int j = 1; j <= n - 1; ++j) {
        Rational term = j < static_cast<int>(row.size())
                            ? Rational(row[static_cast<std::size_t>(j)]) / Rational(binomial(2 * n - 1, j - 1))
                            : Rational(0);
        s += (j % 2 == 1) ? term : -term;
    }
    rhs += s / Rational(2 * n);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.lhs_path = "partial sums of Bernoulli recursion values";
    rep.rhs_path = "harmonic number plus weighted sum over the " + detail::eulerian_path_label(n, enumeration_threshold);
    rep.pass = lhs == rhs;
    return rep;
}

// Ehr of the comb order polytope at k-1 agrees with h_n(1..k) and with the
// Stirling-set-partition triangle value {n+k, k}; for small combs the
// polynomial comes from brute-force lattice counting, and the raw count is
// compared as a fourth path.
inline IdentityReport verify_comb_count_agreement(int n, int k, int brute_max_size = 7) {
    IdentityReport rep;
    rep.name = "comb-count-agreement";
    rep.params = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    bool brute_poly = 2 * n <= brute_max_size;
    Polynomial ehr = brute_poly ? ehrhart_polynomial(make_comb(n))
                                : comb_ehrhart_polynomial(make_chain(1), Poset(), n);
    BigInt lhs = rational_as_integer(ehr(Rational(k - 1)));

    std::vector<BigInt> one_to_k;
    for (int v = 1; v <= k; ++v)
        one_to_k.push_back(BigInt(v));
    BigInt via_h = complete_homogeneous<BigInt>(n, one_to_k);
    BigInt via_triangle = stirling_second(n + k, k);

    rep.pass = lhs == via_h && lhs == via_triangle;
    if (brute_poly && k <= 7) {
        BigInt direct = order_polynomial_value(make_comb(n), k);
        rep.pass = rep.pass && lhs == direct;
    }
    rep.lhs = lhs.str();
    rep.rhs = via_h.str() + (via_h == via_triangle ? "" : " / " + via_triangle.str());
    rep.lhs_path = brute_poly ? "interpolated brute-force lattice counts (plus direct count for small k)"
                              : "interpolated symmetric-specialization values";
    rep.rhs_path = "complete homogeneous prefix table; Stirling second-kind triangle";
    return rep;
}

// Three independent routes to the h*-vector of the comb order polytope:
// extraction from the fast-path polynomial, the second-order Eulerian row,
// and descent counting over linear extensions of the comb poset.
inline IdentityReport verify_comb_hstar_three_way(int n, int enumeration_threshold = 8) {
    IdentityReport rep;
    rep.name = "comb-hstar-three-way";
    rep.params = "n=" + std::to_string(n);
    std::size_t len = static_cast<std::size_t>(2 * n) + 1;
    HStarVector h = hstar_from_polynomial(comb_ehrhart_polynomial(make_chain(1), Poset(), n), 2 * n);
    std::vector<BigInt> a = h.entries;
    std::vector<BigInt> b = detail::pad(second_eulerian_row(n, enumeration_threshold), len);
    std::vector<BigInt> c = detail::pad(descent_enumerator(make_comb(n)), len);
    rep.lhs = detail::vec_str(a);
    rep.rhs = detail::vec_str(b) + (b == c ? "" : " / " + detail::vec_str(c));
    rep.lhs_path = "h* extraction from the fast-path Ehrhart polynomial";
    rep.rhs_path = detail::eulerian_path_label(n, enumeration_threshold) + "; descent enumerator over linear extensions";
    rep.pass = a == b && a == c;
    return rep;
}

// Linear coefficients of the comb Ehrhart polynomial against the Bernoulli
// closed forms: [x] Ehr(x-1) = B_n / n and [x] Ehr(x) = n + sum_{j<=n} B_j / j.
// The h*-based coefficient formulas are run as a third route; agreement of all
// three re-derives the two Bernoulli identities through the polytope.
inline IdentityReport verify_comb_linear_coeffs_bernoulli(int n) {
    IdentityReport rep;
    rep.name = "comb-linear-coeffs";
    rep.params = "n=" + std::to_string(n);
    Polynomial ehr = comb_ehrhart_polynomial(make_chain(1), Poset(), n);
    Rational c1 = linear_coeff(shift(ehr, Rational(-1)));
    Rational c2 = linear_coeff(ehr);
    HStarVector h = hstar_from_polynomial(ehr, 2 * n);
    Rational g1 = linear_coeff_shifted_from_hstar(h);
    Rational g2 = linear_coeff_from_hstar(h);
    Rational r1 = bernoulli(n) / Rational(n);
    Rational r2(n);
    for (int j = 1; j <= n; ++j)
        r2 += bernoulli(j) / Rational(j);
    rep.lhs = c1.str() + "; " + c2.str() +
              (c1 == g1 && c2 == g2 ? "" : " (h* route differs: " + g1.str() + "; " + g2.str() + ")");
    rep.rhs = r1.str() + "; " + r2.str();
    rep.lhs_path = "coefficient extraction from the fast-path Ehrhart polynomial; h*-based formulas";
    rep.rhs_path = "Bernoulli recursion closed forms";
    rep.pass = c1 == r1 && c2 == r2 && g1 == r1 && g2 == r2;
    return rep;
}

// The S-polynomial route to the linear coefficients of a general comb's
// Ehrhart polynomial against direct extraction from the explicitly built
// poset.
inline IdentityReport verify_general_comb(const std::string& label, const Poset& p, int n,
                                          int direct_max_size = 7) {
    IdentityReport rep;
    rep.name = "general-comb-coeffs";
    rep.params = label + " n=" + std::to_string(n);
    int total = n * (p.size() + 1);
    if (total > direct_max_size)
        throw SizeExceeded("direct path infeasible: comb has " + std::to_string(total) + " elements");
    auto [f1, f2] = comb_linear_coeffs(p, n);
    Polynomial direct = ehrhart_polynomial(comb_over(p, n));
    Rational d1 = linear_coeff(shift(direct, Rational(-1)));
    Rational d2 = linear_coeff(direct);
    rep.lhs = f1.str() + "; " + f2.str();
    rep.rhs = d1.str() + "; " + d2.str();
    rep.lhs_path = "power-sum polynomials of the attached poset";
    rep.rhs_path = "brute-force lattice counts on the built comb";
    rep.pass = f1 == d1 && f2 == d2;
    return rep;
}

// Fast-path-only specialization for combs over a 2-antichain: the linear
// coefficients equal B_{2n} / n and 2n + sum_{i<=n} B_{2i} / i.
inline IdentityReport verify_antichain_comb_coeffs(int n) {
    IdentityReport rep;
    rep.name = "antichain-comb-coeffs";
    rep.params = "n=" + std::to_string(n);
    auto [f1, f2] = comb_linear_coeffs(make_antichain(2), n);
    Rational r1 = bernoulli(2 * n) / Rational(n);
    Rational r2(2 * n);
    for (int i = 1; i <= n; ++i)
        r2 += bernoulli(2 * i) / Rational(i);
    rep.lhs = f1.str() + "; " + f2.str();
    rep.rhs = r1.str() + "; " + r2.str();
    rep.lhs_path = "power-sum polynomials of the 2-antichain";
    rep.rhs_path = "Bernoulli recursion closed forms";
    rep.pass = f1 == r1 && f2 == r2;
    return rep;
}

// The two h*-based linear-coefficient formulas against direct coefficient
// extraction, on pseudo-random h*-vectors with h*_0 = 1 and entries in 0..20.
// The generator is seeded, so the report is reproducible.
inline IdentityReport verify_coeff_formulas_random(int dim, int trials, std::uint64_t seed) {
    IdentityReport rep;
    rep.name = "hstar-coeff-formulas-random";
    rep.params = "d=" + std::to_string(dim) + " trials=" + std::to_string(trials) +
                 " seed=" + std::to_string(seed);
    if (dim < 1)
        throw ZeroDimension("formula checks need dimension at least 1");
    std::mt19937_64 rng(seed);
    int failures = 0;
    std::string first_failure;
    for (int t = 0; t < trials; ++t) {
        HStarVector h;
        h.dim = dim;
        h.entries.push_back(BigInt(1));
        for (int j = 1; j <= dim; ++j)
            h.entries.push_back(BigInt(static_cast<long long>(rng() % 21)));
        Polynomial ehr = polynomial_from_hstar(h);
        bool ok = linear_coeff_shifted_from_hstar(h) == linear_coeff(shift(ehr, Rational(-1)))
                  && linear_coeff_from_hstar(h) == linear_coeff(ehr);
        if (!ok) {
            ++failures;
            if (first_failure.empty())
                first_failure = detail::vec_str(h.entries);
        }
    }
    rep.lhs = std::to_string(trials - failures) + " matched";
    rep.rhs = std::to_string(trials) + " expected" +
              (first_failure.empty() ? "" : "; first failure h*=" + first_failure);
    rep.lhs_path = "h*-based coefficient formulas";
    rep.rhs_path = "direct extraction from the binomial-basis expansion";
    rep.pass = failures == 0;
    return rep;
}

// Same two formulas on the h*-vector of an actual order polytope.
inline IdentityReport verify_coeff_formulas_poset(const std::string& label, const Poset& p) {
    IdentityReport rep;
    rep.name = "hstar-coeff-formulas-poset";
    rep.params = label;
    EhrhartData data = ehrhart_data(p);
    Rational f1 = linear_coeff_shifted_from_hstar(data.hstar);
    Rational f2 = linear_coeff_from_hstar(data.hstar);
    Rational d1 = linear_coeff(shift(data.ehrhart, Rational(-1)));
    Rational d2 = linear_coeff(data.ehrhart);
    rep.lhs = f1.str() + "; " + f2.str();
    rep.rhs = d1.str() + "; " + d2.str();
    rep.lhs_path = "h*-based coefficient formulas";
    rep.rhs_path = "direct extraction from the interpolated polynomial";
    rep.pass = f1 == d1 && f2 == d2;
    return rep;
}

// Foundational order-polytope facts on one poset: the order polynomial is the
// shifted Ehrhart polynomial on a window, Ehr(-1) = 0, h*_0 = 1, h*_d = 0.
inline IdentityReport verify_order_polytope_basics(const std::string& label, const Poset& p,
                                                   int max_k = 10) {
    IdentityReport rep;
    rep.name = "order-polytope-basics";
    rep.params = label;
    EhrhartData data = ehrhart_data(p);
    bool window_ok = true;
    for (int k = 1; k <= max_k && window_ok; ++k)
        window_ok = Rational(order_polynomial_value(p, k)) == data.ehrhart(Rational(k - 1));
    bool ehrmeno_ok = p.empty() || data.ehrhart(Rational(-1)).is_zero();
    bool hzero_ok = data.hstar.entries.front() == 1;
    bool htop_ok = p.empty() || data.hstar.entries.back() == 0;
    rep.lhs = std::string(window_ok ? "shift-window ok" : "shift-window FAIL") + "; Ehr(-1)=" +
              data.ehrhart(Rational(-1)).str() + "; h*=" + detail::vec_str(data.hstar.entries);
    rep.rhs = "order counts for k=1.." + std::to_string(max_k) + "; 0; h*_0=1, h*_d=0";
    rep.lhs_path = "interpolated Ehrhart polynomial and extracted h*";
    rep.rhs_path = "direct order-preserving-map counts; boundary facts";
    rep.pass = window_ok && ehrmeno_ok && hzero_ok && htop_ok;
    return rep;
}

// Symmetric-specialization values against brute-force counts for a bicomb.
inline IdentityReport verify_fast_path_bicomb(const std::string& label, const Poset& p,
                                              const Poset& r, int n, int max_k = 5) {
    IdentityReport rep;
    rep.name = "bicomb-fast-path";
    rep.params = label + " n=" + std::to_string(n);
    Poset big = bicomb_over(p, r, n);
    Polynomial ehr_p = ehrhart_polynomial(p);
    Polynomial ehr_r = ehrhart_polynomial(r);
    std::vector<BigInt> fast, brute;
    for (int k = 0; k <= max_k; ++k) {
        fast.push_back(comb_ehrhart_value(ehr_p, ehr_r, n, k));
        brute.push_back(order_polynomial_value(big, k + 1));
    }
    rep.lhs = detail::vec_str(fast);
    rep.rhs = detail::vec_str(brute);
    rep.lhs_path = "complete homogeneous prefix table over attached Ehrhart values";
    rep.rhs_path = "depth-first order-preserving-map counts on the built poset";
    rep.pass = fast == brute;
    return rep;
}

// Comb over a 2-antichain: Ehrhart values are h_n evaluated at the squares
// 1, 4, ..., (k+1)^2.
inline IdentityReport verify_squares_specialization(int n, int max_k = 6) {
    IdentityReport rep;
    rep.name = "squares-specialization";
    rep.params = "n=" + std::to_string(n);
    Polynomial ehr_a2 = ehrhart_polynomial(make_antichain(2));
    std::vector<BigInt> fast, squares;
    for (int k = 0; k <= max_k; ++k) {
        fast.push_back(comb_ehrhart_value(ehr_a2, Polynomial::constant(Rational(1)), n, k));
        std::vector<BigInt> vals;
        for (int i = 1; i <= k + 1; ++i)
            vals.push_back(BigInt(i) * BigInt(i));
        squares.push_back(complete_homogeneous<BigInt>(n, vals));
    }
    rep.lhs = detail::vec_str(fast);
    rep.rhs = detail::vec_str(squares);
    rep.lhs_path = "fast path over interpolated 2-antichain Ehrhart values";
    rep.rhs_path = "complete homogeneous over explicitly squared integers";
    rep.pass = fast == squares;
    return rep;
}

// Interior count of the comb order polytope, shifted by one dilation step,
// against the unsigned Stirling first-kind triangle: interior(x+1) = [x, x-n]
// for x = n..n+6.
inline IdentityReport verify_open_comb_first_kind(int n) {
    IdentityReport rep;
    rep.name = "open-comb-first-kind";
    rep.params = "n=" + std::to_string(n);
    Polynomial pt = ehrhart_polynomial(make_chain(1));
    std::vector<BigInt> lhs, rhs;
    for (int x = n; x <= n + 6; ++x) {
        lhs.push_back(open_comb_interior_value(pt, 1, n, x + 1));
        rhs.push_back(stirling_first_unsigned(x, x - n));
    }
    rep.lhs = detail::vec_str(lhs);
    rep.rhs = detail::vec_str(rhs);
    rep.lhs_path = "elementary symmetric table over interior tooth-spine values";
    rep.rhs_path = "Stirling first-kind (unsigned) triangle recurrence";
    rep.pass = lhs == rhs;
    return rep;
}

// The reverse-complement map on k-uniform restricted growth functions is a
// descent-count-preserving bijection onto the words ordered by k-th
// occurrence.
inline IdentityReport verify_rgf_correspondence(int n, int k) {
    IdentityReport rep;
    rep.name = "rgf-correspondence";
    rep.params = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    if (n < 1 || k < 1)
        throw IndexTooSmall("correspondence needs n >= 1 and k >= 1");
    if (n * k > 12)
        throw SizeExceeded("enumeration infeasible: word length exceeds 12");
    std::vector<Word> rgfs = rgf_enumerate(n * k, k);
    std::vector<Word> images;
    images.reserve(rgfs.size());
    std::vector<BigInt> lhs_hist(static_cast<std::size_t>(n) * k, BigInt(0)), rhs_hist = lhs_hist;
    bool preserved = true;
    for (const Word& w : rgfs) {
        Word img = rgf_reverse_complement(w, n, k);
        preserved = preserved && is_ordered_by_jth_occurrence(img, k)
                    && descent_count(w) == descent_count(img);
        ++lhs_hist[static_cast<std::size_t>(descent_count(w))];
        images.push_back(std::move(img));
    }
    std::sort(images.begin(), images.end());
    bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
    std::vector<Word> targets = ordered_by_jth_occurrence(n, k, k);
    for (const Word& w : targets)
        ++rhs_hist[static_cast<std::size_t>(descent_count(w))];
    std::sort(targets.begin(), targets.end());
    bool surjective = images == targets;
    rep.lhs = detail::vec_str(descent_histogram_trim(std::move(lhs_hist)));
    rep.rhs = detail::vec_str(descent_histogram_trim(std::move(rhs_hist)));
    rep.lhs_path = "descent histogram of k-uniform restricted growth functions";
    rep.rhs_path = "descent histogram of words ordered by k-th occurrence";
    rep.pass = preserved && injective && surjective;
    return rep;
}

// h*-vector of the order polytope whose extensions are r-Stirling
// permutations against the descent histogram of those words.
inline IdentityReport verify_stirling_poset_hstar(int k, int r, int enum_max_size = 9) {
    IdentityReport rep;
    rep.name = "stirling-poset-hstar";
    rep.params = "k=" + std::to_string(k) + " r=" + std::to_string(r);
    if (k < 0 || r < 1)
        throw IndexTooSmall("need k >= 0 and r >= 1");
    if (k * r > enum_max_size)
        throw SizeExceeded("word enumeration infeasible for k*r elements");
    int dim = k * r;
    HStarVector h = ehrhart_data(stirling_poset(k, r)).hstar;
    std::vector<BigInt> hist(static_cast<std::size_t>(dim) + 1, BigInt(0));
    for_each_stirling_permutation(k, r, [&](const Word& w) {
        ++hist[static_cast<std::size_t>(descent_count(w))];
    });
    rep.lhs = detail::vec_str(h.entries);
    rep.rhs = detail::vec_str(hist);
    rep.lhs_path = "h* extraction from brute-force lattice counts";
    rep.rhs_path = "descent histogram of enumerated words";
    rep.pass = h.entries == hist;
    return rep;
}

// O(poset with a new maximum) has the discrete sum of the original Ehrhart
// polynomial as its Ehrhart polynomial.
inline IdentityReport verify_pyramid_consistency(const std::string& label, const Poset& p) {
    IdentityReport rep;
    rep.name = "pyramid-consistency";
    rep.params = label;
    Polynomial direct = ehrhart_polynomial(adjoin_max(p));
    Polynomial summed = discrete_sum(ehrhart_polynomial(p));
    rep.lhs = direct.str();
    rep.rhs = summed.str();
    rep.lhs_path = "brute-force lattice counts on the poset with adjoined maximum";
    rep.rhs_path = "discrete summation of the base Ehrhart polynomial";
    rep.pass = direct == summed;
    return rep;
}

// Exploratory table: exact linear coefficients of the pyramid-over-comb
// Ehrhart polynomials. No identity is asserted for these values.
struct PyramidRow {
    int n = 0;
    Rational shifted_linear; // [x] Ehr(x-1)
    Rational plain_linear;   // [x] Ehr(x)
};

inline std::vector<PyramidRow> explore_pyramid(int max_n) {
    if (max_n < 1)
        throw IndexTooSmall("exploration bound must be at least 1");
    std::vector<PyramidRow> rows;
    rows.reserve(static_cast<std::size_t>(max_n));
    Polynomial pt = ehrhart_polynomial(make_chain(1));
    for (int n = 1; n <= max_n; ++n) {
        Polynomial pyr = discrete_sum(comb_ehrhart_polynomial(pt, 1, Polynomial::constant(Rational(1)), 0, n));
        rows.push_back({n, linear_coeff(shift(pyr, Rational(-1))), linear_coeff(pyr)});
    }
    return rows;
}

// Named posets used by the property suites: every chain, antichain, comb,
// bicomb (over components of size <= 3), and pyramid with at most max_size
// elements.
struct CorpusEntry {
    std::string name;
    Poset poset;
};

inline std::vector<CorpusEntry> standard_corpus(int max_size) {
    std::vector<CorpusEntry> out;
    for (int m = 1; m <= max_size; ++m)
        out.push_back({"chain:" + std::to_string(m), make_chain(m)});
    for (int m = 1; m <= max_size; ++m)
        out.push_back({"antichain:" + std::to_string(m), make_antichain(m)});
    for (int n = 1; 2 * n <= max_size; ++n)
        out.push_back({"comb:" + std::to_string(n), make_comb(n)});

    const std::vector<std::pair<std::string, Poset>> parts = {
        {"chain:0", Poset()},        {"chain:1", make_chain(1)},
        {"chain:2", make_chain(2)},  {"antichain:2", make_antichain(2)},
        {"chain:3", make_chain(3)},  {"antichain:3", make_antichain(3)},
    };
    for (const auto& [pname, p] : parts)
        for (const auto& [rname, r] : parts) {
            if (p.empty() && r.empty())
                continue; // bicombs over nothing are the chains above
            if (p == make_chain(1) && r.empty())
                continue; // and these are the combs above
            int block = p.size() + r.size() + 1;
            for (int n = 1; n * block <= max_size; ++n) {
                std::string name = r.empty()
                                       ? "comb(" + pname + "):" + std::to_string(n)
                                       : "bicomb(" + pname + "," + rname + "):" + std::to_string(n);
                out.push_back({name, bicomb_over(p, r, n)});
            }
        }

    std::size_t base_count = out.size();
    for (std::size_t i = 0; i < base_count; ++i)
        if (out[i].poset.size() + 1 <= max_size)
            out.push_back({"pyr(" + out[i].name + ")", adjoin_max(out[i].poset)});
    return out;
}

} // namespace ehrcomb
