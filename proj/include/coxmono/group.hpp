#ifndef COXMONO_GROUP_HPP
#define COXMONO_GROUP_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "coxmono/rational.hpp"
#include "coxmono/root_system.hpp"

namespace coxmono {

// Reflection in the hyperplane of root alpha, orthogonal for the form
// given by gram:  s(x) = x - 2 B(alpha, x)/B(alpha, alpha) alpha.
inline RationalMatrix reflection_matrix(const RationalVector& alpha, const RationalMatrix& gram) {
    int n = gram.rows();
    RationalVector ga = gram.apply(alpha);
    Rational norm(0);
    for (int i = 0; i < n; ++i) norm += alpha[i] * ga[i];
    if (norm == 0) throw std::invalid_argument("isotropic root");
    RationalMatrix s = RationalMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(i, j) -= 2 * alpha[i] * ga[j] / norm;
    return s;
}

// Full matrix group generated by the reflections of an exact
// realization, by closure under multiplication.
inline std::vector<RationalMatrix> generate_group(const RootSystemData& r,
                                                  size_t safety_bound = 2000000) {
    if (!r.exact) throw std::domain_error("generate_group requires an exact realization");
    std::vector<RationalMatrix> gens;
    for (const RationalVector& a : r.roots) gens.push_back(reflection_matrix(a, r.gram));
    std::set<RationalMatrix> seen;
    std::vector<RationalMatrix> frontier;
    seen.insert(RationalMatrix::identity(r.rank));
    frontier.push_back(RationalMatrix::identity(r.rank));
    while (!frontier.empty()) {
        std::vector<RationalMatrix> next;
        for (const RationalMatrix& g : frontier)
            for (const RationalMatrix& s : gens) {
                RationalMatrix h = s * g;
                if (seen.insert(h).second) {
                    next.push_back(h);
                    if (seen.size() > safety_bound)
                        throw std::runtime_error("group closure exceeded safety bound");
                }
            }
        frontier = std::move(next);
    }
    return std::vector<RationalMatrix>(seen.begin(), seen.end());
}

namespace detail {

using USeries = std::vector<Rational>;  // coefficients, index = degree

inline USeries useries_mul(const USeries& a, const USeries& b, int truncate) {
    USeries r(std::min<size_t>(truncate + 1, a.size() + b.size() - 1), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(truncate); ++j) {
            if (i + j >= r.size()) break;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Inverse of a power series with unit constant term, mod t^(d+1).
inline USeries useries_inverse(const USeries& a, int d) {
    if (a.empty() || a[0] == 0) throw std::domain_error("series has no inverse");
    USeries b(d + 1, Rational(0));
    Rational inv0 = 1 / a[0];
    b[0] = inv0;
    for (int k = 1; k <= d; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) acc += a[j] * b[k - j];
        b[k] = -acc * inv0;
    }
    return b;
}

// det(I - t g) as a polynomial in t, by cofactor expansion over the
// univariate polynomial ring (ranks are tiny).
inline USeries char_factor(const RationalMatrix& g) {
    int n = g.rows();
    // Build matrix of degree-<=1 polynomials m[i][j] = delta_ij - t g_ij.
    std::vector<std::vector<USeries>> m(n, std::vector<USeries>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            USeries p{Rational(i == j ? 1 : 0), -g(i, j)};
            m[i][j] = p;
        }
    // Recursive Laplace expansion along the first row.
    std::function<USeries(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rows, std::vector<int> cols) -> USeries {
        if (rows.size() == 1) return m[rows[0]][cols[0]];
        USeries acc{Rational(0)};
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        for (size_t c = 0; c < cols.size(); ++c) {
            std::vector<int> sub_cols;
            for (size_t k = 0; k < cols.size(); ++k)
                if (k != c) sub_cols.push_back(cols[k]);
            USeries term = useries_mul(m[rows[0]][cols[c]], det(sub_rows, sub_cols), n);
            if (c % 2) for (Rational& x : term) x = -x;
            if (term.size() > acc.size()) acc.resize(term.size(), Rational(0));
            for (size_t k = 0; k < term.size(); ++k) acc[k] += term[k];
        }
        return acc;
    };
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    return det(idx, idx);
}

}  // namespace detail

// Independent oracle for the degree table: expands the Molien series
// (1/|G|) sum_g det(1 - t g)^{-1} and matches it against
// prod 1/(1 - t^{d_i}), extracting the degree multiset greedily.
// Throws if the series does not match any degree multiset.
inline std::vector<int> molien_degrees(const std::vector<RationalMatrix>& group,
                                       int series_degree = 40) {
    if (group.empty()) throw std::invalid_argument("empty group");
    const int D = series_degree;
    int n = group.front().rows();
    detail::USeries sum(D + 1, Rational(0));
    for (const RationalMatrix& g : group) {
        detail::USeries inv = detail::useries_inverse(detail::char_factor(g), D);
        for (int k = 0; k <= D; ++k) sum[k] += inv[k];
    }
    Rational order(static_cast<long>(group.size()));
    for (Rational& c : sum) c /= order;

    std::vector<int> degs;
    detail::USeries g = sum;
    for (int i = 0; i < n; ++i) {
        int d = 0;
        for (int k = 1; k <= D; ++k)
            if (g[k] != 0) { d = k; break; }
        if (d == 0) throw std::runtime_error("Molien series matches fewer degrees than the rank");
        degs.push_back(d);
        // Multiply by (1 - t^d).
        for (int k = D; k >= d; --k) g[k] -= g[k - d];
    }
    for (int k = 1; k <= D; ++k)
        if (g[k] != 0)
            throw std::runtime_error("Molien series does not match a degree product");
    long long prod = 1;
    for (int d : degs) prod *= d;
    if (prod != static_cast<long long>(group.size()))
        throw std::runtime_error("Molien degree product disagrees with the group order");
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace coxmono

#endif
