#ifndef COXMONO_INVARIANTS_HPP
#define COXMONO_INVARIANTS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "coxmono/group.hpp"
#include "coxmono/multipoly.hpp"
#include "coxmono/rational.hpp"
#include "coxmono/root_system.hpp"

namespace coxmono {

// Free generating set of the invariant ring, with the discriminant in
// the generator coordinates once computed.
struct InvariantPresentation {
    GroupType type;
    RootSystemData root_data;
    std::vector<RationalMatrix> group;
    std::vector<MultiPoly> basics;   // in x, basics[0] = q
    std::vector<int> degrees;        // deg basics[i], ascending
    MultiPoly delta_tilde;           // in y, valid iff has_delta
    bool has_delta = false;
};

// Averaging projection onto the invariant subspace.
inline MultiPoly reynolds(const MultiPoly& p, const std::vector<RationalMatrix>& group) {
    if (group.empty()) throw std::invalid_argument("reynolds over an empty group");
    MultiPoly acc(p.nvars());
    for (const RationalMatrix& g : group) acc = acc + p.compose_linear(g);
    return acc * Rational(1, static_cast<unsigned long>(group.size()));
}

namespace detail {

// All exponent vectors of total degree d in n variables, lex order.
inline std::vector<MultiPoly::Exponents> monomials_of_degree(int n, int d) {
    std::vector<MultiPoly::Exponents> out;
    MultiPoly::Exponents e(n, 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == n - 1) {
            e[i] = rem;
            out.push_back(e);
            return;
        }
        for (int k = rem; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, rem - k);
        }
    };
    if (n == 0) return out;
    rec(0, d);
    return out;
}

// Jacobian of the polynomial list, as a (#polys) x n polynomial matrix.
inline std::vector<std::vector<MultiPoly>> jacobian(const std::vector<MultiPoly>& polys, int n) {
    std::vector<std::vector<MultiPoly>> j;
    for (const MultiPoly& p : polys) {
        std::vector<MultiPoly> row;
        for (int v = 0; v < n; ++v) row.push_back(p.derivative(v));
        j.push_back(row);
    }
    return j;
}

// Does the Jacobian of polys have full row rank as a matrix of rational
// functions? Random points first, exact minors as the conclusive path.
inline bool jacobian_full_rank(const std::vector<MultiPoly>& polys, int n, std::mt19937& rng) {
    int k = static_cast<int>(polys.size());
    if (k > n) return false;
    auto jac = jacobian(polys, n);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
    for (int attempt = 0; attempt < 10; ++attempt) {
        RationalVector x(n);
        for (int i = 0; i < n; ++i) x[i] = rat(num(rng), den(rng));
        RationalMatrix m(k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = jac[i][j].eval(x);
        if (matrix_rank(m) == k) return true;
    }
    // Symbolic fallback: some k x k minor must be a nonzero polynomial.
    std::vector<int> cols(k);
    std::function<bool(int, int)> any_minor = [&](int idx, int start) -> bool {
        if (idx == k) {
            // Determinant of the selected columns by Laplace expansion.
            std::function<MultiPoly(std::vector<int>, std::vector<int>)> det =
                [&](std::vector<int> rs, std::vector<int> cs) -> MultiPoly {
                if (rs.size() == 1) return jac[rs[0]][cs[0]];
                MultiPoly acc(n);
                std::vector<int> sub_rs(rs.begin() + 1, rs.end());
                for (size_t c = 0; c < cs.size(); ++c) {
                    std::vector<int> sub_cs;
                    for (size_t t = 0; t < cs.size(); ++t)
                        if (t != c) sub_cs.push_back(cs[t]);
                    MultiPoly term = jac[rs[0]][cs[c]] * det(sub_rs, sub_cs);
                    acc = (c % 2) ? acc - term : acc + term;
                }
                return acc;
            };
            std::vector<int> rs(k);
            for (int i = 0; i < k; ++i) rs[i] = i;
            return !det(rs, cols).is_zero();
        }
        for (int c = start; c < n; ++c) {
            cols[idx] = c;
            if (any_minor(idx + 1, c + 1)) return true;
        }
        return false;
    };
    return any_minor(0, 0);
}

}  // namespace detail

// Basic invariants f_1..f_n with f_1 = q exactly: for each further
// degree, the first Reynolds-averaged monomial (graded lex order) that
// keeps the Jacobian of full rank.
inline InvariantPresentation basic_invariants(const GroupType& t) {
    RootSystemData r = root_system(t);
    if (!r.exact) throw std::domain_error("basic_invariants requires an exact realization");
    InvariantPresentation pres;
    pres.type = t;
    pres.root_data = r;
    pres.group = generate_group(r);
    pres.degrees = t.degrees();
    int n = r.rank;
    std::mt19937 rng(20240229);

    pres.basics.push_back(r.q_poly());
    if (!detail::jacobian_full_rank(pres.basics, n, rng))
        throw std::logic_error("q has identically singular differential");
    for (size_t i = 1; i < pres.degrees.size(); ++i) {
        int d = pres.degrees[i];
        bool found = false;
        for (const auto& e : detail::monomials_of_degree(n, d)) {
            MultiPoly mono(n);
            mono.add_term(e, Rational(1));
            MultiPoly f = reynolds(mono, pres.group);
            if (f.is_zero()) continue;
            pres.basics.push_back(f);
            if (detail::jacobian_full_rank(pres.basics, n, rng)) {
                found = true;
                break;
            }
            pres.basics.pop_back();
        }
        if (!found)
            throw std::runtime_error("no monomial average of degree " + std::to_string(d) +
                                     " extends the invariant basis");
    }
    return pres;
}

// Unique P with P(f_1, .., f_n) = p, by exact coefficient matching over
// the weighted monomials y^a with sum a_i d_i = deg p.
inline MultiPoly invariantize(const MultiPoly& p, const InvariantPresentation& pres) {
    int n = static_cast<int>(pres.basics.size());
    if (p.is_zero()) return MultiPoly(n);
    int deg = p.total_degree();
    // Weighted exponent vectors.
    std::vector<MultiPoly::Exponents> alphas;
    MultiPoly::Exponents a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == n) {
            if (rem == 0) alphas.push_back(a);
            return;
        }
        for (int k = 0; k * pres.degrees[i] <= rem; ++k) {
            a[i] = k;
            rec(i + 1, rem - k * pres.degrees[i]);
        }
        a[i] = 0;
    };
    rec(0, deg);
    if (alphas.empty()) throw std::domain_error("degree not representable in invariant weights");

    // Expand each candidate product in x.
    std::vector<MultiPoly> products;
    for (const auto& alpha : alphas) {
        MultiPoly prod = MultiPoly::constant(p.nvars(), Rational(1));
        for (int i = 0; i < n; ++i)
            if (alpha[i] > 0) prod = prod * pres.basics[i].pow(alpha[i]);
        products.push_back(prod);
    }
    // Row space: every x-monomial appearing anywhere.
    std::map<MultiPoly::Exponents, int> row_of;
    for (const MultiPoly& q : products)
        for (const auto& [e, c] : q.terms())
            if (!row_of.count(e)) row_of.emplace(e, static_cast<int>(row_of.size()));
    for (const auto& [e, c] : p.terms())
        if (!row_of.count(e)) row_of.emplace(e, static_cast<int>(row_of.size()));

    RationalMatrix m(static_cast<int>(row_of.size()), static_cast<int>(products.size()));
    RationalVector b(row_of.size(), Rational(0));
    for (size_t j = 0; j < products.size(); ++j)
        for (const auto& [e, c] : products[j].terms()) m(row_of[e], static_cast<int>(j)) = c;
    for (const auto& [e, c] : p.terms()) b[row_of[e]] = c;

    LinSolveResult sol = solve_linear(m, b);
    if (sol.status == LinSolveStatus::Inconsistent)
        throw std::domain_error("polynomial is not in the invariant subring");
    if (sol.status == LinSolveStatus::Underdetermined)
        throw std::logic_error("invariant weighted monomials are dependent");
    MultiPoly out(n);
    for (size_t j = 0; j < alphas.size(); ++j) out.add_term(alphas[j], sol.solution[j]);
    return out;
}

// Delta = (prod of the hyperplane forms)^2, expanded.
inline MultiPoly discriminant_poly(const RootSystemData& r) {
    if (!r.exact) throw std::domain_error("discriminant_poly requires an exact realization");
    MultiPoly d = MultiPoly::constant(r.rank, Rational(1));
    for (const RationalVector& f : r.forms) {
        MultiPoly l = MultiPoly::linear_form(f);
        d = d * l * l;
    }
    return d;
}

inline InvariantPresentation discriminant_in_invariants(const GroupType& t) {
    InvariantPresentation pres = basic_invariants(t);
    pres.delta_tilde = invariantize(discriminant_poly(pres.root_data), pres);
    pres.has_delta = true;
    return pres;
}

}  // namespace coxmono

#endif
