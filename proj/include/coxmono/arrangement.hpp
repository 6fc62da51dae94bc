#ifndef COXMONO_ARRANGEMENT_HPP
#define COXMONO_ARRANGEMENT_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "coxmono/coxeter.hpp"
#include "coxmono/rational.hpp"
#include "coxmono/root_system.hpp"

namespace coxmono {

namespace detail {

// Nullspace basis (as matrix columns) of a stack of row forms.
inline RationalMatrix nullspace_basis(const std::vector<RationalVector>& rows, int dim) {
    RationalMatrix m(static_cast<int>(rows.size()), dim);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < dim; ++j) m(static_cast<int>(i), j) = rows[i][j];
    // Row-reduce.
    int nr = m.rows(), rank = 0;
    std::vector<int> pivot_of_col(dim, -1);
    for (int col = 0; col < dim && rank < nr; ++col) {
        int piv = -1;
        for (int i = rank; i < nr; ++i)
            if (m(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < dim; ++j) swap(m(piv, j), m(rank, j));
        Rational inv = 1 / m(rank, col);
        for (int j = 0; j < dim; ++j) m(rank, j) *= inv;
        for (int i = 0; i < nr; ++i) {
            if (i == rank || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (int j = 0; j < dim; ++j) m(i, j) -= f * m(rank, j);
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    RationalMatrix basis(dim, dim - rank);
    int bc = 0;
    for (int col = 0; col < dim; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        basis(col, bc) = 1;
        for (int c2 = 0; c2 < dim; ++c2) {
            int p = pivot_of_col[c2];
            if (p >= 0) basis(c2, bc) = -m(p, col);
        }
        ++bc;
    }
    return basis;
}

inline std::vector<RationalVector> restrict_forms(const std::vector<RationalVector>& forms,
                                                  const RationalMatrix& basis) {
    int dim = basis.rows(), sub = basis.cols();
    std::vector<RationalVector> out;
    for (const RationalVector& f : forms) {
        RationalVector g(sub, Rational(0));
        bool nonzero = false;
        for (int c = 0; c < sub; ++c) {
            for (int r = 0; r < dim; ++r) g[c] += f[r] * basis(r, c);
            nonzero |= (g[c] != 0);
        }
        if (!nonzero) continue;
        g = primitive_form(g);
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    return out;
}

inline RationalMatrix restrict_gram(const RationalMatrix& gram, const RationalMatrix& basis) {
    return basis.transpose() * gram * basis;
}

}  // namespace detail

// Central hyperplane arrangement: nonzero linear forms, deduplicated up
// to scalar (stored primitive, first nonzero positive).
struct Arrangement {
    int dim = 0;
    std::vector<RationalVector> forms;

    static Arrangement from_forms(int dim, const std::vector<RationalVector>& raw) {
        Arrangement a;
        a.dim = dim;
        for (const RationalVector& f : raw) {
            if (static_cast<int>(f.size()) != dim)
                throw std::invalid_argument("form dimension mismatch");
            RationalVector g = detail::primitive_form(f);  // throws on zero form
            if (std::find(a.forms.begin(), a.forms.end(), g) == a.forms.end())
                a.forms.push_back(g);
        }
        return a;
    }
};

inline Arrangement coxeter_arrangement(const RootSystemData& r) {
    if (!r.exact) throw std::domain_error("coxeter_arrangement requires an exact realization");
    return Arrangement::from_forms(r.rank, r.forms);
}

// One intersection subspace: its dimension, the full set of hyperplanes
// containing it, and its Moebius value mu(V, X).
struct PosetElement {
    int dim;
    std::vector<int> hyperplanes;  // sorted indices; empty for V itself
    long long mobius;
};

struct IntersectionPoset {
    int ambient_dim;
    std::vector<PosetElement> elements;  // elements[0] is V
};

// All intersection subspaces with the Moebius function computed by the
// downward recursion mu(X) = -sum_{Y > X} mu(Y).
inline IntersectionPoset intersection_poset(const Arrangement& a) {
    const int n = a.dim;
    // Closure of an index set: every hyperplane containing the subspace.
    auto closure = [&](const std::vector<int>& idx) {
        std::vector<RationalVector> rows;
        for (int i : idx) rows.push_back(a.forms[i]);
        RationalMatrix m(static_cast<int>(rows.size()), n);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < n; ++j) m(static_cast<int>(i), j) = rows[i][j];
        int base_rank = matrix_rank(m);
        std::vector<int> full;
        for (int j = 0; j < static_cast<int>(a.forms.size()); ++j) {
            RationalMatrix ext(m.rows() + 1, n);
            for (int i = 0; i < m.rows(); ++i)
                for (int c = 0; c < n; ++c) ext(i, c) = m(i, c);
            for (int c = 0; c < n; ++c) ext(m.rows(), c) = a.forms[j][c];
            if (matrix_rank(ext) == base_rank) full.push_back(j);
        }
        return std::pair(full, n - base_rank);
    };

    std::map<std::vector<int>, int> dim_of;  // full index set -> subspace dim
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < static_cast<int>(a.forms.size()); ++i) {
        auto [full, d] = closure({i});
        if (!dim_of.count(full)) {
            dim_of[full] = d;
            frontier.push_back(full);
        }
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& s : frontier)
            for (int j = 0; j < static_cast<int>(a.forms.size()); ++j) {
                if (std::binary_search(s.begin(), s.end(), j)) continue;
                std::vector<int> ext = s;
                ext.push_back(j);
                auto [full, d] = closure(ext);
                if (!dim_of.count(full)) {
                    dim_of[full] = d;
                    next.push_back(full);
                }
            }
        frontier = std::move(next);
    }

    IntersectionPoset p;
    p.ambient_dim = n;
    p.elements.push_back({n, {}, 1});
    // Sort by decreasing dimension so every Y > X precedes X.
    std::vector<std::pair<std::vector<int>, int>> items(dim_of.begin(), dim_of.end());
    std::sort(items.begin(), items.end(),
              [](const auto& x, const auto& y) { return x.second > y.second; });
    for (const auto& [s, d] : items) {
        long long mu = -1;  // accounts for mu(V)
        for (size_t k = 1; k < p.elements.size(); ++k) {
            const auto& e = p.elements[k];
            if (e.hyperplanes.size() < s.size() &&
                std::includes(s.begin(), s.end(), e.hyperplanes.begin(), e.hyperplanes.end()))
                mu -= e.mobius;
        }
        p.elements.push_back({d, s, mu});
    }
    return p;
}

inline long long zaslavsky_chamber_count(const Arrangement& a) {
    long long total = 0;
    for (const auto& e : intersection_poset(a).elements)
        total += e.mobius < 0 ? -e.mobius : e.mobius;
    return total;
}

inline long long deletion_restriction_chamber_count(int dim,
                                                    std::vector<RationalVector> forms) {
    if (forms.empty()) return 1;
    RationalVector h = forms.back();
    forms.pop_back();
    RationalMatrix basis = form_kernel_basis(h);
    std::vector<RationalVector> restricted = detail::restrict_forms(forms, basis);
    return deletion_restriction_chamber_count(dim, forms) +
           deletion_restriction_chamber_count(dim - 1, restricted);
}

// Number of chambers of the real complement, computed both by
// deletion-restriction and by Zaslavsky's theorem; the two must agree.
inline long long chamber_count(const Arrangement& a) {
    long long dr = deletion_restriction_chamber_count(a.dim, a.forms);
    long long za = zaslavsky_chamber_count(a);
    if (dr != za)
        throw std::logic_error("chamber count mismatch: deletion-restriction " +
                               std::to_string(dr) + " vs Zaslavsky " + std::to_string(za));
    return dr;
}

// True iff q restricts nondegenerately to every intersection subspace
// (the hypothesis of the quadric-complement recursion).
inline bool quadric_hypothesis_holds(const Arrangement& a, const RationalMatrix& gram) {
    for (const auto& e : intersection_poset(a).elements) {
        if (e.hyperplanes.empty()) continue;
        std::vector<RationalVector> rows;
        for (int i : e.hyperplanes) rows.push_back(a.forms[i]);
        RationalMatrix basis = detail::nullspace_basis(rows, a.dim);
        if (basis.cols() == 0) continue;  // the origin
        if (detail::restrict_gram(gram, basis).det() == 0) return false;
    }
    return true;
}

namespace detail {

inline long long quadric_euler_rec(int dim, std::vector<RationalVector> forms,
                                   const RationalMatrix& gram) {
    if (forms.empty()) {
        // Smooth affine quadric q = 1 in C^dim.
        return (dim % 2) ? 2 : 0;
    }
    RationalVector h = forms.back();
    forms.pop_back();
    RationalMatrix basis = form_kernel_basis(h);
    RationalMatrix sub_gram = restrict_gram(gram, basis);
    if (basis.cols() > 0 && sub_gram.det() == 0)
        throw std::domain_error("q degenerates on an intersection subspace");
    std::vector<RationalVector> restricted = restrict_forms(forms, basis);
    return quadric_euler_rec(dim, forms, gram) -
           quadric_euler_rec(dim - 1, restricted, sub_gram);
}

}  // namespace detail

// Euler characteristic of the complement of the complexified
// arrangement in the affine quadric q = 1, by deletion-restriction.
inline long long quadric_complement_euler(const Arrangement& a, const RationalMatrix& gram) {
    if (a.forms.empty()) throw std::invalid_argument("quadric_complement_euler: empty arrangement");
    if (!quadric_hypothesis_holds(a, gram))
        throw std::domain_error("q degenerates on an intersection subspace");
    return detail::quadric_euler_rec(a.dim, a.forms, gram);
}

struct EulerCheckReport {
    GroupType type;
    long long chi_B = 0;
    long long expected_chi_B = 0;       // (-1)^{n-1} |G|
    long long chambers = 0;             // must equal |G|
    bool chi_ok = false;
    bool quotient_ok = false;           // chi(B)/|G| = (-1)^{n-1}
    bool chambers_ok = false;
};

inline EulerCheckReport coxeter_euler_checks(const GroupType& t) {
    RootSystemData r = root_system(t);
    Arrangement a = coxeter_arrangement(r);
    EulerCheckReport rep;
    rep.type = t;
    long long order = t.order();
    long long sign = (t.rank() % 2) ? 1 : -1;
    rep.chi_B = quadric_complement_euler(a, r.gram);
    rep.expected_chi_B = sign * order;
    rep.chambers = chamber_count(a);
    rep.chi_ok = rep.chi_B == rep.expected_chi_B;
    rep.quotient_ok = (rep.chi_B % order == 0) && (rep.chi_B / order == sign);
    rep.chambers_ok = rep.chambers == order;
    return rep;
}

}  // namespace coxmono

#endif
