#ifndef COXMONO_ROOT_SYSTEM_HPP
#define COXMONO_ROOT_SYSTEM_HPP

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "coxmono/coxeter.hpp"
#include "coxmono/multipoly.hpp"
#include "coxmono/rational.hpp"

namespace coxmono {

// Concrete reflection realization of a group type: positive roots, the
// Gram matrix of the invariant form q, and one normalized linear form
// per reflection hyperplane.
//
// Crystallographic types get exact rational data (primitive integer
// form coefficients, first nonzero positive); H3, H4 and general I2(m)
// get floating data only (unit forms, gram = identity).
struct RootSystemData {
    GroupType type;
    int rank = 0;
    bool exact = false;

    RationalMatrix gram;                    // exact only
    std::vector<RationalVector> roots;      // exact only, positive roots
    std::vector<RationalVector> forms;      // exact only

    std::vector<std::vector<double>> forms_f;  // always populated
    std::vector<std::vector<double>> gram_f;   // always populated

    int num_hyperplanes() const {
        return exact ? static_cast<int>(forms.size()) : static_cast<int>(forms_f.size());
    }

    // q as a polynomial in the ambient coordinates.
    MultiPoly q_poly() const {
        if (!exact) throw std::domain_error("q_poly requires an exact realization");
        MultiPoly q(rank);
        for (int i = 0; i < rank; ++i)
            for (int j = i; j < rank; ++j) {
                Rational c = (i == j) ? gram(i, i) : gram(i, j) + gram(j, i);
                if (c == 0) continue;
                MultiPoly::Exponents e(rank, 0);
                e[i] += 1;
                e[j] += 1;
                q.add_term(e, c);
            }
        return q;
    }
};

namespace detail {

inline RationalVector primitive_form(RationalVector v) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Rational& c : v) {
        if (c == 0) continue;
        mpz_class n = abs(c.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_class d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    if (num_gcd == 0) throw std::invalid_argument("zero linear form");
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (Rational& c : v) c *= scale;
    for (const Rational& c : v) {
        if (c == 0) continue;
        if (c < 0)
            for (Rational& x : v) x = -x;
        break;
    }
    return v;
}

struct FactorRealization {
    bool exact = false;
    RationalMatrix gram;
    std::vector<RationalVector> roots;
    std::vector<RationalVector> forms;
    std::vector<std::vector<double>> forms_f;
    int rank = 0;
};

// Forms from roots via the pairing ell = G * alpha, normalized primitive.
inline void forms_from_roots(FactorRealization& r) {
    for (const RationalVector& a : r.roots) r.forms.push_back(primitive_form(r.gram.apply(a)));
}

inline FactorRealization realize_A(int k) {
    FactorRealization r;
    r.exact = true;
    if (k == 1) {
        // Rank one on the line, q = x^2.
        r.rank = 1;
        r.gram = RationalMatrix(1, 1);
        r.gram(0, 0) = 1;
        r.roots = {{Rational(1)}};
        r.forms = {{Rational(1)}};
        return r;
    }
    // Sum-zero model: basis e_i - e_{i+1}, Gram = Cartan matrix of A_k.
    r.rank = k;
    r.gram = RationalMatrix(k, k);
    for (int i = 0; i < k; ++i) {
        r.gram(i, i) = 2;
        if (i + 1 < k) {
            r.gram(i, i + 1) = -1;
            r.gram(i + 1, i) = -1;
        }
    }
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            // Root e_i - e_j = sum of basis vectors i..j-1.
            RationalVector a(k, Rational(0));
            for (int t = i; t < j; ++t) a[t] = 1;
            r.roots.push_back(a);
        }
    forms_from_roots(r);
    return r;
}

inline FactorRealization realize_BDF(const TypeFactor& f) {
    FactorRealization r;
    r.exact = true;
    int n = f.rank;
    r.rank = n;
    r.gram = RationalMatrix::identity(n);
    auto unit = [n](int i) {
        RationalVector v(n, Rational(0));
        v[i] = 1;
        return v;
    };
    if (f.family == Family::B || f.family == Family::F)
        for (int i = 0; i < n; ++i) r.roots.push_back(unit(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RationalVector d = unit(i), s = unit(i);
            d[j] = -1;
            s[j] = 1;
            r.roots.push_back(d);
            r.roots.push_back(s);
        }
    if (f.family == Family::F) {
        // Short roots (e1 +- e2 +- e3 +- e4)/2.
        for (int mask = 0; mask < 8; ++mask) {
            RationalVector v(4, rat(1, 2));
            for (int b = 0; b < 3; ++b)
                if (mask & (1 << b)) v[b + 1] = rat(-1, 2);
            r.roots.push_back(v);
        }
    }
    forms_from_roots(r);
    return r;
}

inline FactorRealization realize_G2() {
    FactorRealization r;
    r.exact = true;
    r.rank = 2;
    r.gram = RationalMatrix(2, 2);
    r.gram(0, 0) = 2;
    r.gram(0, 1) = -3;
    r.gram(1, 0) = -3;
    r.gram(1, 1) = 6;
    const int coords[6][2] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    for (auto& c : coords) r.roots.push_back({Rational(c[0]), Rational(c[1])});
    forms_from_roots(r);
    return r;
}

inline std::vector<std::vector<double>> h3_positive_roots() {
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::vector<double>> all;
    all.push_back({1, 0, 0});
    all.push_back({0, 1, 0});
    all.push_back({0, 0, 1});
    for (int rot = 0; rot < 3; ++rot)
        for (int mask = 0; mask < 8; ++mask) {
            const double base[3] = {0.5, 0.5 * tau, 0.5 / tau};
            std::vector<double> v(3);
            for (int i = 0; i < 3; ++i) {
                double x = base[(i + rot) % 3];
                v[i] = (mask & (1 << i)) ? -x : x;
            }
            // Keep positive representative only.
            bool pos = false;
            for (double x : v) {
                if (x != 0) { pos = x > 0; break; }
            }
            if (pos) all.push_back(v);
        }
    return all;
}

inline std::vector<std::vector<double>> h4_positive_roots() {
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::vector<double>> all;
    for (int i = 0; i < 4; ++i) {
        std::vector<double> v(4, 0.0);
        v[i] = 1;
        all.push_back(v);
    }
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<double> v(4, 0.5);
        for (int b = 0; b < 3; ++b)
            if (mask & (1 << b)) v[b + 1] = -0.5;
        all.push_back(v);
    }
    // Even permutations of (0, 1, 1/tau, tau)/2 with free signs on the
    // nonzero entries, positive representatives only.
    const double base[4] = {0.0, 0.5, 0.5 / tau, 0.5 * tau};
    int perm[4] = {0, 1, 2, 3};
    std::vector<std::array<int, 4>> even;
    std::sort(perm, perm + 4);
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j]) ++inv;
        if (inv % 2 == 0) even.push_back({perm[0], perm[1], perm[2], perm[3]});
    } while (std::next_permutation(perm, perm + 4));
    for (const auto& p : even)
        for (int mask = 0; mask < 8; ++mask) {
            std::vector<double> v(4);
            int sbit = 0;
            for (int i = 0; i < 4; ++i) {
                double x = base[p[i]];
                if (x != 0.0) {
                    if (mask & (1 << sbit)) x = -x;
                    ++sbit;
                }
                v[i] = x;
            }
            bool pos = false;
            for (double x : v) {
                if (x != 0) { pos = x > 0; break; }
            }
            if (pos) all.push_back(v);
        }
    return all;
}

inline FactorRealization realize_float(const TypeFactor& f) {
    FactorRealization r;
    r.exact = false;
    if (f.family == Family::H) {
        r.rank = f.rank;
        r.forms_f = (f.rank == 3) ? h3_positive_roots() : h4_positive_roots();
    } else {  // I2(m)
        r.rank = 2;
        const double pi = 3.14159265358979323846;
        for (int k = 0; k < f.m; ++k) {
            double c = std::cos(k * pi / f.m), s = std::sin(k * pi / f.m);
            if (c < 0 || (c == 0 && s < 0)) { c = -c; s = -s; }
            r.forms_f.push_back({c, s});
        }
    }
    return r;
}

inline FactorRealization realize_factor(const TypeFactor& f) {
    switch (f.family) {
        case Family::A: return realize_A(f.rank);
        case Family::B:
        case Family::D:
        case Family::F: return realize_BDF(f);
        case Family::I2:
            if (f.m == 6) return realize_G2();
            return realize_float(f);
        case Family::H: return realize_float(f);
        case Family::E:
            throw std::domain_error("no realization implemented for type " + f.name());
    }
    throw std::domain_error("unreachable");
}

}  // namespace detail

// Concrete realization of a group type as a direct sum of the factor
// realizations.
inline RootSystemData root_system(const GroupType& t) {
    std::vector<detail::FactorRealization> parts;
    for (const auto& f : t.factors) parts.push_back(detail::realize_factor(f));
    RootSystemData r;
    r.type = t;
    for (const auto& p : parts) r.rank += p.rank;
    r.exact = true;
    for (const auto& p : parts) r.exact &= p.exact;

    if (r.exact) {
        r.gram = RationalMatrix(r.rank, r.rank);
        int off = 0;
        for (const auto& p : parts) {
            for (int i = 0; i < p.rank; ++i)
                for (int j = 0; j < p.rank; ++j) r.gram(off + i, off + j) = p.gram(i, j);
            for (const RationalVector& a : p.roots) {
                RationalVector v(r.rank, Rational(0));
                for (int i = 0; i < p.rank; ++i) v[off + i] = a[i];
                r.roots.push_back(v);
            }
            for (const RationalVector& f : p.forms) {
                RationalVector v(r.rank, Rational(0));
                for (int i = 0; i < p.rank; ++i) v[off + i] = f[i];
                r.forms.push_back(v);
            }
            off += p.rank;
        }
    }

    // Floating mirror (exact data converted, floating factors as built).
    r.gram_f.assign(r.rank, std::vector<double>(r.rank, 0.0));
    int off = 0;
    for (const auto& p : parts) {
        if (p.exact) {
            for (int i = 0; i < p.rank; ++i)
                for (int j = 0; j < p.rank; ++j)
                    r.gram_f[off + i][off + j] = to_double(p.gram(i, j));
            for (const RationalVector& f : p.forms) {
                std::vector<double> v(r.rank, 0.0);
                for (int i = 0; i < p.rank; ++i) v[off + i] = to_double(f[i]);
                r.forms_f.push_back(v);
            }
        } else {
            for (int i = 0; i < p.rank; ++i) r.gram_f[off + i][off + i] = 1.0;
            for (const auto& f : p.forms_f) {
                std::vector<double> v(r.rank, 0.0);
                for (int i = 0; i < p.rank; ++i) v[off + i] = f[i];
                r.forms_f.push_back(v);
            }
        }
        off += p.rank;
    }
    return r;
}

}  // namespace coxmono

#endif
