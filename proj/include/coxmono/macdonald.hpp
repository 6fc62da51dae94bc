#ifndef COXMONO_MACDONALD_HPP
#define COXMONO_MACDONALD_HPP

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "coxmono/coxeter.hpp"
#include "coxmono/finite_field.hpp"
#include "coxmono/root_system.hpp"

namespace coxmono {

struct MacdonaldConstants {
    int n = 0;
    int N = 0;
    std::vector<int> degrees;
    double kappa = 0.0;
    double discr_q = 1.0;
    bool exact = false;
    Rational kappa_exact;  // valid iff exact
    Rational discr_q_exact;
};

namespace detail {

// kappa for a floating realization; the unit-form convention makes
// every dual pairing 1, so kappa = 4^{-N}.
inline double kappa_double(const RootSystemData& r) {
    if (r.exact) return to_double(kappa_rational(r));
    double k = 1.0;
    for (size_t i = 0; i < r.forms_f.size(); ++i) k *= 0.25;
    return k;
}

inline double discr_q_double(const RootSystemData& r) {
    if (r.exact) return to_double(r.gram.det());
    return 1.0;  // floating realizations use the identity gram
}

}  // namespace detail

inline MacdonaldConstants macdonald_constants(const GroupType& t) {
    RootSystemData r = root_system(t);
    MacdonaldConstants c;
    c.n = t.rank();
    c.N = t.num_reflections();
    c.degrees = t.degrees();
    c.exact = r.exact;
    c.kappa = detail::kappa_double(r);
    c.discr_q = detail::discr_q_double(r);
    if (r.exact) {
        c.kappa_exact = kappa_rational(r);
        c.discr_q_exact = r.gram.det();
    }
    return c;
}

// log of pi^{n/2} kappa^s prod_i Gamma(d_i s + 1)/Gamma(s + 1) (discr q)^{-1/2};
// the log form stays finite for large s where the value itself overflows.
inline double macdonald_rhs_log(const GroupType& t, double s) {
    MacdonaldConstants c = macdonald_constants(t);
    int max_d = c.degrees.empty() ? 1 : c.degrees.back();
    if (s <= -1.0 / max_d) throw std::domain_error("s hits a Gamma pole");
    double log_val = 0.5 * c.n * std::log(std::numbers::pi) + s * std::log(c.kappa) -
                     0.5 * std::log(c.discr_q);
    for (int d : c.degrees) log_val += std::lgamma(d * s + 1.0) - std::lgamma(s + 1.0);
    return log_val;
}

inline double macdonald_rhs(const GroupType& t, double s) {
    return std::exp(macdonald_rhs_log(t, s));
}

namespace detail {

// Gauss-Hermite nodes/weights for weight e^{-x^2} on R, by Newton
// iteration on the recurrence; exact for polynomials of degree 2m - 1.
inline void gauss_hermite(int m, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(m, 0.0);
    weights.assign(m, 0.0);
    const double pim = std::pow(std::numbers::pi, -0.25);
    int half = (m + 1) / 2;
    std::vector<double> zs(half, 0.0), ws(half, 0.0);  // roots in descending order
    for (int i = 0; i < half; ++i) {
        double z;
        if (i == 0) z = std::sqrt(2.0 * m + 1.0) - 1.85575 * std::pow(2.0 * m + 1.0, -1.0 / 6.0);
        else if (i == 1) z = zs[0] - 1.14 * std::pow(static_cast<double>(m), 0.426) / zs[0];
        else if (i == 2) z = 1.86 * zs[1] - 0.86 * zs[0];
        else if (i == 3) z = 1.91 * zs[2] - 0.91 * zs[1];
        else z = 2.0 * zs[i - 1] - zs[i - 2];
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Orthonormal Hermite recurrence.
            double p1 = pim, p2 = 0.0;
            for (int j = 0; j < m; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 -
                     std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * m) * p2;
            double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        zs[i] = z;
        ws[i] = 2.0 / (pp * pp);
    }
    for (int i = 0; i < half; ++i) {
        nodes[m - 1 - i] = zs[i];
        nodes[i] = -zs[i];
        weights[m - 1 - i] = ws[i];
        weights[i] = ws[i];
    }
}

// Lower-triangular R with gram = R^T R; requires positive definiteness.
inline std::vector<std::vector<double>> cholesky(const std::vector<std::vector<double>>& g) {
    int n = static_cast<int>(g.size());
    std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i <= j; ++i) {
            double s = g[i][j];
            for (int k = 0; k < i; ++k) s -= r[k][i] * r[k][j];
            if (i == j) {
                if (s <= 0) throw std::domain_error("gram matrix not positive definite");
                r[i][j] = std::sqrt(s);
            } else {
                r[i][j] = s / r[i][i];
            }
        }
    }
    return r;  // upper triangular, row index first
}

// Solve R x = b for upper-triangular R.
inline std::vector<double> back_substitute(const std::vector<std::vector<double>>& r,
                                           const std::vector<double>& b) {
    int n = static_cast<int>(b.size());
    std::vector<double> x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= r[i][j] * x[j];
        x[i] = s / r[i][i];
    }
    return x;
}

inline double delta_at(const RootSystemData& r, const std::vector<double>& x) {
    double d = 1.0;
    for (const auto& f : r.forms_f) {
        double l = 0.0;
        for (size_t i = 0; i < f.size(); ++i) l += f[i] * x[i];
        d *= l * l;
    }
    return d;
}

}  // namespace detail

// I(s) = int_{R^n} Delta(x)^s e^{-q(x)} dx by tensor Gauss-Hermite
// quadrature after the substitution x = L u with L^T gram L = Id.
inline double macdonald_lhs_quadrature(const GroupType& t, int s) {
    if (s < 0) throw std::invalid_argument("quadrature needs a nonnegative integer s");
    RootSystemData r = root_system(t);
    int n = r.rank;
    if (n > 2) throw std::domain_error("quadrature supports rank <= 2 only");
    int N = static_cast<int>(r.forms_f.size());
    // Integrand degree is 2 N s per axis at most; add margin.
    int m = N * s + 3;
    std::vector<double> nodes, weights;
    detail::gauss_hermite(m, nodes, weights);

    // gram = R^T R, L = R^{-1}; |det L| = (discr q)^{-1/2}.
    auto chol = detail::cholesky(r.gram_f);
    double det_r = 1.0;
    for (int i = 0; i < n; ++i) det_r *= chol[i][i];
    double jac = 1.0 / det_r;

    double total = 0.0;
    if (n == 1) {
        for (int i = 0; i < m; ++i) {
            std::vector<double> x = detail::back_substitute(chol, {nodes[i]});
            total += weights[i] * std::pow(detail::delta_at(r, x), s);
        }
    } else {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                std::vector<double> x = detail::back_substitute(chol, {nodes[i], nodes[j]});
                total += weights[i] * weights[j] * std::pow(detail::delta_at(r, x), s);
            }
    }
    return jac * total;
}

// Max of Delta on {q = 1}: kappa prod_i d_i^{d_i} / N^N.
inline double max_delta_closed_form(const GroupType& t) {
    MacdonaldConstants c = macdonald_constants(t);
    double log_val = std::log(c.kappa);
    for (int d : c.degrees) log_val += d * std::log(static_cast<double>(d));
    if (c.N > 0) log_val -= c.N * std::log(static_cast<double>(c.N));
    return std::exp(log_val);
}

inline Rational max_delta_closed_form_exact(const GroupType& t) {
    RootSystemData r = root_system(t);
    if (!r.exact) throw std::domain_error("exact closed form needs an exact realization");
    Rational v = kappa_rational(r);
    for (int d : t.degrees())
        for (int i = 0; i < d; ++i) v *= d;
    int N = t.num_reflections();
    for (int i = 0; i < N; ++i) v /= N;
    return v;
}

// Best value of Delta on {q = 1} over seeded random restarts of
// projected gradient ascent on log Delta.
inline double max_delta_optimize(const GroupType& t, int restarts, unsigned seed = 12345) {
    RootSystemData r = root_system(t);
    int n = r.rank;
    const auto& g = r.gram_f;
    auto qval = [&](const std::vector<double>& x) {
        double q = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q += g[i][j] * x[i] * x[j];
        return q;
    };
    auto normalize = [&](std::vector<double>& x) {
        double s = std::sqrt(qval(x));
        for (double& v : x) v /= s;
    };
    auto logdelta = [&](const std::vector<double>& x) {
        double s = 0.0;
        for (const auto& f : r.forms_f) {
            double l = 0.0;
            for (int i = 0; i < n; ++i) l += f[i] * x[i];
            double a = std::abs(l);
            if (a < 1e-300) return -1e308;
            s += 2.0 * std::log(a);
        }
        return s;
    };

    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double best = -1e308;
    for (int t_i = 0; t_i < restarts; ++t_i) {
        std::vector<double> x(n);
        do {
            for (double& v : x) v = gauss(rng);
        } while (qval(x) < 1e-12);
        normalize(x);
        double fx = logdelta(x);
        if (fx < -1e307) continue;
        for (int iter = 0; iter < 2000; ++iter) {
            // Gradient of sum 2 log |l_i(x)|.
            std::vector<double> grad(n, 0.0);
            for (const auto& f : r.forms_f) {
                double l = 0.0;
                for (int i = 0; i < n; ++i) l += f[i] * x[i];
                for (int i = 0; i < n; ++i) grad[i] += 2.0 * f[i] / l;
            }
            // Project onto the tangent space of {q = 1}: v with v . (G x) = 0.
            std::vector<double> nrm(n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) nrm[i] += g[i][j] * x[j];
            double gn = 0.0, nn = 0.0;
            for (int i = 0; i < n; ++i) {
                gn += grad[i] * nrm[i];
                nn += nrm[i] * nrm[i];
            }
            for (int i = 0; i < n; ++i) grad[i] -= gn / nn * nrm[i];
            double gnorm = 0.0;
            for (double v : grad) gnorm += v * v;
            gnorm = std::sqrt(gnorm);
            if (gnorm < 1e-14) break;
            // Backtracking line search with renormalization.
            double step = 0.1;
            bool moved = false;
            for (int bt = 0; bt < 60; ++bt) {
                std::vector<double> y(n);
                for (int i = 0; i < n; ++i) y[i] = x[i] + step * grad[i];
                normalize(y);
                double fy = logdelta(y);
                if (fy > fx) {
                    double rel = 0.0;
                    for (int i = 0; i < n; ++i) rel += (y[i] - x[i]) * (y[i] - x[i]);
                    x = y;
                    double old = fx;
                    fx = fy;
                    moved = true;
                    if (std::sqrt(rel) < 1e-12 || fx - old < 1e-15 * std::abs(fx)) iter = 2000;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
        }
        best = std::max(best, fx);
    }
    return best < -1e307 ? 0.0 : std::exp(best);
}

}  // namespace coxmono

#endif
