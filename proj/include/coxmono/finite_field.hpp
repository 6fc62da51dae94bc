#ifndef COXMONO_FINITE_FIELD_HPP
#define COXMONO_FINITE_FIELD_HPP

#include <cmath>
#include <numbers>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxmono/coxeter.hpp"
#include "coxmono/invariants.hpp"
#include "coxmono/rational.hpp"
#include "coxmono/root_system.hpp"

namespace coxmono {

// Odd prime field with a fixed smallest primitive root and a discrete
// logarithm table, so multiplicative characters are index lookups.
class PrimeField {
public:
    explicit PrimeField(long long p) : p_(p) {
        if (p < 3) throw std::invalid_argument("prime field needs an odd prime");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
        generator_ = find_generator();
        dlog_.assign(p_, -1);
        long long x = 1;
        for (long long k = 0; k < p_ - 1; ++k) {
            dlog_[x] = k;
            x = x * generator_ % p_;
        }
    }

    long long p() const { return p_; }
    long long generator() const { return generator_; }

    long long reduce(long long x) const {
        long long r = x % p_;
        return r < 0 ? r + p_ : r;
    }

    // Discrete log base the generator; only defined for nonzero x.
    long long dlog(long long x) const {
        long long r = reduce(x);
        if (r == 0) throw std::domain_error("discrete log of zero");
        return dlog_[r];
    }

    long long inverse(long long x) const {
        long long r = reduce(x);
        if (r == 0) throw std::domain_error("inverse of zero");
        return pow_mod(r, p_ - 2);
    }

    long long pow_mod(long long b, long long e) const {
        long long r = 1;
        b = reduce(b);
        while (e > 0) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    }

    // Image of a rational number, rejecting denominators divisible by p.
    long long reduce_rational(const Rational& q) const {
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class pz(static_cast<long>(p_));
        mpz_class nr = num % pz, dr = den % pz;
        long long n = nr.get_si(), d = dr.get_si();
        if (n < 0) n += p_;
        if (d == 0) throw std::domain_error("denominator vanishes mod p");
        return n * inverse(d) % p_;
    }

    // Additive character psi(x) = exp(2 pi i x / p).
    std::complex<double> psi(long long x) const {
        double t = 2.0 * std::numbers::pi * static_cast<double>(reduce(x)) / static_cast<double>(p_);
        return {std::cos(t), std::sin(t)};
    }

private:
    long long find_generator() const {
        // Prime factors of p - 1.
        std::vector<long long> fac;
        long long m = p_ - 1;
        for (long long d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                fac.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) fac.push_back(m);
        for (long long g = 2; g < p_; ++g) {
            bool ok = true;
            for (long long f : fac)
                if (pow_mod(g, (p_ - 1) / f) == 1) { ok = false; break; }
            if (ok) return g;
        }
        throw std::logic_error("no primitive root found");
    }

    long long p_;
    long long generator_;
    std::vector<long long> dlog_;
};

// Multiplicative character of index j: chi(g^k) = exp(2 pi i j k / (p-1)).
// Sums always skip zero arguments.
struct MultChar {
    const PrimeField* field = nullptr;
    long long index = 0;

    MultChar() = default;
    MultChar(const PrimeField& f, long long j) : field(&f), index(((j % (f.p() - 1)) + f.p() - 1) % (f.p() - 1)) {}

    static MultChar trivial(const PrimeField& f) { return MultChar(f, 0); }
    static MultChar quadratic(const PrimeField& f) { return MultChar(f, (f.p() - 1) / 2); }

    bool is_trivial() const { return index == 0; }

    std::complex<double> operator()(long long x) const {
        long long k = field->dlog(x);
        double t = 2.0 * std::numbers::pi * static_cast<double>(index) * static_cast<double>(k) /
                   static_cast<double>(field->p() - 1);
        return {std::cos(t), std::sin(t)};
    }

    MultChar operator*(const MultChar& o) const { return MultChar(*field, index + o.index); }
    MultChar power(long long e) const { return MultChar(*field, index * (e % (field->p() - 1))); }
};

// g(chi) = -sum_{x != 0} chi(x) psi(x); the sign makes g(trivial) = 1.
inline std::complex<double> gauss_sum(const MultChar& chi) {
    const PrimeField& f = *chi.field;
    std::complex<double> s{0.0, 0.0};
    for (long long x = 1; x < f.p(); ++x) s += chi(x) * f.psi(x);
    return -s;
}

// kappa = prod_i q(l_i)/4 with q(l) the dual pairing l^T Gram^{-1} l.
inline Rational kappa_rational(const RootSystemData& r) {
    if (!r.exact) throw std::domain_error("kappa_rational requires an exact realization");
    RationalMatrix ginv = inverse(r.gram);
    Rational k(1);
    for (const RationalVector& l : r.forms) {
        RationalVector gl = ginv.apply(l);
        Rational v(0);
        for (int i = 0; i < r.rank; ++i) v += l[i] * gl[i];
        k *= v / 4;
    }
    return k;
}

inline long long kappa_mod_p(const RootSystemData& r, const PrimeField& f) {
    if (f.p() != 0 && r.type.order() % f.p() == 0)
        throw std::domain_error("p divides the group order");
    long long k = f.reduce_rational(kappa_rational(r));
    if (k == 0) throw std::domain_error("kappa vanishes mod p");
    return k;
}

namespace detail {

// Values of a rational-coefficient polynomial over all points of F^n,
// indexed by the base-p digits of the point.
struct ModPolyTable {
    int n = 0;
    long long p = 0;
    std::vector<long long> values;
};

inline ModPolyTable tabulate_mod_p(const MultiPoly& poly, const PrimeField& f) {
    ModPolyTable t;
    t.n = poly.nvars();
    t.p = f.p();
    // Reduce coefficients once.
    std::vector<std::pair<MultiPoly::Exponents, long long>> terms;
    for (const auto& [e, c] : poly.terms()) terms.emplace_back(e, f.reduce_rational(c));
    long long total = 1;
    for (int i = 0; i < t.n; ++i) total *= t.p;
    t.values.assign(total, 0);
    std::vector<long long> y(t.n, 0);
    for (long long idx = 0; idx < total; ++idx) {
        long long acc = 0;
        for (const auto& [e, c] : terms) {
            long long v = c;
            for (int i = 0; i < t.n; ++i)
                for (int k = 0; k < e[i]; ++k) v = v * y[i] % t.p;
            acc = (acc + v) % t.p;
        }
        t.values[idx] = acc;
        for (int i = 0; i < t.n; ++i) {
            if (++y[i] < t.p) break;
            y[i] = 0;
        }
    }
    return t;
}

}  // namespace detail

struct CharSumEntry {
    long long chi_index = 0;
    std::complex<double> S{0.0, 0.0};
    std::complex<double> RHS{0.0, 0.0};
    double abs_diff = 0.0;
    bool pass = false;
};

struct CharSumReport {
    GroupType type;
    long long p = 0;
    double tolerance = 1e-6;
    std::vector<CharSumEntry> entries;
    bool pass = false;
};

// Verification context for one (type, prime) pair. The discriminant
// table is computed once and shared by all characters.
class FiniteVerifier {
public:
    FiniteVerifier(const GroupType& t, const PrimeField& f)
        : FiniteVerifier(discriminant_in_invariants(t), f) {}

    FiniteVerifier(const InvariantPresentation& pres, const PrimeField& f)
        : pres_(pres), field_(f) {
        if (pres_.type.order() % f.p() == 0)
            throw std::domain_error("p divides the group order");
        if (!pres_.has_delta) throw std::invalid_argument("presentation lacks the discriminant");
        table_ = detail::tabulate_mod_p(pres_.delta_tilde, f);
        kappa_ = kappa_mod_p(pres_.root_data, f);
        discr_q_ = field_.reduce_rational(pres_.root_data.gram.det());
        if (discr_q_ == 0) throw std::domain_error("discr q vanishes mod p");
    }

    const PrimeField& field() const { return field_; }
    const InvariantPresentation& presentation() const { return pres_; }
    long long kappa() const { return kappa_; }

    // S_G(chi) = sum over y in F^n with Delta~(y) != 0 of chi(Delta~(y)) psi(y_1).
    std::complex<double> char_sum(const MultChar& chi) const {
        std::complex<double> s{0.0, 0.0};
        long long p = field_.p();
        for (long long idx = 0; idx < static_cast<long long>(table_.values.size()); ++idx) {
            long long d = table_.values[idx];
            if (d == 0) continue;
            long long y1 = idx % p;  // first coordinate is the lowest digit
            s += chi(d) * field_.psi(y1);
        }
        return s;
    }

    // (-1)^n phi(discr q) g(phi)^n phi(kappa) chi(kappa) prod_i g((phi chi)^{d_i}) / g(phi chi).
    std::complex<double> rhs(const MultChar& chi) const {
        int n = pres_.type.rank();
        MultChar phi = MultChar::quadratic(field_);
        MultChar phichi = phi * chi;
        std::complex<double> g_phi = gauss_sum(phi);
        std::complex<double> r = (n % 2) ? std::complex<double>(-1.0, 0.0)
                                         : std::complex<double>(1.0, 0.0);
        r *= phi(discr_q_);
        for (int i = 0; i < n; ++i) r *= g_phi;
        r *= phi(kappa_) * chi(kappa_);
        for (int d : pres_.degrees) r *= gauss_sum(phichi.power(d));
        std::complex<double> den = gauss_sum(phichi);
        for (int i = 0; i < n; ++i) r /= den;
        return r;
    }

    CharSumReport verify(double tolerance = 1e-6) const {
        CharSumReport rep;
        rep.type = pres_.type;
        rep.p = field_.p();
        rep.tolerance = tolerance;
        rep.pass = true;
        for (long long j = 0; j < field_.p() - 1; ++j) {
            MultChar chi(field_, j);
            CharSumEntry e;
            e.chi_index = j;
            e.S = char_sum(chi);
            e.RHS = rhs(chi);
            e.abs_diff = std::abs(e.S - e.RHS);
            e.pass = e.abs_diff < tolerance * (1.0 + std::abs(e.RHS));
            rep.pass &= e.pass;
            rep.entries.push_back(e);
        }
        return rep;
    }

private:
    InvariantPresentation pres_;
    PrimeField field_;
    detail::ModPolyTable table_;
    long long kappa_ = 0;
    long long discr_q_ = 0;
};

inline std::complex<double> char_sum(const GroupType& t, const PrimeField& f,
                                     const MultChar& chi) {
    return FiniteVerifier(t, f).char_sum(chi);
}

inline std::complex<double> rhs_theorem_finite(const GroupType& t, const PrimeField& f,
                                               const MultChar& chi) {
    return FiniteVerifier(t, f).rhs(chi);
}

inline CharSumReport verify_finite(const GroupType& t, const PrimeField& f) {
    return FiniteVerifier(t, f).verify();
}

}  // namespace coxmono

#endif
