#ifndef COXMONO_MULTIPOLY_HPP
#define COXMONO_MULTIPOLY_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxmono/rational.hpp"

namespace coxmono {

// Sparse multivariate polynomial with rational coefficients and dense
// fixed-length exponent vectors. Zero coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    static MultiPoly variable(int nvars, int i, int power = 1) {
        if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
        MultiPoly p(nvars);
        Exponents e(nvars, 0);
        e[i] = power;
        p.add_term(e, Rational(1));
        return p;
    }

    // Degree-1 polynomial from a coefficient vector.
    static MultiPoly linear_form(const RationalVector& coeffs) {
        MultiPoly p(static_cast<int>(coeffs.size()));
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            Exponents e(coeffs.size(), 0);
            e[i] = 1;
            p.add_term(e, coeffs[i]);
        }
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("exponent vector length mismatch");
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r(*this);
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r(*this);
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponents e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    MultiPoly operator*(const Rational& s) const {
        MultiPoly r(nvars_);
        if (s == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    MultiPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative polynomial power");
        MultiPoly r = constant(nvars_, Rational(1));
        MultiPoly base(*this);
        while (k > 0) {
            if (k & 1) r = r * base;
            base = (k >>= 1) ? base * base : base;
        }
        return r;
    }

    Rational eval(const RationalVector& x) const {
        if (static_cast<int>(x.size()) != nvars_)
            throw std::invalid_argument("evaluation point dimension mismatch");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    double eval_double(const std::vector<double>& x) const {
        double acc = 0;
        for (const auto& [e, c] : terms_) {
            double t = to_double(c);
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    // Substitute polynomials for the variables. All substituted polynomials
    // must share a variable count, which becomes the result's.
    MultiPoly compose(const std::vector<MultiPoly>& subs) const {
        if (static_cast<int>(subs.size()) != nvars_)
            throw std::invalid_argument("compose: substitution count mismatch");
        int out_vars = subs.empty() ? 0 : subs[0].nvars();
        for (const MultiPoly& s : subs)
            if (s.nvars() != out_vars)
                throw std::invalid_argument("compose: inconsistent substitution arity");
        // Cache powers of each substituted polynomial.
        std::vector<std::vector<MultiPoly>> powers(nvars_);
        for (int i = 0; i < nvars_; ++i) powers[i].push_back(constant(out_vars, Rational(1)));
        auto power_of = [&](int i, int k) -> const MultiPoly& {
            while (static_cast<int>(powers[i].size()) <= k)
                powers[i].push_back(powers[i].back() * subs[i]);
            return powers[i][k];
        };
        MultiPoly r(out_vars);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = constant(out_vars, c);
            for (int i = 0; i < nvars_; ++i)
                if (e[i] > 0) t = t * power_of(i, e[i]);
            r = r + t;
        }
        return r;
    }

    // p(g x) for a square matrix g acting on the variables.
    MultiPoly compose_linear(const RationalMatrix& g) const {
        if (g.rows() != nvars_ || g.cols() != nvars_)
            throw std::invalid_argument("compose_linear: dimension mismatch");
        std::vector<MultiPoly> subs;
        subs.reserve(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            RationalVector row(nvars_);
            for (int j = 0; j < nvars_; ++j) row[j] = g(i, j);
            subs.push_back(linear_form(row));
        }
        return compose(subs);
    }

    MultiPoly derivative(int var) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d(e);
            d[var] -= 1;
            r.add_term(d, c * e[var]);
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Print highest-degree terms last (map order is lex on exponents).
        for (const auto& [e, c] : terms_) {
            Rational ac = abs(c);
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            bool unit = (ac == 1);
            bool any_var = false;
            for (int x : e) any_var |= (x > 0);
            if (!unit || !any_var) os << ac.get_str();
            bool star = !unit || !any_var;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (star) os << "*";
                star = true;
                if (static_cast<int>(names.size()) > i) os << names[i];
                else os << "x" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
            }
            first = false;
        }
        return os.str();
    }

private:
    void check_compatible(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

inline MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

}  // namespace coxmono

#endif
