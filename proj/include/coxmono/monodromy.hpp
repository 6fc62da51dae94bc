#ifndef COXMONO_MONODROMY_HPP
#define COXMONO_MONODROMY_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxmono {

// A finite-order character of the local inertia group, identified with
// the rotation number a/k in Q/Z (the generator maps to e^{2 pi i a/k}).
// Always stored reduced with 0 <= a < k.
struct RotationNumber {
    long long a = 0;
    long long k = 1;

    RotationNumber() = default;
    RotationNumber(long long num, long long den) {
        if (den <= 0) throw std::invalid_argument("rotation number needs positive denominator");
        long long r = num % den;
        if (r < 0) r += den;
        long long g = std::gcd(r, den);
        if (r == 0) { a = 0; k = 1; }
        else { a = r / g; k = den / g; }
    }

    RotationNumber operator+(const RotationNumber& o) const {
        long long l = std::lcm(k, o.k);
        return RotationNumber(a * (l / k) + o.a * (l / o.k), l);
    }
    RotationNumber operator-() const { return RotationNumber(-a, k); }

    bool is_trivial() const { return a == 0 && k == 1; }

    bool operator<(const RotationNumber& o) const {
        // Order by value a/k.
        return a * o.k < o.a * k;
    }
    bool operator==(const RotationNumber& o) const { return a == o.a && k == o.k; }

    std::string to_string() const { return std::to_string(a) + "/" + std::to_string(k); }
};

inline RotationNumber rot(long long a, long long k) { return RotationNumber(a, k); }

// Element of the monodromic Grothendieck group K_{I0}: a finitely
// supported integer multiplicity function on rotation numbers.
class MonodromyClass {
public:
    using Map = std::map<RotationNumber, long long>;

    MonodromyClass() = default;

    static MonodromyClass character(const RotationNumber& r, long long mult = 1) {
        MonodromyClass c;
        c.add(r, mult);
        return c;
    }

    // V_m: all m-th roots of unity with multiplicity one.
    static MonodromyClass V(long long m) {
        if (m < 1) throw std::invalid_argument("V_m requires m >= 1");
        MonodromyClass c;
        for (long long a = 0; a < m; ++a) c.add(RotationNumber(a, m), 1);
        return c;
    }

    // V_phi: the order-two character.
    static MonodromyClass V_phi() { return character(rot(1, 2)); }

    const Map& multiplicities() const { return mult_; }
    bool is_zero() const { return mult_.empty(); }

    void add(const RotationNumber& r, long long m) {
        if (m == 0) return;
        auto it = mult_.find(r);
        if (it == mult_.end()) mult_.emplace(r, m);
        else {
            it->second += m;
            if (it->second == 0) mult_.erase(it);
        }
    }

    long long multiplicity(const RotationNumber& r) const {
        auto it = mult_.find(r);
        return it == mult_.end() ? 0 : it->second;
    }

    MonodromyClass operator+(const MonodromyClass& o) const {
        MonodromyClass r(*this);
        for (const auto& [x, m] : o.mult_) r.add(x, m);
        return r;
    }
    MonodromyClass operator-(const MonodromyClass& o) const {
        MonodromyClass r(*this);
        for (const auto& [x, m] : o.mult_) r.add(x, -m);
        return r;
    }
    MonodromyClass operator-() const {
        MonodromyClass r;
        for (const auto& [x, m] : mult_) r.mult_.emplace(x, -m);
        return r;
    }
    MonodromyClass operator*(long long s) const {
        MonodromyClass r;
        if (s == 0) return r;
        for (const auto& [x, m] : mult_) r.mult_.emplace(x, m * s);
        return r;
    }
    bool operator==(const MonodromyClass& o) const { return mult_ == o.mult_; }

    // Sum of multiplicities (the rank of the virtual representation).
    long long virtual_rank() const {
        long long s = 0;
        for (const auto& [x, m] : mult_) s += m;
        return s;
    }

    std::string to_string() const {
        if (mult_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [x, m] : mult_) {
            if (!first) os << (m < 0 ? " - " : " + ");
            else if (m < 0) os << "-";
            long long am = m < 0 ? -m : m;
            if (am != 1) os << am << "*";
            os << "[" << x.to_string() << "]";
            first = false;
        }
        return os.str();
    }

private:
    Map mult_;
};

inline MonodromyClass operator*(long long s, const MonodromyClass& c) { return c * s; }

// Bilinear extension of V_chi (x) V_chi' = V_{chi chi'}.
inline MonodromyClass tensor(const MonodromyClass& c1, const MonodromyClass& c2) {
    MonodromyClass r;
    for (const auto& [x1, m1] : c1.multiplicities())
        for (const auto& [x2, m2] : c2.multiplicities()) r.add(x1 + x2, m1 * m2);
    return r;
}

// The substitution T -> -T on zeta functions: every rotation number
// shifts by 1/2. An involution; equals tensoring with [1/2].
inline MonodromyClass phi_twist(const MonodromyClass& c) {
    return tensor(MonodromyClass::V_phi(), c);
}

// prod_k (1 - T^k)^{e_k} with distinct k and nonzero e.
struct FactoredZeta {
    std::vector<std::pair<long long, long long>> factors;  // (k, e), k ascending

    bool operator==(const FactoredZeta& o) const { return factors == o.factors; }

    // Canonical rendering: numerator factors first, k ascending.
    std::string to_string() const {
        std::string num, den;
        int nnum = 0, nden = 0;
        bool den_plain = true;  // single factor without an exponent
        for (const auto& [k, e] : factors) {
            std::string f = "(1-T" + (k == 1 ? std::string() : "^" + std::to_string(k)) + ")";
            long long ae = e < 0 ? -e : e;
            if (ae > 1) f += "^" + std::to_string(ae);
            if (e > 0) { num += f; ++nnum; }
            else {
                den += f;
                ++nden;
                den_plain &= (ae == 1);
            }
        }
        if (nnum == 0) num = "1";
        if (nden == 0) return num;
        if (nden == 1 && den_plain) return num + "/" + den;
        return num + "/(" + den + ")";
    }

    // Expanded integer-coefficient polynomial, when the rational
    // function is one (denominator divides the numerator exactly).
    std::optional<std::vector<long long>> expand_polynomial() const {
        std::vector<long long> num{1};
        auto mul_factor = [](std::vector<long long> p, long long k) {
            std::vector<long long> r(p.size() + k, 0);
            for (size_t i = 0; i < p.size(); ++i) {
                r[i] += p[i];
                r[i + k] -= p[i];
            }
            return r;
        };
        // Exact division by (1 - T^k); the divisor has unit constant
        // term, so divide from the low end and demand a zero tail.
        auto div_factor = [](const std::vector<long long>& p,
                             long long k) -> std::optional<std::vector<long long>> {
            std::vector<long long> q(p.size(), 0);
            for (size_t j = 0; j < p.size(); ++j)
                q[j] = p[j] + (j >= static_cast<size_t>(k) ? q[j - k] : 0);
            size_t cut = p.size() > static_cast<size_t>(k) ? p.size() - k : 0;
            for (size_t j = cut; j < q.size(); ++j)
                if (q[j] != 0) return std::nullopt;
            q.resize(cut ? cut : 1);
            return q;
        };
        std::vector<std::pair<long long, long long>> dens;
        for (const auto& [k, e] : factors) {
            for (long long i = 0; i < e; ++i) num = mul_factor(num, k);
            if (e < 0) dens.emplace_back(k, -e);
        }
        for (const auto& [k, e] : dens)
            for (long long i = 0; i < e; ++i) {
                auto q = div_factor(num, k);
                if (!q) return std::nullopt;
                num = *q;
            }
        while (num.size() > 1 && num.back() == 0) num.pop_back();
        return num;
    }
};

namespace detail {
inline int moebius(long long n) {
    int m = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}
}  // namespace detail

// The zeta-function realization Z of a Galois-stable class, as a
// product of (1 - T^k) factors with integer exponents. Throws on a
// class whose multiplicities are not constant on primitive residues.
inline FactoredZeta zeta_of_class(const MonodromyClass& c) {
    // Group by denominator and check Galois stability.
    std::map<long long, long long> by_den;
    for (const auto& [x, m] : c.multiplicities()) {
        auto it = by_den.find(x.k);
        if (it == by_den.end()) by_den.emplace(x.k, m);
        else if (it->second != m)
            throw std::domain_error("class is not Galois-stable");
    }
    auto totient = [](long long k) {
        long long t = k, n = k;
        for (long long p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            t -= t / p;
            while (n % p == 0) n /= p;
        }
        if (n > 1) t -= t / n;
        return t;
    };
    for (const auto& [k, m] : by_den) {
        long long present = 0;
        for (const auto& [x, mm] : c.multiplicities())
            if (x.k == k) ++present;
        if (present != totient(k)) throw std::domain_error("class is not Galois-stable");
    }
    // Primitive-part multiplicities to V_d coordinates via Moebius.
    std::map<long long, long long> vd;
    for (const auto& [k, m] : by_den)
        for (long long d = 1; d * d <= k; ++d) {
            if (k % d) continue;
            vd[d] += m * detail::moebius(k / d);
            if (d != k / d) vd[k / d] += m * detail::moebius(d);
        }
    FactoredZeta z;
    for (const auto& [d, cd] : vd)
        if (cd != 0) z.factors.emplace_back(d, -cd);
    return z;
}

// Inverse of zeta_of_class on its image: (1 - T^k)^e contributes -e V_k.
inline MonodromyClass class_of_factored(const FactoredZeta& f) {
    MonodromyClass c;
    for (const auto& [k, e] : f.factors) c = c + MonodromyClass::V(k) * (-e);
    return c;
}

}  // namespace coxmono

#endif
