#ifndef COXMONO_ZETA_HPP
#define COXMONO_ZETA_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "coxmono/coxeter.hpp"
#include "coxmono/monodromy.hpp"

namespace coxmono {

// All nonempty vertex subsets inducing a connected subdiagram, in
// increasing bitmask order.
inline std::vector<std::vector<int>> connected_subgraphs(const CoxeterDiagram& d) {
    std::vector<std::vector<int>> out;
    auto adj = d.adjacency();
    for (unsigned mask = 1; mask < (1u << d.n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < d.n; ++v)
            if (mask & (1u << v)) verts.push_back(v);
        // BFS within the subset.
        std::vector<bool> seen(d.n, false);
        std::vector<int> stack{verts[0]};
        seen[verts[0]] = true;
        size_t reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (!(mask & (1u << w)) || seen[w]) continue;
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
        if (reached == verts.size()) out.push_back(verts);
    }
    return out;
}

namespace detail {

// Memoized local classes M_G, keyed by the classified type name
// (classification canonicalizes the diagram).
class DiagramClassCache {
public:
    static DiagramClassCache& instance() {
        static DiagramClassCache c;
        return c;
    }

    MonodromyClass get_or_compute(const std::string& key,
                                  const std::function<MonodromyClass()>& compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        MonodromyClass v = compute();
        std::lock_guard<std::mutex> lock(mu_);
        cache_.emplace(key, v);
        return v;
    }

private:
    std::mutex mu_;
    std::map<std::string, MonodromyClass> cache_;
};

}  // namespace detail

// The invariant nearby-cycle class M_G of the discriminant at the
// origin, computed by the connected-subdiagram recursion: in K_{I0},
//
//   sum_{E connected} (-1)^{|E|} phi_twist(M_{G(E)}) = n V_1 - sum_i V_{d_i},
//
// solved for the top term and memoized per type. Disconnected diagrams
// have M = 0, which makes the recursion's sums uniform.
inline MonodromyClass local_class_M(const CoxeterDiagram& d) {
    if (d.n == 0) return MonodromyClass();
    if (d.connected_components().size() > 1) return MonodromyClass();
    GroupType t = classify(d);
    return detail::DiagramClassCache::instance().get_or_compute(t.name(), [&]() {
        std::vector<int> degs = t.degrees();
        MonodromyClass rhs = MonodromyClass::V(1) * d.n;
        for (int deg : degs) rhs = rhs - MonodromyClass::V(deg);
        for (const auto& verts : connected_subgraphs(d)) {
            if (static_cast<int>(verts.size()) == d.n) continue;
            MonodromyClass sub = local_class_M(d.induced(verts));
            long long sign = (verts.size() % 2) ? -1 : 1;
            rhs = rhs - phi_twist(sub) * sign;
        }
        long long sign = (d.n % 2) ? -1 : 1;
        return phi_twist(rhs * sign);
    });
}

inline MonodromyClass local_class_M(const GroupType& t) {
    return local_class_M(diagram_of_type(t));
}

// Z(T, G) = Z_{Delta~,0}(T) in canonical factored form.
inline FactoredZeta zeta_of_type(const CoxeterDiagram& d) {
    return zeta_of_class(local_class_M(d));
}

// Independent rank-2 oracle: the monodromy class of the plane-curve
// singularity x^a + y^b at the origin. Eigenvalues on reduced H^1 are
// e^{2 pi i (i/a + j/b)}, 1 <= i < a, 1 <= j < b; H^0 contributes V_1
// since the Milnor fibre is connected.
inline MonodromyClass brieskorn_oracle(int a, int b) {
    if (a < 2 || b < 2) throw std::invalid_argument("brieskorn_oracle requires a, b >= 2");
    MonodromyClass c = MonodromyClass::V(1);
    for (int i = 1; i < a; ++i)
        for (int j = 1; j < b; ++j)
            c.add(RotationNumber(static_cast<long long>(i) * b + static_cast<long long>(j) * a,
                                 static_cast<long long>(a) * b),
                  -1);
    return c;
}

// Sign-normalized variant.
inline MonodromyClass local_class_Mbar(const CoxeterDiagram& d) {
    long long sign = (d.n % 2) ? 1 : -1;  // (-1)^{n-1}
    return local_class_M(d) * sign;
}

// The class of the discriminant restricted to B = {q = 1} minus the
// arrangement, at the origin: (-1)^n times the sum of Mbar over proper
// connected subdiagrams.
inline MonodromyClass global_class_at_0(const CoxeterDiagram& d) {
    if (d.connected_components().size() > 1)
        throw std::invalid_argument("global_class_at_0 requires a connected diagram");
    MonodromyClass acc;
    for (const auto& verts : connected_subgraphs(d)) {
        if (static_cast<int>(verts.size()) == d.n) continue;
        CoxeterDiagram sub = d.induced(verts);
        acc = acc + local_class_Mbar(sub);
    }
    long long sign = (d.n % 2) ? -1 : 1;
    return acc * sign;
}

// Single-character class (-1)^{n-1} V_{phi^{n+N} chi^N}.
inline MonodromyClass exactbar_class(const CoxeterDiagram& d, const RotationNumber& chi) {
    GroupType t = classify(d);
    int n = t.rank(), N = t.num_reflections();
    RotationNumber r = RotationNumber(chi.a * N, chi.k) + RotationNumber(n + N, 2);
    long long sign = (n % 2) ? 1 : -1;
    return MonodromyClass::character(r, sign);
}

struct AbCoefficients {
    long long a_bar = 0;
    long long b_bar = 0;
};

// (a_bar, b_bar) with a_bar + b_bar = (-1)^{n-1}, pinned by the
// exactbar class at trivial chi.
inline AbCoefficients ab_coefficients(const CoxeterDiagram& d) {
    GroupType t = classify(d);
    int n = t.rank(), N = t.num_reflections();
    long long sign = (n % 2) ? 1 : -1;
    if ((n + N) % 2 == 0) return {sign, 0};
    return {0, sign};
}

// The class of q^N restricted to the arrangement complement, at the
// origin: (a_bar - b_bar) V_N + b_bar V_{2N}.
inline MonodromyClass qN_class(const CoxeterDiagram& d) {
    GroupType t = classify(d);
    int N = t.num_reflections();
    AbCoefficients ab = ab_coefficients(d);
    MonodromyClass c = MonodromyClass::V(N) * (ab.a_bar - ab.b_bar);
    return c + MonodromyClass::V(2LL * N) * ab.b_bar;
}

// Complement formula: the global class at infinity is M_G minus the
// qN class.
inline MonodromyClass global_class_at_inf(const CoxeterDiagram& d) {
    if (d.connected_components().size() > 1)
        throw std::invalid_argument("global_class_at_inf requires a connected diagram");
    return local_class_M(d) - qN_class(d);
}

struct IdentityCheck {
    bool ok = false;
    MonodromyClass lhs, rhs;
};

// Consistency identity: [at 0] - [at inf] - [qN] equals
// (-1)^n sum_i (V_{phi^{d_i}} (x) V_{d_i} - V_phi). An algebraic
// consequence of the recursion, so it must always pass.
inline IdentityCheck check_otherform(const CoxeterDiagram& d) {
    GroupType t = classify(d);
    MonodromyClass lhs = global_class_at_0(d) - global_class_at_inf(d) - qN_class(d);
    MonodromyClass rhs;
    for (int deg : t.degrees()) {
        MonodromyClass phi_d = MonodromyClass::character(RotationNumber(deg, 2));
        rhs = rhs + tensor(phi_d, MonodromyClass::V(deg)) - MonodromyClass::V_phi();
    }
    long long sign = (t.rank() % 2) ? -1 : 1;
    rhs = rhs * sign;
    return {lhs == rhs, lhs, rhs};
}

// Twisted-coefficient check: a_bar V_{chi^N} + b_bar V_{phi chi^N}
// must reproduce the exactbar class for every chi.
inline bool check_ab2(const CoxeterDiagram& d, const RotationNumber& chi) {
    GroupType t = classify(d);
    int N = t.num_reflections();
    AbCoefficients ab = ab_coefficients(d);
    RotationNumber chiN(chi.a * N, chi.k);
    MonodromyClass lhs = MonodromyClass::character(chiN, ab.a_bar) +
                         MonodromyClass::character(chiN + RotationNumber(1, 2), ab.b_bar);
    return lhs == exactbar_class(d, chi);
}

}  // namespace coxmono

#endif
