#ifndef COXMONO_COXETER_HPP
#define COXMONO_COXETER_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxmono {

// Labeled Coxeter diagram. An absent edge means label 2; stored edges
// carry labels >= 3.
struct CoxeterDiagram {
    int n = 0;
    std::map<std::pair<int, int>, int> edges;  // (i < j) -> label m >= 3

    void add_edge(int i, int j, int m) {
        if (i == j || i < 0 || j < 0 || i >= n || j >= n)
            throw std::invalid_argument("diagram edge out of range");
        if (m < 3) throw std::invalid_argument("diagram edge label must be >= 3");
        auto key = std::minmax(i, j);
        if (edges.count(key)) throw std::invalid_argument("duplicate diagram edge");
        edges[key] = m;
    }

    int label(int i, int j) const {
        auto it = edges.find(std::minmax(i, j));
        return it == edges.end() ? 2 : it->second;
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (const auto& [e, m] : edges) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
        return adj;
    }

    std::vector<std::vector<int>> connected_components() const {
        auto adj = adjacency();
        std::vector<int> comp(n, -1);
        std::vector<std::vector<int>> out;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> stack{s}, verts;
            comp[s] = static_cast<int>(out.size());
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                verts.push_back(v);
                for (int w : adj[v])
                    if (comp[w] < 0) {
                        comp[w] = comp[s];
                        stack.push_back(w);
                    }
            }
            std::sort(verts.begin(), verts.end());
            out.push_back(verts);
        }
        return out;
    }

    // Induced subdiagram on a sorted vertex subset, relabeled 0..k-1.
    CoxeterDiagram induced(const std::vector<int>& verts) const {
        CoxeterDiagram d;
        d.n = static_cast<int>(verts.size());
        for (int a = 0; a < d.n; ++a)
            for (int b = a + 1; b < d.n; ++b) {
                int m = label(verts[a], verts[b]);
                if (m >= 3) d.add_edge(a, b, m);
            }
        return d;
    }
};

enum class Family { A, B, D, E, F, H, I2 };

struct TypeFactor {
    Family family;
    int rank;
    int m = 0;  // dihedral label, only for Family::I2

    std::string name() const {
        switch (family) {
            case Family::A: return "A" + std::to_string(rank);
            case Family::B: return "B" + std::to_string(rank);
            case Family::D: return "D" + std::to_string(rank);
            case Family::E: return "E" + std::to_string(rank);
            case Family::F: return "F4";
            case Family::H: return "H" + std::to_string(rank);
            case Family::I2: return m == 6 ? "G2" : "I2(" + std::to_string(m) + ")";
        }
        return "?";
    }

    std::vector<int> degrees() const {
        std::vector<int> d;
        switch (family) {
            case Family::A:
                for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
                break;
            case Family::B:
                for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
                break;
            case Family::D:
                for (int i = 1; i < rank; ++i) d.push_back(2 * i);
                d.push_back(rank);
                break;
            case Family::E:
                if (rank == 6) d = {2, 5, 6, 8, 9, 12};
                else if (rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
                else d = {2, 8, 12, 14, 18, 20, 24, 30};
                break;
            case Family::F: d = {2, 6, 8, 12}; break;
            case Family::H:
                d = (rank == 3) ? std::vector<int>{2, 6, 10} : std::vector<int>{2, 12, 20, 30};
                break;
            case Family::I2: d = {2, m}; break;
        }
        std::sort(d.begin(), d.end());
        return d;
    }

    bool crystallographic() const {
        switch (family) {
            case Family::A:
            case Family::B:
            case Family::D:
            case Family::E:
            case Family::F: return true;
            case Family::I2: return m == 6;  // I2(3), I2(4) classify as A2, B2
            case Family::H: return false;
        }
        return false;
    }

    bool operator<(const TypeFactor& o) const {
        auto key = [](const TypeFactor& t) { return std::tuple(static_cast<int>(t.family), t.rank, t.m); };
        return key(*this) < key(o);
    }
    bool operator==(const TypeFactor& o) const {
        return family == o.family && rank == o.rank && m == o.m;
    }
};

// A finite Coxeter group type: a canonically ordered product of
// irreducible factors.
struct GroupType {
    std::vector<TypeFactor> factors;

    void canonicalize() { std::sort(factors.begin(), factors.end()); }

    int rank() const {
        int r = 0;
        for (const auto& f : factors) r += f.rank;
        return r;
    }

    std::vector<int> degrees() const {
        std::vector<int> d;
        for (const auto& f : factors) {
            auto fd = f.degrees();
            d.insert(d.end(), fd.begin(), fd.end());
        }
        std::sort(d.begin(), d.end());
        return d;
    }

    long long order() const {
        long long o = 1;
        for (int d : degrees()) o *= d;
        return o;
    }

    int num_reflections() const {
        int n = 0;
        for (int d : degrees()) n += d - 1;
        return n;
    }

    bool crystallographic() const {
        for (const auto& f : factors)
            if (!f.crystallographic()) return false;
        return true;
    }

    bool irreducible() const { return factors.size() == 1; }

    std::string name() const {
        if (factors.empty()) return "(trivial)";
        std::string s;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) s += "x";
            s += factors[i].name();
        }
        return s;
    }

    bool operator==(const GroupType& o) const { return factors == o.factors; }
};

namespace detail {

inline TypeFactor dihedral_factor(int m) {
    if (m < 3) throw std::invalid_argument("I2(m) requires m >= 3");
    if (m == 3) return {Family::A, 2};
    if (m == 4) return {Family::B, 2};
    return {Family::I2, 2, m};
}

// Classify one connected labeled diagram, or throw if it is not of
// finite type.
inline TypeFactor classify_connected(const CoxeterDiagram& d) {
    int n = d.n;
    if (n == 1) return {Family::A, 1};
    if (static_cast<int>(d.edges.size()) != n - 1)
        throw std::invalid_argument("diagram is not of finite type (not a tree)");
    if (n == 2) return dihedral_factor(d.edges.begin()->second);

    auto adj = d.adjacency();
    std::vector<int> high_edges;  // labels > 3
    for (const auto& [e, m] : d.edges)
        if (m > 3) high_edges.push_back(m);
    int branch = -1;
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(adj[v].size()) > 3)
            throw std::invalid_argument("diagram is not of finite type (vertex degree > 3)");
        if (adj[v].size() == 3) {
            if (branch >= 0)
                throw std::invalid_argument("diagram is not of finite type (two branch points)");
            branch = v;
        }
    }
    if (high_edges.size() > 1)
        throw std::invalid_argument("diagram is not of finite type (two labels > 3)");

    if (branch >= 0) {
        if (!high_edges.empty())
            throw std::invalid_argument("diagram is not of finite type (labeled branch)");
        // Arm lengths from the branch point.
        std::vector<int> arms;
        for (int s : adj[branch]) {
            int len = 1, prev = branch, cur = s;
            while (true) {
                int next = -1;
                for (int w : adj[cur])
                    if (w != prev) next = w;
                if (next < 0) break;
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
            return {Family::E, n};
        throw std::invalid_argument("diagram is not of finite type (bad branch arms)");
    }

    // A path. Locate the high-label edge if any.
    if (high_edges.empty()) return {Family::A, n};
    int label = high_edges[0];
    // Distance of the labeled edge from the nearer path end.
    std::pair<int, int> he;
    for (const auto& [e, m] : d.edges)
        if (m > 3) he = e;
    bool at_end = (adj[he.first].size() == 1) || (adj[he.second].size() == 1);
    if (label == 4) {
        if (at_end) return {Family::B, n};
        if (n == 4) {
            // Must be the middle edge of the path.
            if (adj[he.first].size() == 2 && adj[he.second].size() == 2) return {Family::F, 4};
        }
        throw std::invalid_argument("diagram is not of finite type (interior label 4)");
    }
    if (label == 5) {
        if (at_end && (n == 3 || n == 4)) return {Family::H, n};
        throw std::invalid_argument("diagram is not of finite type (label 5 in rank > 4)");
    }
    throw std::invalid_argument("diagram is not of finite type (label >= 6 in rank > 2)");
}

inline CoxeterDiagram factor_diagram(const TypeFactor& f) {
    CoxeterDiagram d;
    d.n = f.rank;
    switch (f.family) {
        case Family::A:
            for (int i = 0; i + 1 < f.rank; ++i) d.add_edge(i, i + 1, 3);
            break;
        case Family::B:
            d.add_edge(0, 1, 4);
            for (int i = 1; i + 1 < f.rank; ++i) d.add_edge(i, i + 1, 3);
            break;
        case Family::D:
            for (int i = 0; i + 2 < f.rank; ++i) d.add_edge(i, i + 1, 3);
            d.add_edge(f.rank - 3, f.rank - 1, 3);
            break;
        case Family::E:
            for (int i = 0; i + 2 < f.rank; ++i) d.add_edge(i, i + 1, 3);
            d.add_edge(2, f.rank - 1, 3);
            break;
        case Family::F:
            d.add_edge(0, 1, 3);
            d.add_edge(1, 2, 4);
            d.add_edge(2, 3, 3);
            break;
        case Family::H:
            d.add_edge(0, 1, 5);
            for (int i = 1; i + 1 < f.rank; ++i) d.add_edge(i, i + 1, 3);
            break;
        case Family::I2:
            d.add_edge(0, 1, f.m);
            break;
    }
    return d;
}

inline TypeFactor parse_factor(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty type name");
    if (s == "G2") return dihedral_factor(6);
    if (s.rfind("I2(", 0) == 0 && s.back() == ')') {
        int m = std::stoi(s.substr(3, s.size() - 4));
        return dihedral_factor(m);
    }
    char fam = s[0];
    int k;
    try {
        k = std::stoi(s.substr(1));
    } catch (...) {
        throw std::invalid_argument("unknown type name: " + s);
    }
    switch (fam) {
        case 'A':
            if (k < 1) throw std::invalid_argument("A_k requires k >= 1");
            return {Family::A, k};
        case 'B':
        case 'C':
            if (k < 2) throw std::invalid_argument("B_k requires k >= 2");
            return {Family::B, k};
        case 'D':
            if (k < 4) throw std::invalid_argument("D_k requires k >= 4");
            return {Family::D, k};
        case 'E':
            if (k < 6 || k > 8) throw std::invalid_argument("E_k requires 6 <= k <= 8");
            return {Family::E, k};
        case 'F':
            if (k != 4) throw std::invalid_argument("only F4 exists");
            return {Family::F, 4};
        case 'H':
            if (k < 3 || k > 4) throw std::invalid_argument("H_k requires k in {3, 4}");
            return {Family::H, k};
        default: throw std::invalid_argument("unknown type name: " + s);
    }
}

}  // namespace detail

// Classify a diagram into a finite group type, or throw.
inline GroupType classify(const CoxeterDiagram& d) {
    GroupType t;
    for (const auto& comp : d.connected_components())
        t.factors.push_back(detail::classify_connected(d.induced(comp)));
    t.canonicalize();
    return t;
}

inline CoxeterDiagram diagram_of_type(const GroupType& t) {
    CoxeterDiagram d;
    for (const auto& f : t.factors) {
        CoxeterDiagram fd = detail::factor_diagram(f);
        int off = d.n;
        d.n += fd.n;
        for (const auto& [e, m] : fd.edges) d.edges[{e.first + off, e.second + off}] = m;
    }
    return d;
}

// Diagram string grammar: a named type ("A3", "I2(5)", "H3", products
// like "A1xA1") or an explicit edge list "0-1:3,1-2:4".
inline CoxeterDiagram parse_diagram(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty diagram spec");
    if (spec.find('-') != std::string::npos) {
        CoxeterDiagram d;
        std::vector<std::tuple<int, int, int>> edges;
        std::stringstream ss(spec);
        std::string item;
        int maxv = -1;
        while (std::getline(ss, item, ',')) {
            auto dash = item.find('-');
            auto colon = item.find(':');
            if (dash == std::string::npos || colon == std::string::npos || colon < dash)
                throw std::invalid_argument("malformed edge list item: " + item);
            int i, j, m;
            try {
                i = std::stoi(item.substr(0, dash));
                j = std::stoi(item.substr(dash + 1, colon - dash - 1));
                m = std::stoi(item.substr(colon + 1));
            } catch (...) {
                throw std::invalid_argument("malformed edge list item: " + item);
            }
            if (i < 0 || j < 0 || i == j) throw std::invalid_argument("bad edge vertices: " + item);
            if (m < 3) throw std::invalid_argument("edge labels must be >= 3");
            edges.emplace_back(i, j, m);
            maxv = std::max({maxv, i, j});
        }
        d.n = maxv + 1;
        for (auto& [i, j, m] : edges) d.add_edge(i, j, m);
        return d;
    }
    GroupType t;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, 'x')) t.factors.push_back(detail::parse_factor(item));
    // Factors are laid out in the order written; classification
    // canonicalizes.
    GroupType laid = t;
    return diagram_of_type(laid);
}

inline GroupType parse_type(const std::string& spec) { return classify(parse_diagram(spec)); }

inline std::vector<int> degrees(const GroupType& t) { return t.degrees(); }

}  // namespace coxmono

#endif
