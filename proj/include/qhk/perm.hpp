#pragma once

#include "qhk/integer.hpp"
#include "qhk/quandle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

namespace qhk {

using Perm = std::vector<long>;

inline Perm perm_identity(long degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Apply a first, then b (composition matching a right action).
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

inline Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<long>(i);
    return r;
}

inline std::string perm_cycles(const Perm& p) {
    std::ostringstream os;
    std::vector<char> seen(p.size(), 0);
    bool any = false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<long>(i)) continue;
        any = true;
        os << '(';
        long j = static_cast<long>(i);
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) os << ' ';
            os << j;
            first = false;
            j = p[j];
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

constexpr long kDefaultGroupBound = 10000;

// Permutation group with fully enumerated elements; closure is plain
// breadth-first multiplication, enough for the target scale.
struct PermGroup {
    long degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> elements;
    long identity_index = 0;

    long order() const { return static_cast<long>(elements.size()); }

    long index_of(const Perm& p) const {
        auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::make_pair(p, 0L),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it == sorted_.end() || it->first != p) return -1;
        return it->second;
    }

    void build_index() {
        sorted_.clear();
        sorted_.reserve(elements.size());
        for (size_t i = 0; i < elements.size(); ++i) sorted_.emplace_back(elements[i], static_cast<long>(i));
        std::sort(sorted_.begin(), sorted_.end());
    }

private:
    std::vector<std::pair<Perm, long>> sorted_;
};

inline PermGroup close_generators(long degree, std::vector<Perm> gens, long bound = kDefaultGroupBound) {
    PermGroup g;
    g.degree = degree;
    g.generators = std::move(gens);
    std::map<Perm, long> seen;
    std::queue<long> todo;
    g.elements.push_back(perm_identity(degree));
    seen[g.elements[0]] = 0;
    todo.push(0);
    while (!todo.empty()) {
        long i = todo.front();
        todo.pop();
        for (const Perm& s : g.generators) {
            Perm p = perm_compose(g.elements[i], s);
            if (seen.count(p)) continue;
            if (static_cast<long>(g.elements.size()) >= bound) {
                std::ostringstream os;
                os << "group closure exceeded the bound " << bound << " (reached "
                   << g.elements.size() << " elements)";
                throw bound_error(os.str());
            }
            seen[p] = static_cast<long>(g.elements.size());
            todo.push(seen[p]);
            g.elements.push_back(std::move(p));
        }
    }
    g.identity_index = 0;
    g.build_index();
    return g;
}

// Inn(X): closure of the right translations.
inline PermGroup inn_group(const FiniteQuandle& q, long bound = kDefaultGroupBound) {
    std::vector<Perm> gens;
    for (long b = 0; b < q.order(); ++b) {
        Perm p = q.column_perm(b);
        if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    }
    return close_generators(q.order(), std::move(gens), bound);
}

inline PermGroup stabilizer(const PermGroup& g, long x0) {
    if (x0 < 0 || x0 >= g.degree) throw input_error("stabilizer: base point out of range");
    PermGroup s;
    s.degree = g.degree;
    for (const Perm& p : g.elements)
        if (p[x0] == x0) s.elements.push_back(p);
    for (const Perm& p : s.elements)
        if (p != perm_identity(g.degree)) s.generators.push_back(p);
    for (size_t i = 0; i < s.elements.size(); ++i)
        if (s.elements[i] == perm_identity(g.degree)) s.identity_index = static_cast<long>(i);
    s.build_index();
    return s;
}

inline std::vector<long> orbit_of(const PermGroup& g, long x) {
    std::vector<char> hit(g.degree, 0);
    std::vector<long> out;
    for (const Perm& p : g.elements)
        if (!hit[p[x]]) {
            hit[p[x]] = 1;
            out.push_back(p[x]);
        }
    std::sort(out.begin(), out.end());
    return out;
}

constexpr long kDefaultConjClassBound = 4096;

// Quandle on the conjugacy class of `seed` under the group generated by
// `gens`, with g*h = h^-1 g h. Elements are ordered lexicographically.
inline FiniteQuandle conjugation_class(const std::vector<Perm>& gens, const Perm& seed,
                                       long bound = kDefaultConjClassBound) {
    const long degree = static_cast<long>(seed.size());
    for (const Perm& g : gens)
        if (static_cast<long>(g.size()) != degree)
            throw input_error("conjugation_class: generators and seed must share a degree");

    std::map<Perm, long> seen;
    std::vector<Perm> cls{seed};
    seen[seed] = 0;
    std::queue<long> todo;
    todo.push(0);
    while (!todo.empty()) {
        long i = todo.front();
        todo.pop();
        for (const Perm& g : gens)
            for (const Perm& h : {g, perm_inverse(g)}) {
                Perm c = perm_compose(perm_compose(perm_inverse(h), cls[i]), h);
                if (seen.count(c)) continue;
                if (static_cast<long>(cls.size()) >= bound) {
                    std::ostringstream os;
                    os << "conjugacy class exceeded the bound " << bound;
                    throw bound_error(os.str());
                }
                seen[c] = static_cast<long>(cls.size());
                todo.push(seen[c]);
                cls.push_back(std::move(c));
            }
    }

    std::sort(cls.begin(), cls.end());
    std::map<Perm, long> index;
    for (size_t i = 0; i < cls.size(); ++i) index[cls[i]] = static_cast<long>(i);

    const long n = static_cast<long>(cls.size());
    std::vector<std::vector<long>> table(n, std::vector<long>(n));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            Perm c = perm_compose(perm_compose(perm_inverse(cls[b]), cls[a]), cls[b]);
            auto it = index.find(c);
            if (it == index.end()) throw input_error("conjugation_class: class not closed (internal)");
            table[a][b] = it->second;
        }
    std::vector<std::string> labels(n);
    for (long a = 0; a < n; ++a) labels[a] = perm_cycles(cls[a]);
    return FiniteQuandle(std::move(table), std::move(labels));
}

// Transposition quandle: class of (0 1) in the symmetric group S_n.
inline FiniteQuandle transposition_quandle(long n, long bound = kDefaultConjClassBound) {
    if (n < 2) throw input_error("transposition_quandle: need n >= 2");
    Perm swap01 = perm_identity(n);
    std::swap(swap01[0], swap01[1]);
    std::vector<Perm> gens{swap01};
    if (n > 2) {
        Perm cyc(n);
        for (long i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
        gens.push_back(std::move(cyc));
    }
    return conjugation_class(gens, swap01, bound);
}

}  // namespace qhk
