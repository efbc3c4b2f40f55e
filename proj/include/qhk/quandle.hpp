#pragma once

#include "qhk/integer.hpp"

#include <array>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qhk {

// Axiom check outcome with a witness: axiom 1 uses witness[0], axiom 2 uses
// witness[0..1] (column and colliding pair), axiom 3 uses all three.
struct AxiomViolation {
    int axiom = 0;
    std::array<long, 3> witness{-1, -1, -1};
    std::string message;
};

struct quandle_error : std::runtime_error {
    explicit quandle_error(AxiomViolation v) : std::runtime_error(v.message), violation(std::move(v)) {}
    AxiomViolation violation;
};

inline std::optional<AxiomViolation> check_quandle_axioms(const std::vector<std::vector<long>>& t) {
    const long n = static_cast<long>(t.size());
    if (n == 0) return AxiomViolation{0, {}, "empty table"};
    for (long a = 0; a < n; ++a) {
        if (static_cast<long>(t[a].size()) != n) return AxiomViolation{0, {a}, "table is not square"};
        for (long b = 0; b < n; ++b)
            if (t[a][b] < 0 || t[a][b] >= n) {
                std::ostringstream os;
                os << "entry out of range at (" << a << "," << b << ")";
                return AxiomViolation{0, {a, b}, os.str()};
            }
    }
    for (long a = 0; a < n; ++a)
        if (t[a][a] != a) {
            std::ostringstream os;
            os << "idempotency fails: " << a << " * " << a << " = " << t[a][a];
            return AxiomViolation{1, {a}, os.str()};
        }
    for (long b = 0; b < n; ++b) {
        std::vector<char> hit(n, 0);
        for (long a = 0; a < n; ++a) {
            if (hit[t[a][b]]) {
                long first = -1;
                for (long a2 = 0; a2 < n; ++a2)
                    if (t[a2][b] == t[a][b]) {
                        first = a2;
                        break;
                    }
                std::ostringstream os;
                os << "right translation by " << b << " is not bijective: " << first << " * " << b
                   << " = " << a << " * " << b;
                return AxiomViolation{2, {first, b, a}, os.str()};
            }
            hit[t[a][b]] = 1;
        }
    }
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[t[a][c]][t[b][c]]) {
                    std::ostringstream os;
                    os << "self-distributivity fails at (" << a << "," << b << "," << c << ")";
                    return AxiomViolation{3, {a, b, c}, os.str()};
                }
    return std::nullopt;
}

// Finite quandle as a Cayley table over indices 0..n-1; table[a][b] = a*b.
// Construction validates the three axioms. Immutable afterwards.
class FiniteQuandle {
public:
    explicit FiniteQuandle(std::vector<std::vector<long>> table, std::vector<std::string> labels = {})
        : table_(std::move(table)), labels_(std::move(labels)) {
        if (auto v = check_quandle_axioms(table_)) throw quandle_error(*v);
        n_ = static_cast<long>(table_.size());
        inv_.assign(n_, std::vector<long>(n_));
        for (long b = 0; b < n_; ++b)
            for (long a = 0; a < n_; ++a) inv_[table_[a][b]][b] = a;
    }

    long order() const { return n_; }
    long op(long a, long b) const { return table_[a][b]; }
    long op_inv(long a, long b) const { return inv_[a][b]; }
    const std::vector<std::vector<long>>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Right translation by b as a permutation of 0..n-1.
    std::vector<long> column_perm(long b) const {
        std::vector<long> p(n_);
        for (long a = 0; a < n_; ++a) p[a] = table_[a][b];
        return p;
    }

    bool operator==(const FiniteQuandle& o) const { return table_ == o.table_; }

private:
    std::vector<std::vector<long>> table_;
    std::vector<std::string> labels_;
    std::vector<std::vector<long>> inv_;
    long n_ = 0;
};

inline FiniteQuandle trivial_quandle(long n) {
    std::vector<std::vector<long>> t(n, std::vector<long>(n));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) t[a][b] = a;
    return FiniteQuandle(std::move(t));
}

// R_n: Z/n with a*b = 2b - a.
inline FiniteQuandle dihedral_quandle(long n) {
    std::vector<std::vector<long>> t(n, std::vector<long>(n));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) t[a][b] = ((2 * b - a) % n + n) % n;
    std::vector<std::string> labels(n);
    for (long a = 0; a < n; ++a) labels[a] = std::to_string(a);
    return FiniteQuandle(std::move(t), std::move(labels));
}

// Orbits of the inner automorphism action: connected components under
// a ~ a*b, which generate the same partition as the full group action.
inline std::vector<std::vector<long>> orbits(const FiniteQuandle& q) {
    const long n = q.order();
    std::vector<long> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](long x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            long ra = find(a), rb = find(q.op(a, b));
            if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
        }
    std::vector<std::vector<long>> out;
    std::vector<long> where(n, -1);
    for (long a = 0; a < n; ++a) {
        long r = find(a);
        if (where[r] < 0) {
            where[r] = static_cast<long>(out.size());
            out.emplace_back();
        }
        out[where[r]].push_back(a);
    }
    return out;
}

inline bool is_connected(const FiniteQuandle& q) { return orbits(q).size() == 1; }

// Quasigroup: every c -> a*c is a bijection (unique c with a*c = b).
inline bool is_quasigroup(const FiniteQuandle& q) {
    const long n = q.order();
    for (long a = 0; a < n; ++a) {
        std::vector<char> hit(n, 0);
        for (long c = 0; c < n; ++c) {
            long v = q.op(a, c);
            if (hit[v]) return false;
            hit[v] = 1;
        }
    }
    return true;
}

namespace detail {

inline long perm_order(const std::vector<long>& p) {
    const long n = static_cast<long>(p.size());
    std::vector<char> seen(n, 0);
    long ord = 1;
    for (long i = 0; i < n; ++i) {
        if (seen[i]) continue;
        long len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = p[j];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

}  // namespace detail

// Least n >= 1 with n-fold right translation by any element the identity;
// equals the lcm of the column permutation orders.
inline long type_of(const FiniteQuandle& q) {
    long t = 1;
    for (long b = 0; b < q.order(); ++b) t = std::lcm(t, detail::perm_order(q.column_perm(b)));
    return t;
}

}  // namespace qhk
