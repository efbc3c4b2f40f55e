#pragma once

#include "qhk/abelian.hpp"
#include "qhk/matrix.hpp"
#include "qhk/modp.hpp"
#include "qhk/quandle.hpp"

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qhk {

// Rack/quandle chain complex in low degree. Bases are ordered
// lexicographically in element indices: pair (x,y) -> x*n + y, triple
// (x,y,z) -> (x*n + y)*n + z, so every matrix is reproducible byte for byte.

constexpr long kDefaultHomologyOrderBound = 20;

namespace detail {

inline void check_homology_bound(long n, long bound, const char* who) {
    if (n > bound) {
        std::ostringstream os;
        os << who << ": order " << n << " exceeds the bound " << bound << " (n^3 columns)";
        throw bound_error(os.str());
    }
}

}  // namespace detail

inline long pair_index(long n, long x, long y) { return x * n + y; }

// d2(x,y) = (x) - (x*y)
inline SparseMat boundary2_sparse(const FiniteQuandle& q) {
    const long n = q.order();
    SparseMat m;
    m.rows = n;
    m.cols = n * n;
    m.columns.resize(m.cols);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            long xy = q.op(x, y);
            if (xy == x) continue;
            auto& col = m.columns[pair_index(n, x, y)];
            if (x < xy) {
                col.emplace_back(x, 1);
                col.emplace_back(xy, -1);
            } else {
                col.emplace_back(xy, -1);
                col.emplace_back(x, 1);
            }
        }
    return m;
}

// d3(x,y,z) = (x,z) - (x*y,z) - (x,y) + (x*z,y*z)
inline SparseMat boundary3_sparse(const FiniteQuandle& q) {
    const long n = q.order();
    SparseMat m;
    m.rows = n * n;
    m.cols = n * n * n;
    m.columns.resize(m.cols);
    std::map<long, Int> acc;
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z) {
                acc.clear();
                acc[pair_index(n, x, z)] += 1;
                acc[pair_index(n, q.op(x, y), z)] -= 1;
                acc[pair_index(n, x, y)] -= 1;
                acc[pair_index(n, q.op(x, z), q.op(y, z))] += 1;
                auto& col = m.columns[(x * n + y) * n + z];
                for (auto& [idx, v] : acc)
                    if (v != 0) col.emplace_back(idx, v);
            }
    return m;
}

inline IntMatrix boundary2(const FiniteQuandle& q) { return boundary2_sparse(q).to_dense(); }

inline IntMatrix boundary3(const FiniteQuandle& q, long bound = kDefaultHomologyOrderBound) {
    detail::check_homology_bound(q.order(), bound, "boundary3");
    return boundary3_sparse(q).to_dense();
}

// H1 = C1 / Im d2 (d1 = 0): free of rank = number of orbits.
inline FinGenAb h1(const FiniteQuandle& q) {
    InvariantFactors inv = invariant_factors(boundary2_sparse(q));
    return group_from_factors(q.order() - inv.rank, std::move(inv.factors));
}

inline FinGenAb h2_rack(const FiniteQuandle& q, long bound = kDefaultHomologyOrderBound) {
    detail::check_homology_bound(q.order(), bound, "h2_rack");
    return homology_of_pair(boundary2_sparse(q), boundary3_sparse(q));
}

// Quandle homology: additionally kill the degenerate pairs (a,a); realized by
// enlarging Im d3 with the degenerate generators, which lie in Ker d2 by
// idempotency.
inline FinGenAb h2_quandle(const FiniteQuandle& q, long bound = kDefaultHomologyOrderBound) {
    detail::check_homology_bound(q.order(), bound, "h2_quandle");
    const long n = q.order();
    SparseMat d3 = boundary3_sparse(q);
    for (long a = 0; a < n; ++a) d3.columns.push_back({{pair_index(n, a, a), Int(1)}});
    d3.cols += n;
    return homology_of_pair(boundary2_sparse(q), d3);
}

// dim over F_ell of degree-2 quandle cohomology: cochains on X^2 vanishing on
// the diagonal, transposed boundary maps reduced mod ell.
inline long h2_quandle_cohomology_dim(const FiniteQuandle& q, long ell,
                                      long bound = kDefaultHomologyOrderBound) {
    if (!is_prime(ell)) throw input_error("h2_quandle_cohomology_dim: coefficient modulus must be prime");
    detail::check_homology_bound(q.order(), bound, "h2_quandle_cohomology_dim");
    const long n = q.order();
    const unsigned p = static_cast<unsigned>(ell);

    // Columns: off-diagonal pairs.
    std::vector<long> col_of_pair(n * n, -1);
    long ncols = 0;
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            if (x != y) col_of_pair[pair_index(n, x, y)] = ncols++;

    std::vector<modp::SparseRow> rows2;
    rows2.reserve(n * n * n);
    std::map<long, long> acc;
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z) {
                acc.clear();
                auto put = [&](long a, long b, long s) {
                    long c = col_of_pair[pair_index(n, a, b)];
                    if (c >= 0) acc[c] += s;
                };
                put(x, z, 1);
                put(q.op(x, y), z, -1);
                put(x, y, -1);
                put(q.op(x, z), q.op(y, z), 1);
                modp::SparseRow r;
                for (auto& [c, s] : acc) {
                    unsigned v = static_cast<unsigned>(((s % p) + p) % p);
                    if (v) r.emplace_back(c, v);
                }
                if (!r.empty()) rows2.push_back(std::move(r));
            }
    long rank_d2 = modp::rank(ncols, p, rows2);

    // delta^1 f (x,y) = f(x) - f(x*y), as rows over the n point-cochains.
    std::vector<modp::SparseRow> rows1;
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            if (x == y) continue;
            long xy = q.op(x, y);
            if (xy == x) continue;
            modp::SparseRow r;
            if (x < xy) {
                r.emplace_back(x, 1);
                r.emplace_back(xy, p - 1);
            } else {
                r.emplace_back(xy, p - 1);
                r.emplace_back(x, 1);
            }
            rows1.push_back(std::move(r));
        }
    long rank_d1 = modp::rank(n, p, rows1);

    return ncols - rank_d2 - rank_d1;
}

// A 2-chain over the pair basis.
struct Chain2 {
    long order = 0;
    std::vector<Int> coeffs;  // size order^2, lexicographic pair index

    bool is_zero() const {
        for (const Int& c : coeffs)
            if (c != 0) return false;
        return true;
    }
};

inline Chain2 chain2_add(const Chain2& a, const Chain2& b) {
    Chain2 r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

inline bool is_cycle(const FiniteQuandle& q, const Chain2& c) {
    const long n = q.order();
    std::vector<Int> img(n);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            const Int& v = c.coeffs[pair_index(n, x, y)];
            if (v == 0) continue;
            img[x] += v;
            img[q.op(x, y)] -= v;
        }
    for (const Int& v : img)
        if (v != 0) return false;
    return true;
}

// The letter-by-letter realization of a stabilizing word as a 2-cycle:
// e_{x_1}^{e_1} ... e_{x_k}^{e_k} fixing x0 maps to
// sum_j e_j * (prefix_j, x_j), where prefix_j is x0 pushed through the first
// j-1 letters (and through the j-th inverse letter when e_j = -1).
inline Chain2 word_to_cycle(const FiniteQuandle& q, long x0,
                            const std::vector<std::pair<long, int>>& word) {
    const long n = q.order();
    if (x0 < 0 || x0 >= n) throw input_error("word_to_cycle: base point out of range");
    Chain2 out;
    out.order = n;
    out.coeffs.assign(n * n, Int(0));
    long a = x0;
    for (const auto& [x, sign] : word) {
        if (x < 0 || x >= n) throw input_error("word_to_cycle: letter out of range");
        if (sign == 1) {
            out.coeffs[pair_index(n, a, x)] += 1;
            a = q.op(a, x);
        } else if (sign == -1) {
            a = q.op_inv(a, x);
            out.coeffs[pair_index(n, a, x)] -= 1;
        } else {
            throw input_error("word_to_cycle: signs must be +1 or -1");
        }
    }
    if (a != x0) {
        std::ostringstream os;
        os << "word_to_cycle: word moves the base point " << x0 << " to " << a;
        throw input_error(os.str());
    }
    return out;
}

// Quandle 2-cocycle candidate: a table X^2 -> target coordinates.
struct Cocycle2 {
    long order = 0;
    FinGenAb target;
    std::vector<std::vector<Int>> values;  // indexed by pair_index

    const std::vector<Int>& at(long n, long x, long y) const { return values[pair_index(n, x, y)]; }
};

struct CocycleCheck {
    bool ok = true;
    std::array<long, 3> witness{-1, -1, -1};
    std::string reason;
};

// phi(x,z) - phi(x*y,z) - phi(x,y) + phi(x*z,y*z) = 0 and phi(a,a) = 0.
inline CocycleCheck is_quandle_2cocycle(const FiniteQuandle& q, const Cocycle2& phi) {
    const long n = q.order();
    if (phi.order != n || static_cast<long>(phi.values.size()) != n * n)
        throw input_error("is_quandle_2cocycle: table size mismatch");
    for (long a = 0; a < n; ++a)
        if (!phi.target.is_zero(phi.target.normalize(phi.at(n, a, a))))
            return {false, {a, a, -1}, "phi(a,a) != 0"};
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z) {
                std::vector<Int> s = phi.target.sub(phi.at(n, x, z), phi.at(n, q.op(x, y), z));
                s = phi.target.sub(s, phi.at(n, x, y));
                s = phi.target.add(s, phi.at(n, q.op(x, z), q.op(y, z)));
                if (!phi.target.is_zero(s)) return {false, {x, y, z}, "cocycle identity fails"};
            }
    return {};
}

}  // namespace qhk
