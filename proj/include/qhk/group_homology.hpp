#pragma once

#include "qhk/abelian.hpp"
#include "qhk/matrix.hpp"
#include "qhk/modp.hpp"
#include "qhk/perm.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qhk {

constexpr long kDefaultIntegralGroupBound = 16;
constexpr long kDefaultModGroupBound = 30;

// Finite group as a multiplication table; associativity, identity and
// inverses are validated on construction.
class FiniteGroupTable {
public:
    explicit FiniteGroupTable(std::vector<std::vector<long>> mul) : mul_(std::move(mul)) {
        n_ = static_cast<long>(mul_.size());
        if (n_ == 0) throw input_error("FiniteGroupTable: empty table");
        for (const auto& row : mul_) {
            if (static_cast<long>(row.size()) != n_) throw input_error("FiniteGroupTable: not square");
            for (long v : row)
                if (v < 0 || v >= n_) throw input_error("FiniteGroupTable: entry out of range");
        }
        identity_ = -1;
        for (long e = 0; e < n_; ++e) {
            bool ok = true;
            for (long x = 0; x < n_ && ok; ++x) ok = (mul_[e][x] == x && mul_[x][e] == x);
            if (ok) {
                identity_ = e;
                break;
            }
        }
        if (identity_ < 0) throw input_error("FiniteGroupTable: no identity element");
        inv_.assign(n_, -1);
        for (long x = 0; x < n_; ++x)
            for (long y = 0; y < n_; ++y)
                if (mul_[x][y] == identity_) inv_[x] = y;
        for (long x = 0; x < n_; ++x)
            if (inv_[x] < 0 || mul_[inv_[x]][x] != identity_)
                throw input_error("FiniteGroupTable: missing inverse");
        for (long a = 0; a < n_; ++a)
            for (long b = 0; b < n_; ++b)
                for (long c = 0; c < n_; ++c)
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                        throw input_error("FiniteGroupTable: not associative");
    }

    static FiniteGroupTable from_perm_group(const PermGroup& g) {
        const long n = g.order();
        std::vector<std::vector<long>> mul(n, std::vector<long>(n));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                long k = g.index_of(perm_compose(g.elements[i], g.elements[j]));
                if (k < 0) throw input_error("from_perm_group: element set not closed");
                mul[i][j] = k;
            }
        return FiniteGroupTable(std::move(mul));
    }

    static FiniteGroupTable cyclic(long n) {
        std::vector<std::vector<long>> mul(n, std::vector<long>(n));
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
        return FiniteGroupTable(std::move(mul));
    }

    static FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
        const long n = a.order() * b.order();
        std::vector<std::vector<long>> mul(n, std::vector<long>(n));
        auto idx = [&](long x, long y) { return x * b.order() + y; };
        for (long x1 = 0; x1 < a.order(); ++x1)
            for (long y1 = 0; y1 < b.order(); ++y1)
                for (long x2 = 0; x2 < a.order(); ++x2)
                    for (long y2 = 0; y2 < b.order(); ++y2)
                        mul[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
        return FiniteGroupTable(std::move(mul));
    }

    long order() const { return n_; }
    long identity() const { return identity_; }
    long mul(long a, long b) const { return mul_[a][b]; }
    long inv(long a) const { return inv_[a]; }

private:
    std::vector<std::vector<long>> mul_;
    std::vector<long> inv_;
    long n_ = 0;
    long identity_ = -1;
};

// Subgroup given by ambient indices, re-tabled; throws when not closed.
struct Subgroup {
    FiniteGroupTable table;
    std::vector<long> ambient;  // ambient[i] = index in the big group
};

inline Subgroup subgroup_table(const FiniteGroupTable& g, std::vector<long> members) {
    std::map<long, long> pos;
    for (size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<long>(i);
    const long k = static_cast<long>(members.size());
    std::vector<std::vector<long>> mul(k, std::vector<long>(k));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) {
            auto it = pos.find(g.mul(members[i], members[j]));
            if (it == pos.end()) throw input_error("subgroup_table: subset is not closed");
            mul[i][j] = it->second;
        }
    return Subgroup{FiniteGroupTable(std::move(mul)), std::move(members)};
}

namespace detail {

inline void check_group_bound(long n, long bound, const char* who) {
    if (n > bound) {
        std::ostringstream os;
        os << who << ": group order " << n << " exceeds the bound " << bound;
        throw bound_error(os.str());
    }
}

}  // namespace detail

// Unnormalized bar complex with trivial coefficients.
// d2(g,h) = (h) - (gh) + (g)
inline SparseMat bar_d2(const FiniteGroupTable& g) {
    const long n = g.order();
    SparseMat m;
    m.rows = n;
    m.cols = n * n;
    m.columns.resize(m.cols);
    std::map<long, Int> acc;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            acc.clear();
            acc[b] += 1;
            acc[g.mul(a, b)] -= 1;
            acc[a] += 1;
            auto& col = m.columns[a * n + b];
            for (auto& [i, v] : acc)
                if (v != 0) col.emplace_back(i, v);
        }
    return m;
}

// d3(g,h,k) = (h,k) - (gh,k) + (g,hk) - (g,h)
inline SparseMat bar_d3(const FiniteGroupTable& g) {
    const long n = g.order();
    SparseMat m;
    m.rows = n * n;
    m.cols = n * n * n;
    m.columns.resize(m.cols);
    std::map<long, Int> acc;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                acc.clear();
                acc[b * n + c] += 1;
                acc[g.mul(a, b) * n + c] -= 1;
                acc[a * n + g.mul(b, c)] += 1;
                acc[a * n + b] -= 1;
                auto& col = m.columns[(a * n + b) * n + c];
                for (auto& [i, v] : acc)
                    if (v != 0) col.emplace_back(i, v);
            }
    return m;
}

// H2(G; Z) (the Schur multiplier for the finite groups handled here).
inline FinGenAb bar_h2_integral(const FiniteGroupTable& g, long bound = kDefaultIntegralGroupBound) {
    detail::check_group_bound(g.order(), bound, "bar_h2_integral");
    return homology_of_pair(bar_d2(g), bar_d3(g));
}

// H1(G; Z) = abelianization.
inline FinGenAb h1_integral(const FiniteGroupTable& g) {
    InvariantFactors inv = invariant_factors(bar_d2(g));
    return group_from_factors(g.order() - inv.rank, std::move(inv.factors));
}

// dim over F_ell of H^degree(G; F_ell), degree 1 or 2, from the transposed
// bar differentials.
inline long group_cohomology_dim(const FiniteGroupTable& g, int degree, long ell,
                                 long bound = kDefaultModGroupBound) {
    if (!is_prime(ell)) throw input_error("group_cohomology_dim: modulus must be prime");
    if (degree != 1 && degree != 2) throw input_error("group_cohomology_dim: degree must be 1 or 2");
    detail::check_group_bound(g.order(), bound, "group_cohomology_dim");
    const long n = g.order();
    const unsigned p = static_cast<unsigned>(ell);

    auto rows_of_transpose = [p](const SparseMat& d) {
        std::vector<modp::SparseRow> rows(d.cols);
        for (long j = 0; j < d.cols; ++j) {
            modp::SparseRow r;
            for (const auto& [i, v] : d.columns[j]) {
                unsigned u = modp::reduce_int(v, p);
                if (u) r.emplace_back(i, u);
            }
            rows[j] = std::move(r);
        }
        return rows;
    };

    long rank_d1 = modp::rank(n, p, rows_of_transpose(bar_d2(g)));
    if (degree == 1) return n - rank_d1;  // delta^0 = 0 for trivial coefficients
    long rank_d2 = modp::rank(n * n, p, rows_of_transpose(bar_d3(g)));
    return n * n - rank_d2 - rank_d1;
}

namespace detail {

// rank over F_ell of the degree-1 relative differential (G + 1) -> (G^2 + K).
inline long relative_rank1(const FiniteGroupTable& g, const Subgroup& k, unsigned p) {
    const long n = g.order();
    std::vector<modp::SparseRow> rows1;
    std::map<long, long> acc;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            acc.clear();
            acc[b] += 1;
            acc[g.mul(a, b)] -= 1;
            acc[a] += 1;
            modp::SparseRow r;
            for (auto& [c, s] : acc) {
                unsigned v = static_cast<unsigned>(((s % p) + p) % p);
                if (v) r.emplace_back(c, v);
            }
            if (!r.empty()) rows1.push_back(std::move(r));
        }
    for (long i = 0; i < k.table.order(); ++i) rows1.push_back({{k.ambient[i], 1u}});
    return modp::rank(n + 1, p, rows1);
}

}  // namespace detail

// dim H^1(G,K; F_ell) of the mapping cone; the degree-0 differential
// c -> (0, c) has rank 1.
inline long relative_h1_dim(const FiniteGroupTable& g, const Subgroup& k, long ell,
                            long bound = kDefaultModGroupBound) {
    if (!is_prime(ell)) throw input_error("relative_h1_dim: modulus must be prime");
    detail::check_group_bound(g.order(), bound, "relative_h1_dim");
    return g.order() + 1 - detail::relative_rank1(g, k, static_cast<unsigned>(ell)) - 1;
}

// Relative cochains C^n(G,K;A) = Map(G^n,A) + Map(K^{n-1},A) with the
// mapping-cone differential d(h,k) = (h d_{n+1}, h|_K - k d_n); returns
// dim H^2 over F_ell.
inline long relative_h2_dim(const FiniteGroupTable& g, const Subgroup& k, long ell,
                            long bound = kDefaultModGroupBound) {
    if (!is_prime(ell)) throw input_error("relative_h2_dim: modulus must be prime");
    detail::check_group_bound(g.order(), bound, "relative_h2_dim");
    const long n = g.order();
    const long kn = k.table.order();
    const unsigned p = static_cast<unsigned>(ell);

    // delta^1_rel: (G + 1) -> (G^2 + K); columns: Map(G) then Map(K^0) = A.
    long rank1 = detail::relative_rank1(g, k, p);

    // delta^2_rel: (G^2 + K) -> (G^3 + K^2).
    std::vector<modp::SparseRow> rows2;
    {
        std::map<long, long> acc;
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b)
                for (long c = 0; c < n; ++c) {
                    acc.clear();
                    acc[b * n + c] += 1;
                    acc[g.mul(a, b) * n + c] -= 1;
                    acc[a * n + g.mul(b, c)] += 1;
                    acc[a * n + b] -= 1;
                    modp::SparseRow r;
                    for (auto& [col, s] : acc) {
                        unsigned v = static_cast<unsigned>(((s % p) + p) % p);
                        if (v) r.emplace_back(col, v);
                    }
                    if (!r.empty()) rows2.push_back(std::move(r));
                }
        // rows for (b1,b2) in K^2: h(b1,b2) - k(d2(b1,b2))
        //   = h(b1,b2) - k(b2) + k(b1 b2) - k(b1), with k-columns offset n^2.
        std::map<long, long> acc2;
        for (long i = 0; i < kn; ++i)
            for (long j = 0; j < kn; ++j) {
                acc2.clear();
                acc2[k.ambient[i] * n + k.ambient[j]] += 1;
                acc2[n * n + j] -= 1;
                acc2[n * n + k.table.mul(i, j)] += 1;
                acc2[n * n + i] -= 1;
                modp::SparseRow r;
                for (auto& [col, s] : acc2) {
                    unsigned v = static_cast<unsigned>(((s % p) + p) % p);
                    if (v) r.emplace_back(col, v);
                }
                if (!r.empty()) rows2.push_back(std::move(r));
            }
    }
    long rank2 = modp::rank(n * n + kn, p, rows2);

    return (n * n + kn) - rank2 - rank1;
}

// Group 2-cochain table on a finite group, valued in a finitely generated
// abelian group.
struct GroupCocycle2 {
    long order = 0;
    FinGenAb target;
    std::vector<std::vector<Int>> values;  // indexed by g * order + h

    const std::vector<Int>& at(long g, long h) const { return values[g * order + h]; }
};

struct GroupCocycleCheck {
    bool ok = true;
    std::array<long, 3> witness{-1, -1, -1};
};

// F(g,h) + F(gh,k) = F(h,k) + F(g,hk), trivial coefficients.
inline GroupCocycleCheck is_group_2cocycle(const FiniteGroupTable& g, const GroupCocycle2& f) {
    if (f.order != g.order()) throw input_error("is_group_2cocycle: size mismatch");
    for (long a = 0; a < g.order(); ++a)
        for (long b = 0; b < g.order(); ++b)
            for (long c = 0; c < g.order(); ++c) {
                std::vector<Int> lhs = f.target.add(f.at(a, b), f.at(g.mul(a, b), c));
                std::vector<Int> rhs = f.target.add(f.at(b, c), f.at(a, g.mul(b, c)));
                if (!f.target.is_zero(f.target.sub(lhs, rhs))) return {false, {a, b, c}};
            }
    return {};
}

// delta(F)(g,h) = F(s(g) s(h) s(gh)^-1) for a set section s of a central
// extension and a homomorphism F on the kernel. The ambient group is opaque:
// any type with multiplication, inverse and equality works (so the integers
// and the finite model groups both fit). kernel_coords returns the
// coefficient coordinates of a kernel element, or nullopt for elements
// outside the kernel.
template <class Elem, class MulFn, class InvFn, class KerFn>
GroupCocycle2 delta_section(const FiniteGroupTable& quotient, const std::vector<Elem>& section,
                            MulFn mul, InvFn inv, KerFn kernel_coords, FinGenAb target) {
    const long n = quotient.order();
    if (static_cast<long>(section.size()) != n)
        throw input_error("delta_section: section must list one ambient element per quotient element");
    const Elem& s1 = section[quotient.identity()];
    if (!(mul(s1, s1) == s1)) throw input_error("delta_section: section must send 1 to 1");

    GroupCocycle2 out;
    out.order = n;
    out.target = std::move(target);
    out.values.assign(static_cast<size_t>(n) * n, {});
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            Elem w = mul(mul(section[a], section[b]), inv(section[quotient.mul(a, b)]));
            std::optional<std::vector<Int>> coords = kernel_coords(w);
            if (!coords) {
                std::ostringstream os;
                os << "delta_section: s(g)s(h)s(gh)^-1 lies outside the kernel at (" << a << "," << b << ")";
                throw input_error(os.str());
            }
            out.values[a * n + b] = out.target.normalize(std::move(*coords));
        }
    return out;
}

// Is d(g,h) = xi(h) - xi(gh) + xi(g) solvable for xi : G -> target, where the
// target is an F_ell vector space (all invariant factors equal to a prime)?
// Coboundary test used when comparing two sections.
inline bool is_coboundary(const FiniteGroupTable& g, const GroupCocycle2& d) {
    const FinGenAb& t = d.target;
    if (t.free_rank != 0) throw input_error("is_coboundary: target must be finite");
    if (t.invariant_factors.empty()) return true;
    for (const Int& f : t.invariant_factors)
        if (f != t.invariant_factors.front()) throw input_error("is_coboundary: target must be elementary abelian");
    long ellL = static_cast<long>(t.invariant_factors.front());
    if (!is_prime(ellL)) throw input_error("is_coboundary: target must be an F_ell vector space");
    unsigned p = static_cast<unsigned>(ellL);

    const long n = g.order();
    const long comps = t.coord_count();
    // One linear system per coordinate: n^2 equations, n unknowns.
    std::vector<unsigned> a(static_cast<size_t>(n) * n * n, 0);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            size_t row = static_cast<size_t>(x) * n + y;
            auto add = [&](long col, long s) {
                unsigned& cell = a[row * n + col];
                cell = static_cast<unsigned>(((cell + s) % p + p) % p);
            };
            add(y, 1);
            add(g.mul(x, y), -1);
            add(x, 1);
        }
    for (long comp = 0; comp < comps; ++comp) {
        std::vector<unsigned> b(static_cast<size_t>(n) * n);
        for (long x = 0; x < n; ++x)
            for (long y = 0; y < n; ++y) b[x * n + y] = modp::reduce_int(d.at(x, y)[comp], p);
        if (!modp::solve(n * n, n, p, a, std::move(b))) return false;
    }
    return true;
}

}  // namespace qhk
