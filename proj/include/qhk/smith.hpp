#pragma once

#include "qhk/integer.hpp"
#include "qhk/matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace qhk {

// U * A * V = D with U, V unimodular, D diagonal, non-negative, and each
// diagonal entry dividing the next.
struct SmithDecomposition {
    IntMatrix U, D, V;
};

// Same data plus the tracked inverses and the rank; the inverses let callers
// express vectors in a kernel basis without solving systems.
struct SmithSystem {
    IntMatrix U, D, V, Uinv, Vinv;
    long rank = 0;
};

namespace detail {

// One elimination round for pivot slot t of D, with optional transform
// tracking. Returns false when the remaining submatrix is zero.
template <bool Track>
bool smith_step(IntMatrix& D, long t, IntMatrix* U, IntMatrix* Uinv, IntMatrix* V, IntMatrix* Vinv) {
    const long m = D.rows(), n = D.cols();

    auto do_swap_rows = [&](long i, long j) {
        D.swap_rows(i, j);
        if constexpr (Track) {
            U->swap_rows(i, j);
            Uinv->swap_cols(i, j);
        }
    };
    auto do_swap_cols = [&](long i, long j) {
        D.swap_cols(i, j);
        if constexpr (Track) {
            V->swap_cols(i, j);
            Vinv->swap_rows(i, j);
        }
    };
    // row i += c * row j
    auto do_add_row = [&](long i, long j, const Int& c) {
        D.add_row(i, j, c);
        if constexpr (Track) {
            U->add_row(i, j, c);
            Uinv->add_col(j, i, -c);
        }
    };
    // col i += c * col j
    auto do_add_col = [&](long i, long j, const Int& c) {
        D.add_col(i, j, c);
        if constexpr (Track) {
            V->add_col(i, j, c);
            Vinv->add_row(j, i, -c);
        }
    };
    auto do_negate_row = [&](long i) {
        D.negate_row(i);
        if constexpr (Track) {
            U->negate_row(i);
            Uinv->negate_col(i);
        }
    };

    while (true) {
        // Least-absolute-value pivot, row-major scan: deterministic U, V and
        // tame coefficient growth.
        long pi = -1, pj = -1;
        Int best = 0;
        for (long i = t; i < m; ++i)
            for (long j = t; j < n; ++j) {
                const Int& v = D(i, j);
                if (v == 0) continue;
                Int a = abs(v);
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) return false;

        do_swap_rows(t, pi);
        do_swap_cols(t, pj);

        bool residue = false;
        for (long i = t + 1; i < m; ++i) {
            if (D(i, t) == 0) continue;
            Int q = D(i, t) / D(t, t);
            if (q != 0) do_add_row(i, t, -q);
            if (D(i, t) != 0) residue = true;
        }
        for (long j = t + 1; j < n; ++j) {
            if (D(t, j) == 0) continue;
            Int q = D(t, j) / D(t, t);
            if (q != 0) do_add_col(j, t, -q);
            if (D(t, j) != 0) residue = true;
        }
        if (residue) continue;  // strictly smaller entries appeared

        // Enforce the divisibility chain: fold in a non-divisible entry.
        long bi = -1;
        for (long i = t + 1; i < m && bi < 0; ++i)
            for (long j = t + 1; j < n; ++j)
                if (D(i, j) % D(t, t) != 0) {
                    bi = i;
                    break;
                }
        if (bi >= 0) {
            do_add_row(t, bi, 1);
            continue;
        }

        if (D(t, t) < 0) do_negate_row(t);
        return true;
    }
}

inline std::vector<Int> smith_diagonal(IntMatrix work) {
    std::vector<Int> diag;
    const long k = std::min(work.rows(), work.cols());
    for (long t = 0; t < k; ++t) {
        if (!smith_step<false>(work, t, nullptr, nullptr, nullptr, nullptr)) break;
        diag.push_back(work(t, t));
    }
    return diag;
}

}  // namespace detail

inline SmithSystem smith_system(const IntMatrix& A) {
    SmithSystem s;
    s.D = A;
    s.U = IntMatrix::identity(A.rows());
    s.Uinv = IntMatrix::identity(A.rows());
    s.V = IntMatrix::identity(A.cols());
    s.Vinv = IntMatrix::identity(A.cols());
    const long k = std::min(A.rows(), A.cols());
    for (long t = 0; t < k; ++t) {
        if (!detail::smith_step<true>(s.D, t, &s.U, &s.Uinv, &s.V, &s.Vinv)) break;
        ++s.rank;
    }
    return s;
}

inline SmithDecomposition smith_normal_form(const IntMatrix& A) {
    SmithSystem s = smith_system(A);
    return SmithDecomposition{std::move(s.U), std::move(s.D), std::move(s.V)};
}

// Rank plus the nonzero diagonal of the Smith form (invariant factors of the
// column span, 1s included), without transform tracking.
struct InvariantFactors {
    long rank = 0;
    std::vector<Int> factors;  // nonzero, ascending divisibility chain
};

namespace detail {

// Sparse elimination with +-1 pivots. Unimodular row/column operations only,
// so the invariant factors of what remains plus one 1 per pivot equal those
// of the input. Reduces boundary-matrix work from n^2 x n^3 dense to a small
// dense core.
class SparseElim {
public:
    SparseElim(long rows, long cols, const std::vector<std::vector<std::pair<long, Int>>>& columns)
        : rows_(rows), cols_(cols), row_(rows), col_rows_(cols) {
        for (long j = 0; j < cols; ++j)
            for (const auto& [i, v] : columns[j]) {
                row_[i][j] = v;
                col_rows_[j].insert(i);
            }
        row_active_.assign(rows, true);
        col_active_.assign(cols, true);
        for (long i = 0; i < rows; ++i) by_nnz_.insert({static_cast<long>(row_[i].size()), i});
    }

    long eliminate_units() {
        long count = 0;
        while (true) {
            auto pivot = pick_unit_pivot();
            if (!pivot) break;
            auto [p, c] = *pivot;
            const Int val = row_[p][c];  // +-1

            // Row operations clear column c; afterwards row p has the only
            // entry in c, so wiping row p costs nothing extra.
            std::vector<long> others(col_rows_[c].begin(), col_rows_[c].end());
            for (long r : others) {
                if (r == p) continue;
                Int coef = row_[r][c] * val;  // row_[r][c] / val since val = +-1
                add_row(r, p, -coef);
            }
            for (const auto& [k, v] : row_[p])
                if (k != c) col_rows_[k].erase(p);
            by_nnz_.erase({static_cast<long>(row_[p].size()), p});
            row_[p].clear();
            col_rows_[c].clear();
            row_active_[p] = false;
            col_active_[c] = false;
            ++count;
        }
        return count;
    }

    // Remaining active entries as a compact dense matrix.
    IntMatrix remainder() const {
        std::vector<long> rmap(rows_, -1), cmap(cols_, -1);
        long nr = 0, nc = 0;
        for (long i = 0; i < rows_; ++i)
            if (row_active_[i] && !row_[i].empty()) rmap[i] = nr++;
        for (long j = 0; j < cols_; ++j)
            if (col_active_[j] && !col_rows_[j].empty()) cmap[j] = nc++;
        IntMatrix m(nr, nc);
        for (long i = 0; i < rows_; ++i) {
            if (rmap[i] < 0) continue;
            for (const auto& [j, v] : row_[i]) m(rmap[i], cmap[j]) = v;
        }
        return m;
    }

private:
    std::optional<std::pair<long, long>> pick_unit_pivot() {
        // Cheapest row first, then the entry whose column is sparsest:
        // near-Markowitz without a full scan.
        for (const auto& [nnz, r] : by_nnz_) {
            if (nnz == 0) continue;
            long best_col = -1;
            size_t best_sz = 0;
            for (const auto& [c, v] : row_[r]) {
                if (v != 1 && v != -1) continue;
                size_t sz = col_rows_[c].size();
                if (best_col < 0 || sz < best_sz) {
                    best_col = c;
                    best_sz = sz;
                }
            }
            if (best_col >= 0) return std::make_pair(r, best_col);
        }
        return std::nullopt;
    }

    // row r += c * row p
    void add_row(long r, long p, const Int& c) {
        by_nnz_.erase({static_cast<long>(row_[r].size()), r});
        for (const auto& [k, v] : row_[p]) {
            auto it = row_[r].find(k);
            if (it == row_[r].end()) {
                row_[r][k] = c * v;
                col_rows_[k].insert(r);
            } else {
                it->second += c * v;
                if (it->second == 0) {
                    row_[r].erase(it);
                    col_rows_[k].erase(r);
                }
            }
        }
        by_nnz_.insert({static_cast<long>(row_[r].size()), r});
    }

    long rows_, cols_;
    std::vector<std::map<long, Int>> row_;
    std::vector<std::set<long>> col_rows_;
    std::vector<char> row_active_, col_active_;
    std::set<std::pair<long, long>> by_nnz_;
};

}  // namespace detail

inline InvariantFactors invariant_factors(const SparseMat& m) {
    // Duplicate and zero columns do not change the column span.
    std::set<std::vector<std::pair<long, Int>>> seen;
    std::vector<std::vector<std::pair<long, Int>>> cols;
    cols.reserve(m.columns.size());
    for (const auto& c : m.columns) {
        if (c.empty()) continue;
        if (seen.insert(c).second) cols.push_back(c);
    }

    detail::SparseElim elim(m.rows, static_cast<long>(cols.size()), cols);
    long units = elim.eliminate_units();

    std::vector<Int> diag = detail::smith_diagonal(elim.remainder());

    InvariantFactors out;
    out.rank = units + static_cast<long>(diag.size());
    out.factors.assign(static_cast<size_t>(units), Int(1));
    for (Int& d : diag) out.factors.push_back(std::move(d));
    return out;
}

inline InvariantFactors invariant_factors(const IntMatrix& m) {
    return invariant_factors(SparseMat::from_dense(m));
}

// Integer solution x of A x = b, if one exists.
inline std::optional<std::vector<Int>> solve(const SmithSystem& s, const std::vector<Int>& b) {
    std::vector<Int> ub = s.U.apply(b);
    std::vector<Int> y(s.V.rows());
    const long k = std::min(s.D.rows(), s.D.cols());
    for (long i = 0; i < s.D.rows(); ++i) {
        const Int d = i < k ? s.D(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            if (i < s.V.rows()) y[i] = ub[i] / d;
        }
    }
    return s.V.apply(y);
}

}  // namespace qhk
