#pragma once

#include "qhk/integer.hpp"

#include <optional>
#include <set>
#include <vector>

namespace qhk {

// Row-sparse rank and small dense solves over the field with ell elements.

namespace modp {

inline unsigned inv_mod(unsigned a, unsigned ell) {
    // Fermat; ell is a small prime.
    unsigned r = 1, b = a % ell, e = ell - 2;
    while (e) {
        if (e & 1) r = static_cast<unsigned>((static_cast<unsigned long long>(r) * b) % ell);
        b = static_cast<unsigned>((static_cast<unsigned long long>(b) * b) % ell);
        e >>= 1;
    }
    return r;
}

using SparseRow = std::vector<std::pair<long, unsigned>>;  // sorted by column, values in [1, ell)

// Rank of a matrix given as sparse rows. Rows are deduplicated after
// normalizing the leading coefficient; boundary-operator rows repeat heavily.
inline long rank(long cols, unsigned ell, const std::vector<SparseRow>& rows) {
    std::set<SparseRow> unique_rows;
    for (const SparseRow& r : rows) {
        if (r.empty()) continue;
        SparseRow n = r;
        unsigned lead_inv = inv_mod(n.front().second, ell);
        for (auto& [c, v] : n) v = static_cast<unsigned>((static_cast<unsigned long long>(v) * lead_inv) % ell);
        unique_rows.insert(std::move(n));
    }

    // basis[c] = reduced row with pivot (leading 1) at column c, dense.
    std::vector<std::vector<unsigned>> basis(cols);
    std::vector<unsigned> buf;
    long rank = 0;
    for (const SparseRow& r : unique_rows) {
        buf.assign(cols, 0);
        for (const auto& [c, v] : r) buf[c] = v;
        long lead = r.front().first;
        while (lead < cols) {
            if (buf[lead] == 0) {
                ++lead;
                continue;
            }
            if (basis[lead].empty()) break;
            unsigned f = buf[lead];
            const std::vector<unsigned>& b = basis[lead];
            for (long c = lead; c < cols; ++c)
                if (b[c]) buf[c] = static_cast<unsigned>((buf[c] + static_cast<unsigned long long>(ell - f) * b[c]) % ell);
        }
        if (lead >= cols) continue;
        unsigned piv_inv = inv_mod(buf[lead], ell);
        for (long c = lead; c < cols; ++c)
            if (buf[c]) buf[c] = static_cast<unsigned>((static_cast<unsigned long long>(buf[c]) * piv_inv) % ell);
        basis[lead] = buf;
        ++rank;
    }
    return rank;
}

// Dense solve A x = b over F_ell; returns a solution if consistent.
inline std::optional<std::vector<unsigned>> solve(long rows, long cols, unsigned ell,
                                                  std::vector<unsigned> a, std::vector<unsigned> b) {
    auto at = [&](long i, long j) -> unsigned& { return a[static_cast<size_t>(i) * cols + j]; };
    std::vector<long> pivot_col_of_row;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long p = -1;
        for (long i = r; i < rows; ++i)
            if (at(i, c)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (long j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
        std::swap(b[p], b[r]);
        unsigned inv = inv_mod(at(r, c), ell);
        for (long j = 0; j < cols; ++j)
            at(r, j) = static_cast<unsigned>((static_cast<unsigned long long>(at(r, j)) * inv) % ell);
        b[r] = static_cast<unsigned>((static_cast<unsigned long long>(b[r]) * inv) % ell);
        for (long i = 0; i < rows; ++i) {
            if (i == r || at(i, c) == 0) continue;
            unsigned f = at(i, c);
            for (long j = 0; j < cols; ++j)
                at(i, j) = static_cast<unsigned>((at(i, j) + static_cast<unsigned long long>(ell - f) * at(r, j)) % ell);
            b[i] = static_cast<unsigned>((b[i] + static_cast<unsigned long long>(ell - f) * b[r]) % ell);
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    for (long i = r; i < rows; ++i)
        if (b[i]) return std::nullopt;
    std::vector<unsigned> x(cols, 0);
    for (long i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

inline unsigned reduce_int(const Int& v, unsigned ell) {
    Int r = v % ell;
    if (r < 0) r += ell;
    return static_cast<unsigned>(r);
}

}  // namespace modp

}  // namespace qhk
