#pragma once

#include "qhk/integer.hpp"
#include "qhk/matrix.hpp"
#include "qhk/smith.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace qhk {

// Finitely generated abelian group in canonical form: free rank plus the
// invariant-factor chain (no factor 1, each dividing the next). Two values
// are isomorphic iff they compare equal.
struct FinGenAb {
    long free_rank = 0;
    std::vector<Int> invariant_factors;

    bool operator==(const FinGenAb&) const = default;

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }

    Int torsion_order() const {
        Int n = 1;
        for (const Int& d : invariant_factors) n *= d;
        return n;
    }

    // Element coordinates: torsion coordinates first (one per invariant
    // factor, reduced into [0, d)), then free coordinates.
    long coord_count() const { return static_cast<long>(invariant_factors.size()) + free_rank; }

    std::vector<Int> zero() const { return std::vector<Int>(coord_count()); }

    std::vector<Int> normalize(std::vector<Int> v) const {
        for (size_t i = 0; i < invariant_factors.size(); ++i) v[i] = pos_mod(v[i], invariant_factors[i]);
        return v;
    }

    std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const {
        std::vector<Int> r(coord_count());
        for (long i = 0; i < coord_count(); ++i) r[i] = a[i] + b[i];
        return normalize(std::move(r));
    }

    std::vector<Int> sub(const std::vector<Int>& a, const std::vector<Int>& b) const {
        std::vector<Int> r(coord_count());
        for (long i = 0; i < coord_count(); ++i) r[i] = a[i] - b[i];
        return normalize(std::move(r));
    }

    std::vector<Int> neg(const std::vector<Int>& a) const {
        std::vector<Int> r(coord_count());
        for (long i = 0; i < coord_count(); ++i) r[i] = -a[i];
        return normalize(std::move(r));
    }

    bool is_zero(const std::vector<Int>& a) const {
        for (const Int& v : a)
            if (v != 0) return false;
        return true;
    }

    // "0", "Z^1", "Z/2 + Z/4", "Z^1 + Z/2", ... factors in divisibility order.
    std::string to_string() const {
        if (is_trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        if (free_rank > 0) {
            os << "Z^" << free_rank;
            first = false;
        }
        for (const Int& d : invariant_factors) {
            if (!first) os << " + ";
            os << "Z/" << d;
            first = false;
        }
        return os.str();
    }
};

// Presentation Z^generators / column-span(relations).
struct AbPresentation {
    long generators = 0;
    IntMatrix relations;  // generators x r, one relation per column
};

inline FinGenAb group_from_factors(long free_rank, std::vector<Int> diag) {
    FinGenAb g;
    g.free_rank = free_rank;
    for (Int& d : diag) {
        Int a = abs(d);
        if (a >= 2) g.invariant_factors.push_back(std::move(a));
    }
    return g;
}

inline FinGenAb cokernel(const AbPresentation& p) {
    if (p.relations.rows() != p.generators)
        throw input_error("cokernel: relations must have one row per generator");
    InvariantFactors inv = invariant_factors(p.relations);
    return group_from_factors(p.generators - inv.rank, std::move(inv.factors));
}

// A presentation with the Smith change of basis retained, so arbitrary
// generator-coordinate vectors reduce deterministically to canonical
// coordinates of the quotient.
class PresentedGroup {
public:
    PresentedGroup(long generators, const IntMatrix& relations) : gens_(generators) {
        if (relations.rows() != generators)
            throw input_error("PresentedGroup: relations must have one row per generator");
        SmithSystem s = smith_system(relations);
        U_ = std::move(s.U);
        Uinv_ = std::move(s.Uinv);
        const long k = std::min(relations.rows(), relations.cols());
        moduli_.assign(generators, Int(0));
        for (long i = 0; i < k; ++i) moduli_[i] = s.D(i, i);
        for (long i = 0; i < generators; ++i) {
            if (moduli_[i] >= 2) torsion_idx_.push_back(i);
            else if (moduli_[i] == 0) free_idx_.push_back(i);
        }
        group_.free_rank = static_cast<long>(free_idx_.size());
        for (long i : torsion_idx_) group_.invariant_factors.push_back(moduli_[i]);
    }

    const FinGenAb& group() const { return group_; }
    long generators() const { return gens_; }

    std::vector<Int> reduce(const std::vector<Int>& gen_coords) const {
        if (static_cast<long>(gen_coords.size()) != gens_)
            throw input_error("PresentedGroup::reduce: wrong coordinate count");
        std::vector<Int> y = U_.apply(gen_coords);
        std::vector<Int> out;
        out.reserve(group_.coord_count());
        for (long i : torsion_idx_) out.push_back(pos_mod(y[i], moduli_[i]));
        for (long i : free_idx_) out.push_back(y[i]);
        return out;
    }

    // A section of reduce: generator coordinates representing the given
    // canonical coordinates (reduce(lift(v)) == normalize(v)).
    std::vector<Int> lift(const std::vector<Int>& coords) const {
        if (static_cast<long>(coords.size()) != group_.coord_count())
            throw input_error("PresentedGroup::lift: wrong coordinate count");
        std::vector<Int> y(gens_);
        size_t pos = 0;
        for (long i : torsion_idx_) y[i] = coords[pos++];
        for (long i : free_idx_) y[i] = coords[pos++];
        return Uinv_.apply(y);
    }

private:
    long gens_;
    IntMatrix U_, Uinv_;
    std::vector<Int> moduli_;
    std::vector<long> torsion_idx_, free_idx_;
    FinGenAb group_;
};

// Ker(d_out) / Im(d_in), computed by expressing Im(d_in) in a basis of
// Ker(d_out) and taking the Smith form of the coordinate matrix.
inline FinGenAb homology_of_pair(const SparseMat& d_out, const SparseMat& d_in) {
    if (d_out.cols != d_in.rows)
        throw input_error("homology_of_pair: middle dimensions disagree");

    // d_out * d_in must vanish; anything else is a malformed complex.
    for (long j = 0; j < d_in.cols; ++j) {
        std::vector<Int> acc(d_out.rows);
        for (const auto& [k, v] : d_in.columns[j])
            for (const auto& [i, w] : d_out.columns[k]) acc[i] += v * w;
        for (const Int& x : acc)
            if (x != 0) throw input_error("homology_of_pair: d_out * d_in != 0");
    }

    SmithSystem s = smith_system(d_out.to_dense());
    const long c = d_out.cols;
    const long kernel_rank = c - s.rank;

    // Kernel basis = columns s.rank..c-1 of V; coordinates of a kernel vector
    // are the corresponding rows of Vinv applied to it.
    SparseMat coords;
    coords.rows = kernel_rank;
    coords.cols = d_in.cols;
    coords.columns.resize(d_in.cols);
    for (long j = 0; j < d_in.cols; ++j) {
        if (d_in.columns[j].empty()) continue;
        std::vector<Int> y(c);
        for (const auto& [k, v] : d_in.columns[j])
            for (long i = 0; i < c; ++i)
                if (s.Vinv(i, k) != 0) y[i] += v * s.Vinv(i, k);
        for (long i = 0; i < s.rank; ++i)
            if (y[i] != 0) throw input_error("homology_of_pair: image escapes the kernel");
        for (long i = s.rank; i < c; ++i)
            if (y[i] != 0) coords.columns[j].emplace_back(i - s.rank, y[i]);
    }

    InvariantFactors inv = invariant_factors(coords);
    return group_from_factors(kernel_rank - inv.rank, std::move(inv.factors));
}

inline FinGenAb homology_of_pair(const IntMatrix& d_out, const IntMatrix& d_in) {
    return homology_of_pair(SparseMat::from_dense(d_out), SparseMat::from_dense(d_in));
}

namespace detail {

inline void require_finite(const FinGenAb& a, const char* op) {
    if (a.free_rank != 0) throw input_error(std::string(op) + ": group must be finite");
}

}  // namespace detail

// A (x) A for finite A: generators e_i (x) e_j, each of order
// gcd(d_i, d_j), canonicalized through a presentation.
inline FinGenAb tensor_square(const FinGenAb& a) {
    detail::require_finite(a, "tensor_square");
    const long k = static_cast<long>(a.invariant_factors.size());
    IntMatrix rel(k * k, k * k);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j)
            rel(i * k + j, i * k + j) = gcd(a.invariant_factors[i], a.invariant_factors[j]);
    return cokernel(AbPresentation{k * k, rel});
}

// A /\ A for finite A: generators e_i /\ e_j (i < j) of order gcd(d_i, d_j).
inline FinGenAb exterior_square(const FinGenAb& a) {
    detail::require_finite(a, "exterior_square");
    const long k = static_cast<long>(a.invariant_factors.size());
    const long g = k * (k - 1) / 2;
    IntMatrix rel(g, g);
    long idx = 0;
    for (long i = 0; i < k; ++i)
        for (long j = i + 1; j < k; ++j, ++idx)
            rel(idx, idx) = gcd(a.invariant_factors[i], a.invariant_factors[j]);
    return cokernel(AbPresentation{g, rel});
}

// l-power part of each invariant factor; free rank carries through.
inline FinGenAb primary_part(const FinGenAb& a, long ell) {
    if (!is_prime(ell)) throw input_error("primary_part: modulus must be prime");
    FinGenAb out;
    out.free_rank = a.free_rank;
    for (const Int& d : a.invariant_factors) {
        Int part = 1, rest = d;
        while (rest % ell == 0) {
            part *= ell;
            rest /= ell;
        }
        if (part >= 2) out.invariant_factors.push_back(part);
    }
    return out;
}

}  // namespace qhk
