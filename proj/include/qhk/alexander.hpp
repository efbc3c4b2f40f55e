#pragma once

#include "qhk/abelian.hpp"
#include "qhk/chain.hpp"
#include "qhk/group_homology.hpp"
#include "qhk/matrix.hpp"
#include "qhk/quandle.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qhk {

// Alexander quandle data: a finite abelian group X = (+) Z/d_i together with
// an automorphism t given as an integer matrix on the standard generators.
// The quandle operation is x*y = t x + (1-t) y.
struct AlexanderSpec {
    std::vector<Int> factors;
    IntMatrix t;
};

constexpr long kDefaultTypeBound = 1000;
constexpr long kDefaultAlexanderOrderBound = 1 << 20;

namespace detail {

// Entries of row i live in Z/d_i: reduce a matrix acting on the presentation.
inline IntMatrix reduce_rows(IntMatrix m, const std::vector<Int>& factors) {
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) m(i, j) = pos_mod(m(i, j), factors[i]);
    return m;
}

inline bool acts_as_identity(const IntMatrix& m, const std::vector<Int>& factors) {
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            if (pos_mod(m(i, j) - (i == j ? 1 : 0), factors[i]) != 0) return false;
    return true;
}

// S with M S = identity modulo the presentation, solving column by column on
// the relation-augmented system; nullopt when M is not an automorphism.
inline std::optional<IntMatrix> inverse_mod_presentation(const IntMatrix& m,
                                                         const std::vector<Int>& factors) {
    const long g = static_cast<long>(factors.size());
    IntMatrix aug(g, 2 * g);
    for (long i = 0; i < g; ++i) {
        for (long j = 0; j < g; ++j) aug(i, j) = m(i, j);
        aug(i, g + i) = factors[i];
    }
    SmithSystem sys = smith_system(aug);
    IntMatrix s(g, g);
    for (long j = 0; j < g; ++j) {
        std::vector<Int> e(g);
        e[j] = 1;
        auto z = solve(sys, e);
        if (!z) return std::nullopt;
        for (long i = 0; i < g; ++i) s(i, j) = pos_mod((*z)[i], factors[i]);
    }
    return s;
}

}  // namespace detail

// A validated AlexanderSpec plus everything derived from it that the rest of
// the toolkit keeps asking for.
class CheckedAlexander {
public:
    static CheckedAlexander validate(AlexanderSpec spec, long type_bound = kDefaultTypeBound,
                                     long order_bound = kDefaultAlexanderOrderBound) {
        CheckedAlexander c;
        const long g = static_cast<long>(spec.factors.size());
        if (spec.t.rows() != g || spec.t.cols() != g)
            throw input_error("AlexanderSpec: t must be square of size = number of factors");
        for (const Int& d : spec.factors)
            if (d < 1) throw input_error("AlexanderSpec: factors must be >= 1 (finite group)");

        // t must respect the presentation: d_j * t(i,j) = 0 mod d_i.
        for (long i = 0; i < g; ++i)
            for (long j = 0; j < g; ++j)
                if (pos_mod(spec.t(i, j) * spec.factors[j], spec.factors[i]) != 0) {
                    std::ostringstream os;
                    os << "AlexanderSpec: t(" << i << "," << j << ") does not respect the factor "
                       << spec.factors[i];
                    throw input_error(os.str());
                }

        auto tinv = detail::inverse_mod_presentation(spec.t, spec.factors);
        if (!tinv) throw input_error("AlexanderSpec: t is not an automorphism");

        Int ord = 1;
        for (const Int& d : spec.factors) {
            ord *= d;
            if (ord > order_bound) {
                std::ostringstream os;
                os << "AlexanderSpec: group order exceeds the bound " << order_bound;
                throw bound_error(os.str());
            }
        }

        c.spec_ = std::move(spec);
        c.t_inv_ = std::move(*tinv);
        c.order_ = static_cast<long>(ord);
        const auto& f = c.spec_.factors;

        IntMatrix one_minus_t(g, g);
        for (long i = 0; i < g; ++i)
            for (long j = 0; j < g; ++j) one_minus_t(i, j) = (i == j ? 1 : 0) - c.spec_.t(i, j);
        auto sinv = detail::inverse_mod_presentation(one_minus_t, f);
        c.unit_one_minus_t_ = sinv.has_value();
        if (sinv) c.one_minus_t_inv_ = std::move(*sinv);
        c.one_minus_t_ = std::move(one_minus_t);

        // Type(X) = multiplicative order of t.
        IntMatrix id = IntMatrix::identity(g);
        IntMatrix power = detail::reduce_rows(c.spec_.t, f);
        c.t_powers_.push_back(detail::reduce_rows(id, f));
        long type = 1;
        while (!detail::acts_as_identity(power, f)) {
            c.t_powers_.push_back(power);
            power = detail::reduce_rows(power * c.spec_.t, f);
            if (++type > type_bound) {
                std::ostringstream os;
                os << "AlexanderSpec: Type exceeds the bound " << type_bound;
                throw bound_error(os.str());
            }
        }
        c.type_ = type;

        IntMatrix diag(g, g);
        for (long i = 0; i < g; ++i) diag(i, i) = f[i];
        c.group_ = cokernel(AbPresentation{g, diag});

        c.strides_.assign(g, 1);
        for (long i = g - 2; i >= 0; --i)
            c.strides_[i] = c.strides_[i + 1] * static_cast<long>(f[i + 1]);
        return c;
    }

    const AlexanderSpec& spec() const { return spec_; }
    long rank() const { return static_cast<long>(spec_.factors.size()); }
    long order() const { return order_; }
    long type() const { return type_; }
    bool unit_one_minus_t() const { return unit_one_minus_t_; }
    bool connected() const { return unit_one_minus_t_; }
    const FinGenAb& group() const { return group_; }
    const IntMatrix& one_minus_t() const { return one_minus_t_; }

    const IntMatrix& one_minus_t_inverse() const {
        if (!unit_one_minus_t_) throw input_error("AlexanderSpec: (1-t) is not invertible");
        return one_minus_t_inv_;
    }

    // t^k for any integer k (k taken mod Type).
    const IntMatrix& t_power(long k) const {
        long m = ((k % type_) + type_) % type_;
        return t_powers_[m];
    }

    std::vector<Int> tuple_of(long index) const {
        std::vector<Int> t(rank());
        for (long i = 0; i < rank(); ++i) {
            t[i] = index / strides_[i];
            index %= strides_[i];
        }
        return t;
    }

    long index_of(const std::vector<Int>& tuple) const {
        long idx = 0;
        for (long i = 0; i < rank(); ++i)
            idx += static_cast<long>(pos_mod(tuple[i], spec_.factors[i])) * strides_[i];
        return idx;
    }

    std::vector<Int> reduce_tuple(std::vector<Int> v) const {
        for (long i = 0; i < rank(); ++i) v[i] = pos_mod(v[i], spec_.factors[i]);
        return v;
    }

    std::vector<Int> apply(const IntMatrix& m, const std::vector<Int>& v) const {
        return reduce_tuple(m.apply(v));
    }

    std::vector<Int> add_tuples(const std::vector<Int>& a, const std::vector<Int>& b) const {
        std::vector<Int> r(rank());
        for (long i = 0; i < rank(); ++i) r[i] = a[i] + b[i];
        return reduce_tuple(std::move(r));
    }

    std::vector<Int> sub_tuples(const std::vector<Int>& a, const std::vector<Int>& b) const {
        std::vector<Int> r(rank());
        for (long i = 0; i < rank(); ++i) r[i] = a[i] - b[i];
        return reduce_tuple(std::move(r));
    }

private:
    AlexanderSpec spec_;
    IntMatrix t_inv_, one_minus_t_, one_minus_t_inv_;
    std::vector<IntMatrix> t_powers_;
    std::vector<long> strides_;
    FinGenAb group_;
    long order_ = 1;
    long type_ = 1;
    bool unit_one_minus_t_ = false;
};

// The quandle table x*y = t x + (1-t) y = t(x-y) + y over the enumerated
// elements; always passes the axiom check.
inline FiniteQuandle alexander_quandle(const CheckedAlexander& c) {
    const long n = c.order();
    std::vector<std::vector<long>> table(n, std::vector<long>(n));
    std::vector<std::vector<Int>> tuples(n);
    for (long i = 0; i < n; ++i) tuples[i] = c.tuple_of(i);
    const IntMatrix& t = c.t_power(1);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            std::vector<Int> diff = c.sub_tuples(tuples[x], tuples[y]);
            table[x][y] = c.index_of(c.add_tuples(c.apply(t, diff), tuples[y]));
        }
    std::vector<std::string> labels(n);
    for (long i = 0; i < n; ++i) {
        std::ostringstream os;
        os << '(';
        for (long j = 0; j < c.rank(); ++j) os << (j ? "," : "") << tuples[i][j];
        os << ')';
        labels[i] = os.str();
    }
    return FiniteQuandle(std::move(table), std::move(labels));
}

inline CheckedAlexander takasaki_spec(std::vector<Int> factors) {
    const long g = static_cast<long>(factors.size());
    IntMatrix t(g, g);
    for (long i = 0; i < g; ++i) t(i, i) = -1;
    return CheckedAlexander::validate(AlexanderSpec{std::move(factors), std::move(t)});
}

// X = F_p[t]/(1 + t + ... + t^{n-1}) with t = companion matrix; requires
// gcd(n, p) = 1.
inline CheckedAlexander phi_family(long p, long n) {
    if (n < 2 || !is_prime(p)) throw input_error("phi_family: need a prime p and n >= 2");
    if (std::gcd(n, p) != 1) throw input_error("phi_family: n and p must be coprime");
    const long g = n - 1;
    std::vector<Int> factors(g, Int(p));
    IntMatrix t(g, g);
    for (long i = 0; i + 1 < g; ++i) t(i + 1, i) = 1;
    for (long i = 0; i < g; ++i) t(i, g - 1) = -1;
    return CheckedAlexander::validate(AlexanderSpec{std::move(factors), std::move(t)});
}

// Q_X = (X (x) X) / { x(x)y - y(x)tx }, presented on the k^2 pure-tensor
// generators with the reduction map retained.
class QxModel {
public:
    explicit QxModel(const CheckedAlexander& c) : checked_(&c), pres_(build(c)) {}

    const FinGenAb& group() const { return pres_.group(); }
    const PresentedGroup& presentation() const { return pres_; }

    std::vector<Int> reduce_tensor(const std::vector<Int>& a, const std::vector<Int>& b) const {
        const long k = checked_->rank();
        std::vector<Int> coords(k * k);
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) coords[i * k + j] = a[i] * b[j];
        return pres_.reduce(coords);
    }

    std::vector<Int> zero() const { return group().zero(); }

private:
    static PresentedGroup build(const CheckedAlexander& c) {
        const long k = c.rank();
        const auto& d = c.spec().factors;
        const IntMatrix& t = c.spec().t;
        IntMatrix rel(k * k, 3 * k * k);
        long col = 0;
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) {
                rel(i * k + j, col++) = d[i];
                rel(i * k + j, col++) = d[j];
                // e_i(x)e_j - e_j(x)(t e_i)
                rel(i * k + j, col) += 1;
                for (long m = 0; m < k; ++m) rel(j * k + m, col) -= t(m, i);
                ++col;
            }
        return PresentedGroup(k * k, rel);
    }

    const CheckedAlexander* checked_;
    PresentedGroup pres_;
};

// X /\ X modulo { x/\y - tx/\ty }, i.e. coker(1 - T) on the exterior square;
// requires (1-t) invertible.
class ExteriorModel {
public:
    explicit ExteriorModel(const CheckedAlexander& c) : checked_(&c), pres_(build(c)) {
        if (!c.unit_one_minus_t())
            throw input_error("exterior_model: (1-t) must be invertible");
        const long k = c.rank();
        for (long i = 0; i < k; ++i)
            for (long j = i + 1; j < k; ++j) pairs_.emplace_back(i, j);
    }

    const FinGenAb& group() const { return pres_.group(); }
    long generator_pairs() const { return static_cast<long>(pairs_.size()); }

    std::vector<Int> reduce_wedge(const std::vector<Int>& u, const std::vector<Int>& v) const {
        std::vector<Int> coords(pairs_.size());
        for (size_t idx = 0; idx < pairs_.size(); ++idx) {
            auto [i, j] = pairs_[idx];
            coords[idx] = u[i] * v[j] - u[j] * v[i];
        }
        return pres_.reduce(coords);
    }

    // Generator-coordinate tensor vector -> exterior coordinates of
    // sum c_ij e_i /\ (1-t)^{-1} e_j. Realizes the reduction used to carry
    // Q_X classes into the exterior quotient.
    std::vector<Int> reduce_tensor_coords(const std::vector<Int>& tensor_coords) const {
        const long k = checked_->rank();
        const IntMatrix& s = checked_->one_minus_t_inverse();
        std::vector<Int> coords(pairs_.size());
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) {
                const Int& cij = tensor_coords[i * k + j];
                if (cij == 0) continue;
                for (size_t idx = 0; idx < pairs_.size(); ++idx) {
                    auto [a, b] = pairs_[idx];
                    // e_i /\ (S e_j) component at a < b
                    Int w = (a == i ? s(b, j) : Int(0)) - (b == i ? s(a, j) : Int(0));
                    if (w != 0) coords[idx] += cij * w;
                }
            }
        return pres_.reduce(coords);
    }

    const PresentedGroup& presentation() const { return pres_; }

private:
    static PresentedGroup build(const CheckedAlexander& c) {
        const long k = c.rank();
        const auto& d = c.spec().factors;
        const IntMatrix& t = c.spec().t;
        std::vector<std::pair<long, long>> pairs;
        for (long i = 0; i < k; ++i)
            for (long j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
        const long g = static_cast<long>(pairs.size());
        IntMatrix rel(g, 3 * g);
        long col = 0;
        for (long idx = 0; idx < g; ++idx) {
            auto [i, j] = pairs[idx];
            rel(idx, col++) = d[i];
            rel(idx, col++) = d[j];
            // w_ij - T(w_ij), T(e_i /\ e_j) = (t e_i) /\ (t e_j)
            rel(idx, col) += 1;
            for (long a = 0; a < g; ++a) {
                auto [m, l] = pairs[a];
                rel(a, col) -= t(m, i) * t(l, j) - t(l, i) * t(m, j);
            }
            ++col;
        }
        return PresentedGroup(g, rel);
    }

    const CheckedAlexander* checked_;
    PresentedGroup pres_;
    std::vector<std::pair<long, long>> pairs_;
};

// Element of the associated-group model Z x X x Q_X.
struct ClauwensElement {
    Int n;
    long a = 0;                // element index in X
    std::vector<Int> alpha;    // Q_X canonical coordinates

    bool operator==(const ClauwensElement&) const = default;
};

inline ClauwensElement clauwens_identity(const QxModel& qx) { return {0, 0, qx.zero()}; }

// (n,a,alpha) (m,b,beta) = (n+m, t^m a + b, [t^m a (x) b] + alpha + beta).
inline ClauwensElement clauwens_mul(const CheckedAlexander& c, const QxModel& qx,
                                    const ClauwensElement& g, const ClauwensElement& h) {
    long m = static_cast<long>(pos_mod(h.n, c.type()));
    std::vector<Int> ta = c.apply(c.t_power(m), c.tuple_of(g.a));
    ClauwensElement out;
    out.n = g.n + h.n;
    out.a = c.index_of(c.add_tuples(ta, c.tuple_of(h.a)));
    out.alpha = qx.group().add(qx.reduce_tensor(ta, c.tuple_of(h.a)),
                               qx.group().add(g.alpha, h.alpha));
    return out;
}

inline ClauwensElement clauwens_inverse(const CheckedAlexander& c, const QxModel& qx,
                                        const ClauwensElement& g) {
    long mneg = static_cast<long>(pos_mod(-g.n, c.type()));
    std::vector<Int> d = c.reduce_tuple(
        c.apply(c.t_power(mneg), c.sub_tuples(std::vector<Int>(c.rank()), c.tuple_of(g.a))));
    ClauwensElement out;
    out.n = -g.n;
    out.a = c.index_of(d);
    // delta = -gamma - [t^{-n} a_g (x) d] with a_g the X part of g; derived
    // from requiring g * g^{-1} = identity.
    std::vector<Int> ta = c.apply(c.t_power(mneg), c.tuple_of(g.a));
    out.alpha = qx.group().neg(qx.group().add(g.alpha, qx.reduce_tensor(ta, d)));
    return out;
}

// Inn(X) = (Z/Type) |x X with (k,a)(m,b) = (k+m, t^m a + b); elements are
// indexed k * |X| + a. Construction cross-checks the model against the
// permutation closure of the right translations and throws on any mismatch.
struct InnModel {
    long type = 1;
    long xorder = 1;
    FiniteGroupTable table;
    std::vector<Perm> perms;  // perms[index] = action z -> t^k z + a

    long index(long k, long a) const { return k * xorder + a; }
    std::pair<long, long> decode(long idx) const { return {idx / xorder, idx % xorder}; }
};

inline InnModel inn_model(const CheckedAlexander& c, long bound = kDefaultGroupBound) {
    if (!c.connected()) throw input_error("inn_model: spec must be connected ((1-t) invertible)");
    const long type = c.type(), n = c.order();
    const long total = type * n;

    std::vector<std::vector<long>> mul(total, std::vector<long>(total));
    for (long k = 0; k < type; ++k)
        for (long a = 0; a < n; ++a)
            for (long m = 0; m < type; ++m)
                for (long b = 0; b < n; ++b) {
                    std::vector<Int> ta = c.apply(c.t_power(m), c.tuple_of(a));
                    long a2 = c.index_of(c.add_tuples(ta, c.tuple_of(b)));
                    mul[k * n + a][m * n + b] = ((k + m) % type) * n + a2;
                }

    InnModel im{type, n, FiniteGroupTable(std::move(mul)), {}};

    // The bijection (k,a) -> (z -> t^k z + a) must carry the model onto the
    // permutation group generated by the right translations.
    std::vector<Perm> perms(total);
    for (long k = 0; k < type; ++k)
        for (long a = 0; a < n; ++a) {
            Perm p(n);
            for (long z = 0; z < n; ++z)
                p[z] = c.index_of(c.add_tuples(c.apply(c.t_power(k), c.tuple_of(z)), c.tuple_of(a)));
            perms[k * n + a] = std::move(p);
        }
    PermGroup inn = inn_group(alexander_quandle(c), bound);
    if (inn.order() != total)
        throw std::runtime_error("inn_model: permutation group order disagrees with Type * |X|");
    for (const Perm& p : perms)
        if (inn.index_of(p) < 0)
            throw std::runtime_error("inn_model: model element missing from the permutation group");
    for (long x = 0; x < total; ++x)
        for (long y = 0; y < total; ++y)
            if (perm_compose(perms[x], perms[y]) != perms[im.table.mul(x, y)])
                throw std::runtime_error("inn_model: multiplication disagrees with permutations");

    im.perms = std::move(perms);
    return im;
}

// The group 2-cocycle on Inn(X) valued in the exterior quotient, induced by
// the universal quandle cocycle through the section (k,a) -> (k,a,0):
// ((k,a),(m,b)) -> t^m a /\ (1-t)^{-1} b.
inline GroupCocycle2 t_of_phi(const CheckedAlexander& c, const InnModel& im, const ExteriorModel& ext) {
    const long total = im.type * im.xorder;
    GroupCocycle2 out;
    out.order = total;
    out.target = ext.group();
    out.values.assign(static_cast<size_t>(total) * total, {});
    const IntMatrix& s = c.one_minus_t_inverse();
    for (long i = 0; i < total; ++i) {
        auto [k, a] = im.decode(i);
        (void)k;
        std::vector<Int> atup = c.tuple_of(a);
        for (long j = 0; j < total; ++j) {
            auto [m, b] = im.decode(j);
            std::vector<Int> u = c.apply(c.t_power(m), atup);
            std::vector<Int> v = c.apply(s, c.tuple_of(b));
            out.values[i * total + j] = ext.reduce_wedge(u, v);
        }
    }
    return out;
}

// The universal quandle 2-cocycle (x,y) -> [x (x) (1-t) y] valued in Q_X.
inline Cocycle2 universal_cocycle(const CheckedAlexander& c, const QxModel& qx) {
    const long n = c.order();
    Cocycle2 out;
    out.order = n;
    out.target = qx.group();
    out.values.assign(static_cast<size_t>(n) * n, {});
    for (long x = 0; x < n; ++x) {
        std::vector<Int> xt = c.tuple_of(x);
        for (long y = 0; y < n; ++y) {
            std::vector<Int> wy = c.apply(c.one_minus_t(), c.tuple_of(y));
            out.values[pair_index(n, x, y)] = qx.reduce_tensor(xt, wy);
        }
    }
    return out;
}

}  // namespace qhk
