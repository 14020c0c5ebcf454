#pragma once

#include "lp.hpp"
#include "normal_form.hpp"

#include <optional>

namespace toric {

// A finitely generated subgroup of Z^n, stored with its canonical Hermite basis.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(std::size_t n) : n_(n) {}

    static Lattice from_generators(std::size_t n, const IMat& gens) {
        Lattice l(n);
        for (const auto& g : gens)
            if (g.size() != n) throw Error("generator length does not match the ambient dimension");
        l.generators_ = gens;
        l.basis_ = hnf(gens, n).form;
        return l;
    }

    std::size_t ambient_dim() const { return n_; }
    std::size_t rank() const { return basis_.size(); }
    const IMat& basis() const { return basis_; }
    const IMat& generators() const { return generators_; }
    bool is_zero() const { return basis_.empty(); }

    bool contains(const IVec& v) const {
        IVec r = v;
        const auto piv = pivots();
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::size_t c = piv[i];
            if (r[c] % basis_[i][c] != 0) return false;
            Int f = r[c] / basis_[i][c];
            if (f != 0) r = sub(r, scale(basis_[i], f));
        }
        return is_zero_vec(r);
    }

    bool contains(const Lattice& other) const {
        for (const auto& b : other.basis_)
            if (!contains(b)) return false;
        return true;
    }

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

private:
    static bool is_zero_vec(const IVec& v) { return toric::is_zero(v); }
    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> p;
        for (const auto& row : basis_) {
            std::size_t c = 0;
            while (row[c] == 0) ++c;
            p.push_back(c);
        }
        return p;
    }

    std::size_t n_ = 0;
    IMat generators_;
    IMat basis_;
};

inline Lattice saturate(const Lattice& m) {
    const std::size_t n = m.ambient_dim();
    if (m.is_zero()) return m;
    IMat perp = right_kernel(m.basis(), n);
    if (perp.empty()) return Lattice::from_generators(n, identity(n));
    return Lattice::from_generators(n, right_kernel(perp, n));
}

struct TorsionWitness {
    IVec vector;  // not in M
    Int order;    // order * vector lies in M
};

inline std::optional<TorsionWitness> torsion_witness(const Lattice& m) {
    const std::size_t n = m.ambient_dim();
    if (m.is_zero()) return std::nullopt;
    auto s = snf(m.basis(), n);
    IMat qinv = unimodular_inverse(s.right);
    for (std::size_t i = 0; i < s.invariants.size(); ++i)
        if (s.invariants[i] != 1) return TorsionWitness{qinv[i], s.invariants[i]};
    return std::nullopt;
}

inline bool is_saturated(const Lattice& m) { return !torsion_witness(m).has_value(); }

// Coordinates of E on which some element of M is nonzero.
inline IndexSet restricted_support(const Lattice& m, const IndexSet& e) {
    IndexSet r;
    for (int j : e)
        for (const auto& b : m.basis())
            if (b[static_cast<std::size_t>(j)] != 0) {
                r.push_back(j);
                break;
            }
    return r;
}

// Coefficients of a rational multiplier, cleared to a primitive integer vector.
inline IVec primitive_integer(const QVec& y) {
    Int den = 1;
    for (const auto& q : y) den = lcm_int(den, boost::multiprecision::denominator(q));
    IVec r;
    r.reserve(y.size());
    for (const auto& q : y) r.push_back(boost::multiprecision::numerator(q) * (den / boost::multiprecision::denominator(q)));
    Int g = content(r);
    if (g > 1)
        for (auto& x : r) x /= g;
    return r;
}

struct PositiveGamma {
    IVec gamma;         // element of M
    IVec coefficients;  // gamma = coefficients * basis, with primitive coefficients
};

inline std::optional<PositiveGamma> find_positive_gamma_detail(const Lattice& m, const IndexSet& e) {
    const std::size_t n = m.ambient_dim();
    if (m.is_zero()) return PositiveGamma{zero_vec(n), {}};
    IndexSet em = restricted_support(m, e);
    if (em.empty()) {
        IVec c = zero_vec(m.rank());
        c[0] = 1;
        return PositiveGamma{m.basis()[0], c};
    }
    auto face = cone_implicit_equalities(m.basis(), n, e);
    if (!set_intersection(face.implicit, em).empty()) return std::nullopt;
    IVec c = primitive_integer(face.multiplier);
    return PositiveGamma{vec_mul(c, m.basis(), n), c};
}

inline std::optional<IVec> find_positive_gamma(const Lattice& m, const IndexSet& e) {
    auto g = find_positive_gamma_detail(m, e);
    if (!g) return std::nullopt;
    return g->gamma;
}

inline bool is_weak_transversal(const Lattice& m, const IndexSet& e) { return find_positive_gamma_detail(m, e).has_value(); }

inline bool is_transversal(const Lattice& m, const IndexSet& e) { return is_saturated(m) && is_weak_transversal(m, e); }

// Unimodular r x r matrix whose first row is the primitive vector c.
inline IMat complete_to_unimodular(const IVec& c) {
    const std::size_t r = c.size();
    IMat col;
    for (const auto& x : c) col.push_back(IVec{x});
    auto h = hnf(col, 1);
    if (h.form.size() != 1 || h.form[0][0] != 1) throw Error("vector is not primitive");
    // h.transform * c = e_1, so the first column of its inverse is c.
    return transpose(unimodular_inverse(h.transform), r);
}

// Generators of M, all nonnegative on E, with the first one equal to gamma.
inline IMat transversal_generators(const Lattice& m, const IndexSet& e) {
    const std::size_t n = m.ambient_dim();
    auto pg = find_positive_gamma_detail(m, e);
    if (!pg) throw Error("lattice is not weak-transversal");
    if (m.is_zero()) return {};
    IMat gens = mat_mul(complete_to_unimodular(pg->coefficients), m.basis(), n);
    const IVec& gamma = gens[0];
    for (std::size_t i = 1; i < gens.size(); ++i) {
        Int lambda = 0;
        for (int j : e) {
            auto ju = static_cast<std::size_t>(j);
            if (gens[i][ju] < 0) lambda = std::max(lambda, ceil_div(-gens[i][ju], gamma[ju]));
        }
        if (lambda != 0) gens[i] = add(gens[i], scale(gamma, lambda));
    }
    return gens;
}

inline IMat hyperbolic_basis(const Lattice& l, const IndexSet& e) {
    if (!is_saturated(l)) throw Error("lattice is not saturated");
    return transversal_generators(l, e);
}

// Elements of L vanishing on the listed coordinates.
inline Lattice intersect_coordinate_subspace(const Lattice& l, const IndexSet& coords) {
    const std::size_t n = l.ambient_dim();
    if (l.is_zero() || coords.empty()) return l;
    IMat restricted;
    for (const auto& b : l.basis()) restricted.push_back(project(b, coords));
    IMat ker = left_kernel(restricted, coords.size());
    if (ker.empty()) return Lattice(n);
    return Lattice::from_generators(n, mat_mul(ker, l.basis(), n));
}

// Coordinates of E that vanish identically on the cone L_Q intersected with {x_E >= 0}.
inline IndexSet implicit_equalities(const Lattice& l, const IndexSet& e) {
    return cone_implicit_equalities(l.basis(), l.ambient_dim(), e).implicit;
}

inline Lattice max_transversal_sublattice(const Lattice& l, const IndexSet& e) {
    if (!is_saturated(l)) throw Error("lattice is not saturated");
    return intersect_coordinate_subspace(l, implicit_equalities(l, e));
}

// The stratum where all coordinates of S vanish meets the variety of L exactly when
// no element of L is nonnegative and nonzero on S.
inline bool stratum_meets(const Lattice& l, const IndexSet& s) {
    return implicit_equalities(l, s).size() == s.size();
}

// Matrix of a surjection Z^n -> Z^(n-1) with kernel (alpha), sending e_j to e_(j-1) for j >= m.
inline IMat kernel_projection(const IVec& alpha, std::size_t m) {
    const std::size_t n = alpha.size();
    if (m == 0 || m > n) throw Error("kernel_projection: invalid split index");
    for (std::size_t j = m; j < n; ++j)
        if (alpha[j] != 0) throw Error("kernel_projection: trailing entries must vanish");
    IVec head(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(m));
    if (content(head) != 1) throw Error("kernel_projection: entries must have gcd 1");
    IMat col;
    for (const auto& x : head) col.push_back(IVec{x});
    IMat pp = hnf(col, 1).transform;
    IMat a(n - 1, zero_vec(n));
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a[i - 1][j] = pp[i][j];
    for (std::size_t j = m; j < n; ++j) a[j - 1][j] = 1;
    return a;
}

}  // namespace toric
