#pragma once

#include "hlm/gauss_rational.hpp"
#include "hlm/matrix.hpp"
#include "hlm/param_poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hlm {

/// Antisymmetric bracket table [e_a, e_b] = sum_c C_ab^c e_c.
///
/// Only pairs a<b are stored; [b,a] is the negation and [a,a] = 0, so
/// antisymmetry holds by construction.
template <class Scalar>
class BasicStructureConstants {
public:
    using Vector = std::vector<Scalar>;

    BasicStructureConstants() = default;
    BasicStructureConstants(std::string family, std::vector<std::string> names)
        : family_(std::move(family)), names_(std::move(names)),
          table_(names_.size() * (names_.size() - 1) / 2, Vector(names_.size())) {}

    std::size_t dim() const { return names_.size(); }
    const std::string& family() const { return family_; }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t num_pairs() const { return table_.size(); }

    Vector zero_vector() const { return Vector(dim()); }

    /// Stored value for a<b.
    const Vector& stored(std::size_t a, std::size_t b) const { return table_[pair_index(a, b)]; }

    Vector bracket(std::size_t a, std::size_t b) const {
        if (a == b) return zero_vector();
        if (a < b) return stored(a, b);
        Vector v = stored(b, a);
        for (auto& x : v) x = -x;
        return v;
    }

    /// Sets [a,b] = v (and therefore [b,a] = -v).
    void set(std::size_t a, std::size_t b, Vector v) {
        if (a == b) throw std::invalid_argument("[g,g] is zero by definition");
        if (v.size() != dim()) throw std::invalid_argument("coefficient vector has wrong length");
        if (a > b) {
            for (auto& x : v) x = -x;
            std::swap(a, b);
        }
        table_[pair_index(a, b)] = std::move(v);
    }

    /// Bracket of two linear combinations of basis elements.
    Vector bracket(const Vector& u, const Vector& v) const {
        Vector out = zero_vector();
        for (std::size_t a = 0; a < dim(); ++a) {
            if (is_zero(u[a])) continue;
            for (std::size_t b = 0; b < dim(); ++b) {
                if (a == b || is_zero(v[b])) continue;
                Scalar w = u[a] * v[b];
                Vector br = bracket(a, b);
                for (std::size_t c = 0; c < dim(); ++c)
                    if (!is_zero(br[c])) out[c] += w * br[c];
            }
        }
        return out;
    }

    friend bool operator==(const BasicStructureConstants& x, const BasicStructureConstants& y) {
        return x.names_ == y.names_ && x.table_ == y.table_;
    }

    void set_family(std::string family) { family_ = std::move(family); }

    std::size_t pair_index(std::size_t a, std::size_t b) const {
        if (a >= b || b >= dim()) throw std::out_of_range("pair index needs a < b < dim");
        const std::size_t n = dim();
        return a * n - a * (a + 1) / 2 + (b - a - 1);
    }

private:
    std::string family_;
    std::vector<std::string> names_;
    std::vector<Vector> table_;
};

using StructureConstants = BasicStructureConstants<ParamPoly>;
using NumericStructureConstants = BasicStructureConstants<GaussRational>;

template <class Scalar>
struct JacobiResidual {
    std::size_t a, b, c;
    std::vector<Scalar> residual;
};

/// Cyclic sums [[a,b],c] + [[b,c],a] + [[c,a],b] over all unordered triples;
/// only the nonzero ones are returned.
template <class Scalar>
std::vector<JacobiResidual<Scalar>> jacobi_residuals(const BasicStructureConstants<Scalar>& sc) {
    const std::size_t n = sc.dim();
    std::vector<JacobiResidual<Scalar>> out;
    auto accumulate = [&](std::vector<Scalar>& acc, std::size_t x, std::size_t y, std::size_t z) {
        // acc += [[x,y],z] = sum_d C_xy^d [d,z]
        const auto xy = sc.bracket(x, y);
        for (std::size_t d = 0; d < n; ++d) {
            if (is_zero(xy[d]) || d == z) continue;
            const auto dz = sc.bracket(d, z);
            for (std::size_t e = 0; e < n; ++e)
                if (!is_zero(dz[e])) acc[e] += xy[d] * dz[e];
        }
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                std::vector<Scalar> r(n);
                accumulate(r, a, b, c);
                accumulate(r, b, c, a);
                accumulate(r, c, a, b);
                bool nonzero = false;
                for (const auto& x : r) nonzero = nonzero || !is_zero(x);
                if (nonzero) out.push_back({a, b, c, std::move(r)});
            }
    return out;
}

inline std::size_t num_triples(std::size_t n) { return n * (n - 1) * (n - 2) / 6; }

/// ad_a as a matrix: column b holds the coefficient vector of [a, b].
template <class Scalar>
Matrix<Scalar> adjoint_matrix(const BasicStructureConstants<Scalar>& sc, std::size_t a) {
    const std::size_t n = sc.dim();
    Matrix<Scalar> m(n, n);
    for (std::size_t b = 0; b < n; ++b) {
        if (b == a) continue;
        auto v = sc.bracket(a, b);
        for (std::size_t c = 0; c < n; ++c) m(c, b) = std::move(v[c]);
    }
    return m;
}

/// K(a,b) = trace(ad_a ad_b).
template <class Scalar>
Matrix<Scalar> killing_form(const BasicStructureConstants<Scalar>& sc) {
    const std::size_t n = sc.dim();
    std::vector<Matrix<Scalar>> ad;
    ad.reserve(n);
    for (std::size_t a = 0; a < n; ++a) ad.push_back(adjoint_matrix(sc, a));
    Matrix<Scalar> k(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Scalar t{};
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const Scalar& x = ad[a](c, d);
                    if (is_zero(x)) continue;
                    const Scalar& y = ad[b](d, c);
                    if (!is_zero(y)) t += x * y;
                }
            k(a, b) = t;
            k(b, a) = std::move(t);
        }
    return k;
}

/// True iff K([a,b],c) + K(b,[a,c]) = 0 for every basis triple.
template <class Scalar>
bool killing_ad_invariant(const BasicStructureConstants<Scalar>& sc, const Matrix<Scalar>& k) {
    const std::size_t n = sc.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto ab = sc.bracket(a, b);
            for (std::size_t c = 0; c < n; ++c) {
                auto ac = sc.bracket(a, c);
                Scalar s{};
                for (std::size_t d = 0; d < n; ++d) {
                    if (!is_zero(ab[d]) && !is_zero(k(d, c))) s += ab[d] * k(d, c);
                    if (!is_zero(ac[d]) && !is_zero(k(b, d))) s += k(b, d) * ac[d];
                }
                if (!is_zero(s)) return false;
            }
        }
    return true;
}

/// Structure constants in the basis e'_a = sum_i basis(i,a) e_i.
NumericStructureConstants change_basis(const NumericStructureConstants& sc, const CMatrix& basis);

/// Coefficients as constant polynomials.
StructureConstants to_symbolic(const NumericStructureConstants& sc);

}  // namespace hlm
