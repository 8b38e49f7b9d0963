#pragma once

#include "hlm/representation.hpp"
#include "hlm/weyl.hpp"

#include <array>
#include <optional>

namespace hlm {

/// Standard representation: gamma0 = diag(1,1,-1,-1), gamma_k = [[0, sigma_k], [-sigma_k, 0]].
struct DiracSet {
    std::array<CMatrix, 4> gamma;
    /// i gamma0 gamma1 gamma2 gamma3
    CMatrix gamma5;
};

DiracSet build_dirac();

/// zeta1, zeta2 in {+1,-1}; n free. Missing kappas are derived from the point
/// when the required square root lies in Q(i).
struct SpinorOpConfig {
    int zeta1 = 1;
    int zeta2 = 1;
    Rational n{0};
    std::optional<GaussRational> kappa1, kappa2, kappa3;
};

/// kappa1^2 = -M^2/L^2 = -lambda/mu, kappa2^2 = -M^2 = -1/mu, kappa3^2 = 1/L^2 = lambda.
/// Throws ParameterError on a mismatch, on mu = 0, or when a kappa cannot be derived exactly.
std::array<GaussRational, 3> resolve_kappas(const SpinorOpConfig& cfg, const ParameterPoint& point);

/// Square matrix whose entries are Weyl-algebra elements.
class MatrixWeylOperator {
public:
    MatrixWeylOperator() = default;
    explicit MatrixWeylOperator(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    WeylElement& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const WeylElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    const std::vector<WeylElement>& entries() const { return entries_; }

    /// this += m (x) w, i.e. entry (r,c) gains m(r,c) * w.
    void add(const CMatrix& m, const WeylElement& w);
    /// Sub-block of size n starting at (r0, c0).
    MatrixWeylOperator block(std::size_t r0, std::size_t c0, std::size_t n) const;

    friend MatrixWeylOperator operator*(const MatrixWeylOperator& a, const MatrixWeylOperator& b);
    friend MatrixWeylOperator operator*(const CMatrix& s, const MatrixWeylOperator& a);
    friend MatrixWeylOperator operator*(const MatrixWeylOperator& a, const CMatrix& s);
    friend MatrixWeylOperator operator-(const MatrixWeylOperator& a, const MatrixWeylOperator& b);
    friend bool operator==(const MatrixWeylOperator&, const MatrixWeylOperator&) = default;
    bool is_zero() const;

private:
    std::size_t dim_ = 0;
    std::vector<WeylElement> entries_;
};

/// gamma_i p^i - zeta1 zeta2 kappa1 gamma_i gamma5 x^i - zeta2 kappa2 gamma5 I
/// - zeta1 kappa3 sum_{i<j} gamma_i gamma_j F^ij - n, orbital parts from the xi-representation.
MatrixWeylOperator spinor_op4(const SpinorOpConfig& cfg, const ParameterPoint& point, const XiRepConfig& xi);

/// The eight-component form with sigma0 on the p, F and n terms and sigma3 on the x and I terms.
MatrixWeylOperator spinor_op8(const SpinorOpConfig& cfg, const ParameterPoint& point, const XiRepConfig& xi);

/// xi^k -> -xi^k, d_k -> -d_k for k = 1,2,3 in every entry.
WeylElement parity_transform(const WeylElement& w);
MatrixWeylOperator parity_transform(const MatrixWeylOperator& op);

struct IntertwinerResult {
    std::size_t dim = 0;
    /// Dimension of the space of constant S with S Dp = D S.
    std::size_t solution_dim = 0;
    std::optional<CMatrix> S;
};

/// Constant invertible S with S * Dp = D * S, if any. Candidates are tried in a
/// fixed order (identity, basis vectors, their sum, seeded combinations).
IntertwinerResult intertwiner_search(const MatrixWeylOperator& D, const MatrixWeylOperator& Dp);

}  // namespace hlm
