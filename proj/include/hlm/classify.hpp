#pragma once

#include "hlm/algebra.hpp"

#include <array>
#include <optional>
#include <string>

namespace hlm {

/// Counts of negative, positive and zero entries of a congruence-diagonalized
/// symmetric form.
struct Inertia {
    int n_minus = 0;
    int n_plus = 0;
    int n_zero = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
    std::string to_string() const;
};

/// Exact inertia of a symmetric rational matrix by pivoted congruence
/// elimination (Sylvester's law); no floating point.
Inertia inertia(const QMatrix& symmetric);

/// Killing form of the real Lie algebra behind a numeric table.
///
/// Tables whose constants are all real are their own real form. Tables whose
/// constants are all imaginary (the i*f physics convention) describe the real
/// algebra spanned by i*e_a, whose Killing form is -trace(ad ad). Mixed tables
/// have no canonical real form and are rejected.
QMatrix real_form_killing(const NumericStructureConstants& sc);

/// L^2, M^2 or H^2, possibly infinite. 1/INF = 0.
struct ExtendedSquare {
    bool infinite = false;
    Rational value{0};

    static ExtendedSquare inf() { return {true, Rational(0)}; }
    static ExtendedSquare of(Rational v) { return {false, std::move(v)}; }
    /// "p/q", "-p/q" or "inf".
    static ExtendedSquare parse(std::string_view text);

    /// 1/value, with 1/INF = 0.
    Rational inverse() const;
    int sign() const { return infinite ? 1 : sgn(value); }
    std::string to_string() const;
};

enum class AlgebraType { O33, O24, O15, DegenO14SemiDirect, DegenO23SemiDirect, NonSemisimple };

std::string algebra_type_name(AlgebraType t);

/// Zero L^2 or M^2 (a type-transition surface, not an algebra), or zero/negative H^2.
class BoundaryError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// f^2 (M^2 L^2 - H^2) / (H^2 M^2 L^2) = f^2 (eta^2 - lambda*mu).
Rational semisimple_value(const ExtendedSquare& L2, const ExtendedSquare& M2, const ExtendedSquare& H2,
                          const Rational& f);

/// Table lookup on (L^2, M^2, H^2) including the two degenerate surfaces.
AlgebraType classify_point(const ExtendedSquare& L2, const ExtendedSquare& M2, const ExtendedSquare& H2,
                           const Rational& f);

/// An exact ParameterPoint for the given squares. When H^2 is not a rational
/// square, eta = 1/H is irrational and the isomorphic point
/// (lambda, mu*H^2, eta = 1) is returned instead (x -> x/eta, I -> I/eta).
struct ResolvedPoint {
    ParameterPoint point;
    bool rescaled = false;
};
ResolvedPoint resolve_point(const ExtendedSquare& L2, const ExtendedSquare& M2, const ExtendedSquare& H2,
                            const Rational& f);

/// so(p,q) from [L_AB, L_CD] = G_BC L_AD - G_AC L_BD + G_AD L_BC - G_BD L_AC,
/// G = diag(+1 x p, -1 x q), real constants.
NumericStructureConstants reference_so(int p, int q);

/// so(p,q) with p+q translations T_A, [L_AB, T_C] = G_BC T_A - G_AC T_B.
NumericStructureConstants reference_semidirect(int p, int q);

/// Killing inertia of the reference algebra for a type; nullopt for NonSemisimple.
std::optional<Inertia> reference_inertia(AlgebraType t);

/// Coefficients of F_i5 = B x_i + D p_i, F_i6 = E x_i + G p_i, F_56 = A I.
///
/// The six-dimensional metric is G6 = diag(1,-1,-1,-1, g55, g66) with
/// g55 = eps5*scale5 and g66 = eps6*scale6. A unit-normalized solution has
/// scale5 = scale6 = 1; it exists only when the point admits one over Q.
struct EmbeddingCoefficients {
    GaussRational A, B, D, E, G;
    int eps5 = 1;
    int eps6 = 1;
    Rational scale5{1};
    Rational scale6{1};
    bool unit_normalized = true;
    bool complex_coefficients = false;

    Rational g55() const { return eps5 * scale5; }
    Rational g66() const { return eps6 * scale6; }
    std::array<Rational, 6> metric6() const;
};

class DegenerateError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// Solves the embedding into o(G6); throws DegenerateError when lambda*mu = eta^2.
EmbeddingCoefficients solve_embedding(const ParameterPoint& point);

/// Ordered index pairs (A<B) of the six-dimensional labels 0,1,2,3,5,6,
/// stored internally as 0..5.
const std::array<std::array<int, 2>, 15>& six_pairs();
std::string six_label(int internal_index);

/// J_AB as coefficient vectors over the 15 HLM generators.
std::vector<std::vector<GaussRational>> embedding_generators(const EmbeddingCoefficients& emb);

struct EmbeddingCheck {
    bool pass = false;
    std::size_t pairs_checked = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

/// Substitutes the transformed generators into the numeric HLM table and checks
/// [J_AB, J_CD] = i f (G_BC J_AD - G_AC J_BD + G_AD J_BC - G_BD J_AC) exactly.
EmbeddingCheck check_embedding(const ParameterPoint& point, const EmbeddingCoefficients& emb);

struct ClassificationReport {
    ExtendedSquare L2, M2, H2;
    Rational f;
    ResolvedPoint resolved;
    Rational semisimple_value;
    AlgebraType type;
    Inertia inertia;
    std::optional<Inertia> expected;
    bool det_zero = false;
    std::optional<EmbeddingCoefficients> embedding;
    bool embedding_verified = false;
    bool pass = false;
    std::string message;
};

/// Killing inertia of the HLM algebra at the point against the reference
/// algebra of the predicted type.
ClassificationReport verify_classification(const ExtendedSquare& L2, const ExtendedSquare& M2,
                                           const ExtendedSquare& H2, const Rational& f);

}  // namespace hlm
