#pragma once

#include "hlm/classify.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hlm {

/// Pauli matrices sigma_0 (identity) .. sigma_3.
CMatrix pauli(int k);

/// Six 8x8 Clifford generators built as triple Kronecker products of Pauli matrices.
struct GammaSet {
    std::array<CMatrix, 6> gammas;
    /// Diagonal of the Clifford metric, read off from Gamma_a^2.
    std::array<int, 6> metric6;
};

GammaSet build_gammas();

enum class Provenance { clifford8, real6, reference };
std::string provenance_name(Provenance p);
Provenance parse_provenance(std::string_view s);

/// Images of the basis elements of an algebra as exact complex matrices.
struct Representation {
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<CMatrix> images;
    std::optional<ParameterPoint> point;
    Provenance provenance = Provenance::reference;

    const CMatrix& image(Gen g) const { return images.at(idx(g)); }
};

struct RepResidualReport {
    std::size_t pairs_checked = 0;
    std::size_t nonzero_pairs = 0;
    std::string first_failure;
    bool pass = false;
};

/// [rho(a), rho(b)] - sum_c C_ab^c rho(c) for every unordered pair.
RepResidualReport verify_rep(const Representation& rep, const NumericStructureConstants& sc);

/// Thrown when a construction cannot serve the requested point.
class RepresentationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// J_ab = i f [Gamma_a, Gamma_b] / 4 carried back to (F, p, x, I) through the
/// inverse generator transformation. Needs a unit embedding whose extra
/// directions match the Clifford metric (an o(2,4)-region point).
Representation gamma_rep(const ParameterPoint& point, const EmbeddingCoefficients& emb);

/// The 15 real 6x6 matrices M^i_j = -e^i_j + e^j_i and N^i_j = e^i_j + e^j_i.
std::vector<std::pair<std::string, QMatrix>> six_dim_basis();

struct SixDimRep {
    Representation rep;
    EmbeddingCoefficients embedding;
    /// coefficients(g, k): image(g) = i * sum_k coefficients(g, k) * basis_k.
    QMatrix coefficients;
};

/// Real six-dimensional representation at lambda = mu = 0, eta != 0.
SixDimRep six_dim_rep(const ParameterPoint& point);

/// Vector representation of reference_so(p,q): (L_AB)^C_D = delta^C_A G_BD - delta^C_B G_AD.
Representation reference_vector_rep(int p, int q);

enum class CasimirKind { C1, C2, C3 };
std::string casimir_name(CasimirKind k);
CasimirKind parse_casimir(std::string_view s);

/// The six-dimensional generators J_AB (pair order of six_pairs()) assembled
/// from a representation of the 15 HLM generators.
std::vector<CMatrix> six_generators(const Representation& rep, const EmbeddingCoefficients& emb);

/// C1 = eps J J J, C2 = J_AB J^AB, C3 = W_AB W^AB with W_AB = eps_ABCDEF J^CD J^EF,
/// all with full index sums, indices raised with G6 and eps_{012356} = +1.
CMatrix casimir_matrix(const Representation& rep, const EmbeddingCoefficients& emb, CasimirKind which);

/// True iff c commutes with every generator image.
bool centrality_check(const CMatrix& c, const Representation& rep);

}  // namespace hlm
