#include "hlm/representation.hpp"

namespace hlm {

namespace {

const GaussRational kI = GaussRational::i();

QMatrix vector_generator(const std::vector<Rational>& g, int a, int b) {
    const std::size_t n = g.size();
    QMatrix m(n, n);
    for (std::size_t d = 0; d < n; ++d) {
        m(a, d) += (int(d) == b) ? g[b] : Rational(0);
        m(b, d) -= (int(d) == a) ? g[a] : Rational(0);
    }
    return m;
}

// Images of (F, p, x, I) from the fifteen J_AB via the inverse transformation.
Representation from_six_generators(const std::vector<CMatrix>& J, const EmbeddingCoefficients& emb,
                                   const ParameterPoint& point, Provenance prov) {
    auto slot = [](int a, int b) {
        const auto& pairs = six_pairs();
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k][0] == a && pairs[k][1] == b) return k;
        throw std::logic_error("bad six-dimensional pair");
    };
    const GaussRational det = emb.B * emb.G - emb.D * emb.E;
    if (det.is_zero() || emb.A.is_zero()) throw RepresentationError("embedding is not invertible");
    Representation rep;
    rep.dim = J.front().rows();
    rep.point = point;
    rep.provenance = prov;
    rep.images.resize(kNumGen);
    for (std::size_t k = 0; k < kNumGen; ++k) rep.names.emplace_back(gen_name(gen(k)));
    for (const auto& [i, j] : kLorentzPairs) rep.images[idx(F(i, j))] = J[slot(i, j)];
    const GaussRational inv = GaussRational(1) / det;
    for (int i = 0; i < 4; ++i) {
        const CMatrix& j5 = J[slot(i, 4)];
        const CMatrix& j6 = J[slot(i, 5)];
        rep.images[idx(X(i))] = (emb.G * inv) * j5 - (emb.D * inv) * j6;
        rep.images[idx(P(i))] = (-emb.E * inv) * j5 + (emb.B * inv) * j6;
    }
    rep.images[idx(Gen::Id)] = (GaussRational(1) / emb.A) * J[slot(4, 5)];
    return rep;
}

void require_clifford_metric(const EmbeddingCoefficients& emb, const std::array<int, 6>& metric) {
    if (!emb.unit_normalized || emb.g55() != metric[4] || emb.g66() != metric[5])
        throw RepresentationError("embedding metric (" + to_string(emb.g55()) + "," + to_string(emb.g66()) +
                                  ") does not match the representation metric (" + std::to_string(metric[4]) + "," +
                                  std::to_string(metric[5]) + ")");
}

}  // namespace

CMatrix pauli(int k) {
    CMatrix m(2, 2);
    switch (k) {
        case 0: m(0, 0) = 1; m(1, 1) = 1; break;
        case 1: m(0, 1) = 1; m(1, 0) = 1; break;
        case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
        case 3: m(0, 0) = 1; m(1, 1) = -1; break;
        default: throw std::invalid_argument("Pauli index must be 0..3");
    }
    return m;
}

GammaSet build_gammas() {
    auto k3 = [](const GaussRational& c, int a, int b, int d) { return c * kron(kron(pauli(a), pauli(b)), pauli(d)); };
    GammaSet set;
    set.gammas = {
        k3(1, 2, 3, 0), k3(kI, 2, 2, 1), k3(kI, 2, 2, 2), k3(kI, 2, 2, 3), k3(-kI, 2, 1, 0), k3(1, 1, 0, 0),
    };
    const CMatrix one = CMatrix::identity(8);
    for (int a = 0; a < 6; ++a) {
        const CMatrix sq = set.gammas[a] * set.gammas[a];
        if (sq == one)
            set.metric6[a] = 1;
        else if (sq == -one)
            set.metric6[a] = -1;
        else
            throw std::logic_error("Clifford generator does not square to +-1");
    }
    return set;
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::clifford8: return "clifford8";
        case Provenance::real6: return "real6";
        case Provenance::reference: return "reference";
    }
    return "?";
}

Provenance parse_provenance(std::string_view s) {
    for (auto p : {Provenance::clifford8, Provenance::real6, Provenance::reference})
        if (provenance_name(p) == s) return p;
    throw ParseError("unknown provenance '" + std::string(s) + "'");
}

RepResidualReport verify_rep(const Representation& rep, const NumericStructureConstants& sc) {
    if (rep.images.size() != sc.dim()) throw std::invalid_argument("representation and algebra differ in dimension");
    RepResidualReport report;
    for (std::size_t a = 0; a < sc.dim(); ++a)
        for (std::size_t b = a + 1; b < sc.dim(); ++b) {
            CMatrix residual = commutator(rep.images[a], rep.images[b]);
            const auto& coeffs = sc.stored(a, b);
            for (std::size_t c = 0; c < sc.dim(); ++c)
                if (!coeffs[c].is_zero()) residual -= coeffs[c] * rep.images[c];
            ++report.pairs_checked;
            if (!residual.is_zero()) {
                if (report.nonzero_pairs == 0) report.first_failure = "[" + sc.names()[a] + "," + sc.names()[b] + "]";
                ++report.nonzero_pairs;
            }
        }
    report.pass = report.nonzero_pairs == 0;
    return report;
}

Representation gamma_rep(const ParameterPoint& point, const EmbeddingCoefficients& emb) {
    point.validate();
    const GammaSet gs = build_gammas();
    require_clifford_metric(emb, gs.metric6);
    // J_ab = i f [Gamma_a, Gamma_b] / 4
    const GaussRational scale = kI * GaussRational(point.f) / GaussRational(4);
    std::vector<CMatrix> J;
    for (const auto& [a, b] : six_pairs()) J.push_back(scale * commutator(gs.gammas[a], gs.gammas[b]));
    return from_six_generators(J, emb, point, Provenance::clifford8);
}

std::vector<std::pair<std::string, QMatrix>> six_dim_basis() {
    auto e = [](int i, int j) {
        QMatrix m(6, 6);
        m(i, j) = 1;
        return m;
    };
    std::vector<std::pair<std::string, QMatrix>> basis;
    auto M = [&](int i, int j) {
        basis.emplace_back("M" + std::to_string(i) + std::to_string(j), e(j, i) - e(i, j));
    };
    auto N = [&](int i, int j) {
        basis.emplace_back("N" + std::to_string(i) + std::to_string(j), e(i, j) + e(j, i));
    };
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) M(i, j);
    M(0, 5);
    for (int j = 1; j <= 4; ++j) N(0, j);
    for (int i = 1; i <= 4; ++i) N(i, 5);
    return basis;
}

SixDimRep six_dim_rep(const ParameterPoint& point) {
    point.validate();
    if (!is_zero(point.lambda) || !is_zero(point.mu) || is_zero(point.eta))
        throw RepresentationError("the six-dimensional construction needs lambda = mu = 0 and eta != 0");
    const std::vector<Rational> g{1, -1, -1, -1, -1, 1};
    const EmbeddingCoefficients emb = solve_embedding(point);
    require_clifford_metric(emb, {1, -1, -1, -1, -1, 1});
    const GaussRational i_f = kI * GaussRational(point.f);
    std::vector<CMatrix> J;
    for (const auto& [a, b] : six_pairs()) J.push_back(i_f * to_complex(vector_generator(g, a, b)));
    SixDimRep out{from_six_generators(J, emb, point, Provenance::real6), emb, QMatrix(kNumGen, 15)};

    // Express every image as i times a real combination of the M/N basis.
    const auto basis = six_dim_basis();
    QMatrix system(36, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) system(r * 6 + c, k) = basis[k].second(r, c);
    for (std::size_t gi = 0; gi < kNumGen; ++gi) {
        const CMatrix& img = out.rep.images[gi];
        std::vector<Rational> rhs(36);
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) {
                const GaussRational v = img(r, c) / kI;
                if (!v.is_real()) throw RepresentationError("image is not i times a real matrix");
                rhs[r * 6 + c] = v.re();
            }
        auto sol = solve(system, rhs);
        if (!sol) throw RepresentationError("image of " + std::string(gen_name(gen(gi))) + " leaves the M/N span");
        for (std::size_t k = 0; k < basis.size(); ++k) out.coefficients(gi, k) = (*sol)[k];
    }
    return out;
}

Representation reference_vector_rep(int p, int q) {
    const int n = p + q;
    std::vector<Rational> g(n, Rational(-1));
    for (int k = 0; k < p; ++k) g[k] = 1;
    Representation rep;
    rep.dim = n;
    rep.provenance = Provenance::reference;
    const auto sc = reference_so(p, q);
    rep.names = sc.names();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) rep.images.push_back(to_complex(vector_generator(g, a, b)));
    return rep;
}

std::string casimir_name(CasimirKind k) {
    switch (k) {
        case CasimirKind::C1: return "C1";
        case CasimirKind::C2: return "C2";
        case CasimirKind::C3: return "C3";
    }
    return "?";
}

CasimirKind parse_casimir(std::string_view s) {
    for (auto k : {CasimirKind::C1, CasimirKind::C2, CasimirKind::C3})
        if (casimir_name(k) == s) return k;
    throw ParseError("unknown Casimir '" + std::string(s) + "'");
}

std::vector<CMatrix> six_generators(const Representation& rep, const EmbeddingCoefficients& emb) {
    const auto coeffs = embedding_generators(emb);
    std::vector<CMatrix> J;
    for (const auto& c : coeffs) {
        CMatrix m(rep.dim, rep.dim);
        for (std::size_t k = 0; k < kNumGen; ++k)
            if (!c[k].is_zero()) m += c[k] * rep.images[k];
        J.push_back(std::move(m));
    }
    return J;
}

CMatrix casimir_matrix(const Representation& rep, const EmbeddingCoefficients& emb, CasimirKind which) {
    const auto J = six_generators(rep, emb);
    const auto g = emb.metric6();
    const auto& pairs = six_pairs();
    // Raised generators J^AB = J_AB / (g_A g_B).
    std::vector<CMatrix> Jup;
    for (std::size_t s = 0; s < pairs.size(); ++s)
        Jup.push_back(GaussRational(Rational(1) / (g[pairs[s][0]] * g[pairs[s][1]])) * J[s]);
    const std::size_t n = rep.dim;

    if (which == CasimirKind::C2) {
        CMatrix c(n, n);
        for (std::size_t s = 0; s < pairs.size(); ++s) c += J[s] * Jup[s];
        return GaussRational(2) * c;
    }

    // W_AB = eps_ABCDEF J^CD J^EF for A<B (full sum = 4 x ordered pair partitions).
    std::vector<CMatrix> W;
    for (std::size_t s = 0; s < pairs.size(); ++s) {
        CMatrix w(n, n);
        const auto [A, B] = pairs[s];
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            const auto [C, D] = pairs[t];
            if (C == A || C == B || D == A || D == B) continue;
            for (std::size_t u = 0; u < pairs.size(); ++u) {
                const auto [E, Fi] = pairs[u];
                if (u == t || E == A || E == B || Fi == A || Fi == B || E == C || E == D || Fi == C || Fi == D) continue;
                const int perm[6] = {A, B, C, D, E, Fi};
                const int sign = permutation_sign(perm, 6);
                w += GaussRational(4 * sign) * (Jup[t] * Jup[u]);
            }
        }
        W.push_back(std::move(w));
    }
    CMatrix c(n, n);
    for (std::size_t s = 0; s < pairs.size(); ++s) {
        if (which == CasimirKind::C1)
            c += Jup[s] * W[s];
        else
            c += W[s] * (GaussRational(Rational(1) / (g[pairs[s][0]] * g[pairs[s][1]])) * W[s]);
    }
    return GaussRational(2) * c;
}

bool centrality_check(const CMatrix& c, const Representation& rep) {
    for (const auto& img : rep.images)
        if (!commutator(c, img).is_zero()) return false;
    return true;
}

}  // namespace hlm
