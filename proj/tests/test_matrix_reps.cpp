#include "hlm/representation.hpp"
#include "hlm/weyl.hpp"

#include <doctest.h>

using namespace hlm;

namespace {

const GaussRational I = GaussRational::i();

ParameterPoint point(Rational lam, Rational mu, Rational eta, Rational f = 1) {
    ParameterPoint p;
    p.f = f;
    p.hbar = f;
    p.lambda = lam;
    p.mu = mu;
    p.eta = eta;
    return p;
}

// o(2,4)-region points where eta^2 - lambda*mu is a rational square, so a unit embedding exists.
std::vector<ParameterPoint> clifford_points() {
    return {point(0, 1, make_rational(1, 2)),
            point(0, 0, make_rational(1, 3)),
            point(1, 1, make_rational(5, 4)),
            point(-1, -1, make_rational(5, 4), 3),
            point(2, -3, make_rational(1, 2)),
            point(0, make_rational(-2, 7), 2, make_rational(-1, 2))};
}

// Structure constants read back from the images by solving [r_a, r_b] = sum_c C r_c.
NumericStructureConstants constants_from_rep(const Representation& rep) {
    const std::size_t n = rep.images.size(), d = rep.dim;
    CMatrix sys(d * d, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < d * d; ++k) sys(k, c) = rep.images[c].data()[k];
    NumericStructureConstants sc("from-rep", rep.names);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            auto x = solve(sys, commutator(rep.images[a], rep.images[b]).data());
            REQUIRE(x.has_value());
            sc.set(a, b, *x);
        }
    return sc;
}

}  // namespace

TEST_CASE("clifford generators") {
    const auto gs = build_gammas();
    const std::array<int, 6> expected{1, -1, -1, -1, -1, 1};
    CHECK(gs.metric6 == expected);
    const CMatrix one = CMatrix::identity(8);
    for (int a = 0; a < 6; ++a)
        for (int b = a; b < 6; ++b)
            CHECK(anticommutator(gs.gammas[a], gs.gammas[b]) == GaussRational(a == b ? 2 * expected[a] : 0) * one);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) CHECK(gs.gammas[5](r, c) == GaussRational((r + 4 == c || c + 4 == r) ? 1 : 0));
    CHECK(gs.gammas[0] * gs.gammas[0] == one);
    CHECK(gs.gammas[1] * gs.gammas[1] == -one);
    CHECK((gs.gammas[0] * gs.gammas[1] + gs.gammas[1] * gs.gammas[0]).is_zero());
    CHECK(pauli(2) * pauli(2) == CMatrix::identity(2));
    CHECK(pauli(1) * pauli(2) == I * pauli(3));
}

TEST_CASE("gamma representation") {
    const auto hlm = build_family(Family::hlm);
    const auto gs = build_gammas();
    for (const auto& p : clifford_points()) {
        const auto e = solve_embedding(p);
        REQUIRE(e.unit_normalized);
        const auto rep = gamma_rep(p, e);
        const auto report = verify_rep(rep, substitute(hlm, p));
        CHECK(report.pass);
        CHECK(report.pairs_checked == 105);
        CHECK(rep.image(Gen::F01) == (I * GaussRational(p.f) / GaussRational(4)) * commutator(gs.gammas[0], gs.gammas[1]));
        for (const auto& z : rep.image(Gen::F01).data()) CHECK(z.is_imaginary());
        for (std::size_t k = 0; k < 6; ++k) CHECK(trace(rep.images[k]).is_zero());
    }
}

TEST_CASE("gamma representation negative control and preconditions") {
    const auto p = point(0, 1, make_rational(1, 2));
    const auto rep = gamma_rep(p, solve_embedding(p));
    const auto wrong = verify_rep(rep, substitute(build_family(Family::hlm), point(0, 1, make_rational(1, 3))));
    CHECK_FALSE(wrong.pass);
    CHECK(wrong.nonzero_pairs > 0);
    // eta^2 - lambda*mu = 3 is not a rational square
    const auto q = point(1, 1, 2);
    CHECK_THROWS_AS(gamma_rep(q, solve_embedding(q)), RepresentationError);
    // o(1,5) region: metric signs cannot match
    const auto r = point(1, 1, make_rational(1, 2));
    CHECK_THROWS_AS(gamma_rep(r, solve_embedding(r)), RepresentationError);
}

TEST_CASE("killing inertia read back from the eight-dimensional representation") {
    for (const auto& p : clifford_points()) {
        const auto rep = gamma_rep(p, solve_embedding(p));
        const auto sc = constants_from_rep(rep);
        CHECK(inertia(real_form_killing(sc)) == inertia(real_form_killing(substitute(build_family(Family::hlm), p))));
        CHECK(inertia(real_form_killing(sc)) == Inertia{7, 8, 0});
    }
}

TEST_CASE("six-dimensional representation") {
    const auto basis = six_dim_basis();
    CHECK(basis.size() == 15);
    CHECK(basis[0].first == "M12");
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            CHECK(basis[0].second(r, c) == ((r == 1 && c == 2) ? -1 : (r == 2 && c == 1) ? 1 : 0));
    int m = 0, n = 0;
    for (const auto& [name, mat] : basis) (name[0] == 'M' ? m : n) += 1;
    CHECK(m == 7);
    CHECK(n == 8);

    for (const auto& p : {point(0, 0, 1), point(0, 0, make_rational(-2, 5), 3), point(0, 0, 7, make_rational(1, 2))}) {
        const auto six = six_dim_rep(p);
        CHECK(six.rep.dim == 6);
        CHECK(verify_rep(six.rep, substitute(build_family(Family::hlm), p)).pass);
        // image = i * sum coefficients * basis
        for (std::size_t g = 0; g < kNumGen; ++g) {
            QMatrix sum(6, 6);
            for (std::size_t k = 0; k < 15; ++k) sum = sum + six.coefficients(g, k) * basis[k].second;
            CHECK(six.rep.images[g] == I * to_complex(sum));
        }
    }
    CHECK_THROWS_AS(six_dim_rep(point(1, 0, 1)), RepresentationError);
    CHECK_THROWS_AS(six_dim_rep(point(0, 0, 0)), RepresentationError);
}

TEST_CASE("reference vector representations") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 5}, {2, 4}, {3, 3}, {0, 3}})
        CHECK(verify_rep(reference_vector_rep(p, q), reference_so(p, q)).pass);
}

TEST_CASE("casimir operators") {
    for (const auto& p : {clifford_points()[0], clifford_points()[2], clifford_points()[3], clifford_points()[4]}) {
        const auto e = solve_embedding(p);
        const auto rep = gamma_rep(p, e);
        for (auto k : {CasimirKind::C1, CasimirKind::C2, CasimirKind::C3}) CHECK(centrality_check(casimir_matrix(rep, e, k), rep));
        // J_AB = (i f / 2) Gamma_A Gamma_B, so the full contraction is f^2/4 times 30.
        const auto c2 = casimir_matrix(rep, e, CasimirKind::C2);
        CHECK(c2 == GaussRational(make_rational(15, 2) * p.f * p.f) * CMatrix::identity(8));
        // C1 separates the two chiral halves; C3 is a multiple of the identity.
        const auto c1 = casimir_matrix(rep, e, CasimirKind::C1);
        const Rational f3 = p.f * p.f * p.f;
        for (std::size_t r = 0; r < 8; ++r) CHECK((c1(r, r) == GaussRational(90 * f3) || c1(r, r) == GaussRational(-90 * f3)));
        CHECK(trace(c1).is_zero());
        const auto c3 = casimir_matrix(rep, e, CasimirKind::C3);
        CHECK(c3 == GaussRational(1080 * p.f * p.f * p.f * p.f) * CMatrix::identity(8));
    }
    CHECK(parse_casimir("C3") == CasimirKind::C3);
    CHECK_THROWS_AS(parse_casimir("C4"), ParseError);
}

TEST_CASE("scalar operator is half the determinant times C2") {
    for (const auto& p : clifford_points()) {
        const auto e = solve_embedding(p);
        const auto rep = gamma_rep(p, e);
        const auto s = assemble_scalar<CMatrix, GaussRational>(rep.images, scalar_coefficients(p), CMatrix(8, 8));
        const Rational detM = p.lambda * p.mu - p.eta * p.eta;
        CHECK(s == GaussRational(detM / 2) * casimir_matrix(rep, e, CasimirKind::C2));
    }
}

TEST_CASE("centrality check") {
    const auto p = clifford_points()[0];
    const auto rep = gamma_rep(p, solve_embedding(p));
    CHECK(centrality_check(CMatrix::identity(8), rep));
    CHECK_FALSE(centrality_check(rep.image(P(0)), rep));
}
