#include "hlm/spinor.hpp"

#include <doctest.h>

using namespace hlm;

namespace {

const GaussRational I = GaussRational::i();

ParameterPoint lm_point(Rational L2, Rational M2) {
    ParameterPoint p;
    p.lambda = 1 / L2;
    p.mu = 1 / M2;
    return p;
}

XiRepConfig xi_cfg(Rational a = 0, Rational H = 1, Rational hbar = 1) {
    XiRepConfig c;
    c.a = a;
    c.H = H;
    c.hbar = hbar;
    return c;
}

SpinorOpConfig cfg(int z1, int z2, Rational n = 0) {
    SpinorOpConfig c;
    c.zeta1 = z1;
    c.zeta2 = z2;
    c.n = n;
    return c;
}

// Coefficient matrix of one normal-ordered monomial across all entries.
CMatrix coefficient(const MatrixWeylOperator& op, const WeylKey& k) {
    CMatrix m(op.dim(), op.dim());
    for (std::size_t r = 0; r < op.dim(); ++r)
        for (std::size_t c = 0; c < op.dim(); ++c) {
            auto it = op(r, c).terms().find(k);
            if (it != op(r, c).terms().end()) m(r, c) = it->second;
        }
    return m;
}

}  // namespace

TEST_CASE("dirac matrices") {
    const auto d = build_dirac();
    const CMatrix one = CMatrix::identity(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(anticommutator(d.gamma[i], d.gamma[j]) == GaussRational(2 * metric(i, j)) * one);
    CHECK(d.gamma5 == I * d.gamma[0] * d.gamma[1] * d.gamma[2] * d.gamma[3]);
    CHECK(d.gamma5 * d.gamma5 == one);
    for (int i = 0; i < 4; ++i) CHECK(anticommutator(d.gamma5, d.gamma[i]).is_zero());
    CHECK(d.gamma[0] * d.gamma[0] == one);
    CHECK(d.gamma[1] * d.gamma[1] == -one);
}

TEST_CASE("kappa values") {
    const auto p = lm_point(1, -1);
    const auto k = resolve_kappas(cfg(1, 1), p);
    CHECK(k[0] == GaussRational(1));
    CHECK(k[1] == GaussRational(1));
    CHECK(k[2] == GaussRational(1));
    // re-derived squares: kappa1^2 + M^2/L^2 = 0, kappa2^2 + M^2 = 0, kappa3^2 = 1/L^2
    for (auto [L2, M2] : std::vector<std::pair<Rational, Rational>>{{1, -1}, {make_rational(1, 4), -4}, {-1, 1}, {4, -9}}) {
        const auto kk = resolve_kappas(cfg(1, 1), lm_point(L2, M2));
        CHECK(kk[0] * kk[0] + GaussRational(M2 / L2) == GaussRational(0));
        CHECK(kk[1] * kk[1] + GaussRational(M2) == GaussRational(0));
        CHECK(kk[2] * kk[2] == GaussRational(1 / L2));
    }
    auto c = cfg(1, 1);
    c.kappa2 = GaussRational(2);
    CHECK_THROWS_AS(resolve_kappas(c, p), ParameterError);
    c.kappa2 = GaussRational(-1);
    CHECK(resolve_kappas(c, p)[1] == GaussRational(-1));
    CHECK_THROWS_AS(resolve_kappas(cfg(1, 1), lm_point(2, -1)), ParameterError);  // kappa3^2 = 1/2
    CHECK_THROWS_AS(resolve_kappas(cfg(2, 1), p), ParameterError);
    ParameterPoint no_mass;
    no_mass.lambda = 1;
    CHECK_THROWS_AS(resolve_kappas(cfg(1, 1), no_mass), ParameterError);
}

TEST_CASE("four-component operator terms") {
    const auto d = build_dirac();
    const auto p = lm_point(1, -1);
    // With a = 1 the only derivative-free, xi-free part is -zeta2 kappa2 gamma5 (i hbar a).
    const auto op = spinor_op4(cfg(1, 1), p, xi_cfg(1, 1, 1));
    CHECK(coefficient(op, WeylKey{}) == (-I) * d.gamma5);
    // pure momentum term: gamma_i times i hbar d^i
    const Rational hbar = 3;
    const auto op3 = spinor_op4(cfg(1, 1), p, xi_cfg(0, 1, hbar));
    for (int i = 0; i < 4; ++i) {
        WeylKey k;
        k.d[i] = 1;
        CHECK(coefficient(op3, k) == (I * GaussRational(hbar * metric(i))) * d.gamma[i]);
    }
    // flipping zeta1 negates exactly the x and F terms
    const auto xi = xi_cfg(make_rational(1, 2), 2, 1);
    const auto plus = spinor_op4(cfg(1, 1, 2), p, xi), minus = spinor_op4(cfg(-1, 1, 2), p, xi);
    const auto img = xi_rep(xi);
    MatrixWeylOperator even(4), odd(4);
    for (int i = 0; i < 4; ++i) {
        even.add(GaussRational(metric(i)) * d.gamma[i], img[idx(P(i))]);
        odd.add(GaussRational(-metric(i)) * (d.gamma[i] * d.gamma5), img[idx(X(i))]);
    }
    even.add(-d.gamma5, img[idx(Gen::Id)]);
    even.add(GaussRational(-2) * CMatrix::identity(4), WeylElement(GaussRational(1)));
    for (const auto& [i, j] : kLorentzPairs) odd.add(GaussRational(-metric(i) * metric(j)) * (d.gamma[i] * d.gamma[j]), img[idx(F(i, j))]);
    CHECK(plus == [&] {
        MatrixWeylOperator s = even;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) s(r, c) += odd(r, c);
        return s;
    }());
    CHECK(minus == even - odd);
}

TEST_CASE("eight-component block structure") {
    const auto p = lm_point(1, -1);
    const auto xi = xi_cfg(1, 2, 1);
    for (auto [z1, z2] : std::vector<std::pair<int, int>>{{1, 1}, {1, -1}, {-1, 1}}) {
        const auto op8 = spinor_op8(cfg(z1, z2, 3), p, xi);
        CHECK(op8.block(0, 0, 4) == spinor_op4(cfg(z1, z2, 3), p, xi));
        CHECK(op8.block(4, 4, 4) == spinor_op4(cfg(z1, -z2, 3), p, xi));
        CHECK(op8.block(0, 4, 4).is_zero());
        CHECK(op8.block(4, 0, 4).is_zero());
    }
}

TEST_CASE("parity transform") {
    const auto img = xi_rep(xi_cfg(make_rational(1, 3), 2, 1));
    CHECK(parity_transform(img[idx(P(1))]) == -img[idx(P(1))]);
    CHECK(parity_transform(img[idx(P(0))]) == img[idx(P(0))]);
    CHECK(parity_transform(img[idx(Gen::F12)]) == img[idx(Gen::F12)]);
    CHECK(parity_transform(img[idx(Gen::F01)]) == -img[idx(Gen::F01)]);
    CHECK(parity_transform(img[idx(X(2))]) == -img[idx(X(2))]);
    CHECK(parity_transform(img[idx(Gen::Id)]) == img[idx(Gen::Id)]);
    const auto op = spinor_op8(cfg(1, 1, 1), lm_point(1, -1), xi_cfg());
    CHECK(parity_transform(parity_transform(op)) == op);
}

TEST_CASE("intertwiners") {
    const auto p = lm_point(1, -1);
    const auto d = build_dirac();
    const auto op = spinor_op8(cfg(1, 1, 1), p, xi_cfg());
    const auto same = intertwiner_search(op, op);
    REQUIRE(same.S.has_value());
    CHECK(*same.S == CMatrix::identity(8));

    struct Case {
        ParameterPoint point;
        SpinorOpConfig c;
        XiRepConfig xi;
    };
    const std::vector<Case> cases{{p, cfg(1, 1, 1), xi_cfg()},
                                  {p, cfg(-1, 1, make_rational(1, 2)), xi_cfg(2, 3, 1)},
                                  {lm_point(make_rational(1, 4), -4), cfg(1, -1, 0), xi_cfg(0, -1, 2)},
                                  {lm_point(-1, 1), cfg(1, 1, 5), xi_cfg(make_rational(1, 3), 1, 1)}};
    for (const auto& k : cases) {
        const auto D8 = spinor_op8(k.c, k.point, k.xi);
        const auto r8 = intertwiner_search(D8, parity_transform(D8));
        REQUIRE(r8.S.has_value());
        CHECK((*r8.S * parity_transform(D8) - D8 * *r8.S).is_zero());
        CHECK_FALSE(determinant(*r8.S).is_zero());
        // sigma1 (x) gamma0 also works: it swaps the blocks and conjugates by gamma0
        const CMatrix s1g0 = kron(pauli(1), d.gamma[0]);
        CHECK((s1g0 * parity_transform(D8) - D8 * s1g0).is_zero());

        const auto D4 = spinor_op4(k.c, k.point, k.xi);
        const auto r4 = intertwiner_search(D4, parity_transform(D4));
        CHECK_FALSE(r4.S.has_value());
        CHECK(r4.solution_dim == 0);
        // gamma0 fixes the momentum and Lorentz terms but not the x and I terms
        CHECK_FALSE((d.gamma[0] * parity_transform(D4) - D4 * d.gamma[0]).is_zero());
    }
}
