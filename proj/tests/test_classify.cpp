#include "hlm/classify.hpp"

#include <doctest.h>

#include <random>

using namespace hlm;

namespace {

ExtendedSquare sq(long n, long d = 1) { return ExtendedSquare::of(make_rational(n, d)); }
const ExtendedSquare INF = ExtendedSquare::inf();

// Killing inertia of so(p,q): compact generators pair negatively, boosts positively.
Inertia so_inertia(int p, int q) { return {p * (p - 1) / 2 + q * (q - 1) / 2, p * q, 0}; }

QMatrix hlm_killing(const ParameterPoint& p) { return real_form_killing(substitute(build_family(Family::hlm), p)); }

ParameterPoint point(Rational lam, Rational mu, Rational eta, Rational f = 1) {
    ParameterPoint p;
    p.f = f;
    p.lambda = lam;
    p.mu = mu;
    p.eta = eta;
    return p;
}

}  // namespace

TEST_CASE("inertia of small forms") {
    QMatrix a(3, 3);
    a(0, 0) = 2;
    a(1, 1) = -3;
    CHECK(inertia(a) == Inertia{1, 1, 1});
    QMatrix h(2, 2);
    h(0, 1) = 1;
    h(1, 0) = 1;
    CHECK(inertia(h) == Inertia{1, 1, 0});
    QMatrix z(4, 4);
    CHECK(inertia(z) == Inertia{0, 0, 4});
    QMatrix ns(2, 2);
    ns(0, 1) = 1;
    CHECK_THROWS(inertia(ns));
}

TEST_CASE("reference algebras") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 4}, {1, 5}, {3, 3}, {1, 4}, {2, 3}, {0, 4}}) {
        const auto sc = reference_so(p, q);
        CHECK(jacobi_residuals(sc).empty());
        CHECK(inertia(real_form_killing(sc)) == so_inertia(p, q));
    }
    const auto semi = reference_semidirect(1, 4);
    CHECK(jacobi_residuals(semi).empty());
    Inertia s14 = so_inertia(1, 4);
    s14.n_zero = 5;
    CHECK(inertia(real_form_killing(semi)) == s14);
    CHECK(reference_inertia(AlgebraType::O24) == Inertia{7, 8, 0});
    CHECK(reference_inertia(AlgebraType::O15) == Inertia{10, 5, 0});
    CHECK(reference_inertia(AlgebraType::O33) == Inertia{6, 9, 0});
    CHECK(reference_inertia(AlgebraType::DegenO14SemiDirect) == Inertia{6, 4, 5});
    CHECK(reference_inertia(AlgebraType::DegenO23SemiDirect) == Inertia{4, 6, 5});
    CHECK_FALSE(reference_inertia(AlgebraType::NonSemisimple).has_value());
}

TEST_CASE("killing form") {
    const auto can = substitute(build_family(Family::canonical), ParameterPoint{});
    const auto k = killing_form(can);
    for (std::size_t a = 6; a < kNumGen; ++a)
        for (std::size_t b = 0; b < kNumGen; ++b) CHECK(k(a, b).is_zero());
    CHECK(determinant(k).is_zero());
    CHECK(inertia(real_form_killing(can)).n_zero >= 9);
    CHECK(killing_ad_invariant(can, k));

    const auto sc = substitute(build_family(Family::hlm), point(1, 1, 0));
    const auto k2 = killing_form(sc);
    CHECK_FALSE(determinant(k2).is_zero());
    CHECK(k2 == k2.transpose());
    CHECK(killing_ad_invariant(sc, k2));
    // symbolic table too
    const auto sym = killing_form(build_family(Family::hlm));
    CHECK(sym == sym.transpose());
    CHECK(killing_ad_invariant(build_family(Family::hlm), sym));
}

TEST_CASE("semisimple value") {
    CHECK(semisimple_value(sq(1), sq(1), sq(1), 1) == 0);
    // L^2 -> infinity limit of f^2 (M^2 L^2 - H^2) / (H^2 M^2 L^2) is f^2 / H^2
    CHECK(semisimple_value(INF, sq(1), sq(4), 1) == make_rational(1, 4));
    CHECK(semisimple_value(sq(1), sq(1), INF, 2) == -4);
    // agrees with the finite formula
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int k = 0; k < 50; ++k) {
        Rational L2 = d(rng), M2 = d(rng), H2 = std::abs(d(rng)) + 1;
        if (L2 == 0 || M2 == 0) continue;
        Rational f = d(rng) == 0 ? 1 : 3;
        Rational direct = f * f * (M2 * L2 - H2) / (H2 * M2 * L2);
        CHECK(semisimple_value(ExtendedSquare::of(L2), ExtendedSquare::of(M2), ExtendedSquare::of(H2), f) == direct);
    }
    CHECK_THROWS_AS(semisimple_value(sq(0), sq(1), sq(1), 1), BoundaryError);
    CHECK_THROWS_AS(semisimple_value(sq(1), sq(0), sq(1), 1), BoundaryError);
    CHECK_THROWS_AS(classify_point(sq(1), sq(1), sq(-1), 1), ParameterError);
}

TEST_CASE("table examples") {
    // arguments are (L^2, M^2, H^2, f)
    CHECK(classify_point(sq(1), sq(1), sq(1, 4), 1) == AlgebraType::O24);
    CHECK(classify_point(sq(1), sq(1), sq(4), 1) == AlgebraType::O15);
    CHECK(classify_point(sq(-1), sq(-1), sq(4), 1) == AlgebraType::O33);
    CHECK(classify_point(sq(1), sq(1), sq(1), 1) == AlgebraType::DegenO14SemiDirect);
    CHECK(classify_point(sq(-1), sq(-1), sq(1), 1) == AlgebraType::DegenO23SemiDirect);
    CHECK(classify_point(INF, INF, INF, 1) == AlgebraType::NonSemisimple);
    CHECK(algebra_type_name(AlgebraType::O24) == "o(2,4)");

    const auto r = verify_classification(sq(-1), sq(1), sq(7), 1);
    CHECK(r.type == AlgebraType::O24);
    CHECK(r.inertia == Inertia{7, 8, 0});
    CHECK(r.pass);

    const auto d = verify_classification(sq(1), sq(1), sq(1), 1);
    CHECK(d.type == AlgebraType::DegenO14SemiDirect);
    CHECK(d.inertia.n_zero > 0);
    CHECK(d.pass);
}

TEST_CASE("table rows against literal inequalities") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(1, 30), den(1, 7);
    auto rnd = [&] { return make_rational(num(rng), den(rng)); };
    int checked = 0;
    for (int k = 0; k < 120; ++k) {
        Rational L2 = rnd(), M2 = rnd(), H2 = rnd();
        const int row = k % 4;
        if (row == 1) L2 = -L2;
        if (row == 2) L2 = -L2, M2 = -M2;
        if (row == 3) M2 = -M2;
        const Rational prod = M2 * L2;
        AlgebraType expect;
        if (sgn(L2) != sgn(M2))
            expect = AlgebraType::O24;
        else if (H2 < prod)
            expect = AlgebraType::O24;
        else if (H2 == prod)
            expect = sgn(M2) > 0 ? AlgebraType::DegenO14SemiDirect : AlgebraType::DegenO23SemiDirect;
        else
            expect = sgn(M2) > 0 ? AlgebraType::O15 : AlgebraType::O33;
        const auto r = verify_classification(ExtendedSquare::of(L2), ExtendedSquare::of(M2), ExtendedSquare::of(H2), 1);
        CHECK(r.type == expect);
        CHECK(r.pass);
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("det K vanishes exactly on the degenerate surface") {
    for (int L = -3; L <= 3; ++L)
        for (int M = -3; M <= 3; ++M) {
            if (L == 0 || M == 0 || L * M < 0) continue;
            const Rational prod = L * M;
            for (const Rational& H2 : std::vector<Rational>{prod - make_rational(1, 2), prod, prod + make_rational(1, 3)}) {
                if (sgn(H2) <= 0) continue;
                const auto L2 = ExtendedSquare::of(L), M2 = ExtendedSquare::of(M), h2 = ExtendedSquare::of(H2);
                const auto rp = resolve_point(L2, M2, h2, 1);
                const bool det_zero = is_zero(determinant(hlm_killing(rp.point)));
                CHECK(det_zero == is_zero(semisimple_value(L2, M2, h2, 1)));
                CHECK(det_zero == (H2 == prod));
            }
        }
}

TEST_CASE("irrational H uses the rescaled point") {
    const auto rp = resolve_point(sq(1), sq(1), sq(2), 1);
    CHECK(rp.rescaled);
    CHECK(rp.point.eta == 1);
    CHECK(rp.point.mu == 2);
    const auto r = verify_classification(sq(1), sq(1), sq(2), 1);
    CHECK(r.type == AlgebraType::O15);
    CHECK(r.pass);
}

TEST_CASE("inertia is basis independent") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-3, 3);
    const auto sc = substitute(build_family(Family::hlm), point(1, -1, make_rational(1, 2)));
    const Inertia base = inertia(real_form_killing(sc));
    for (int trial = 0; trial < 3; ++trial) {
        QMatrix b = QMatrix::identity(kNumGen);
        for (std::size_t r = 0; r < kNumGen; ++r)
            for (std::size_t c = 0; c < kNumGen; ++c)
                if (r != c && rng() % 4 == 0) b(r, c) = d(rng);
        if (is_zero(determinant(b))) continue;
        const auto changed = change_basis(sc, to_complex(b));
        CHECK(jacobi_residuals(changed).empty());
        CHECK(inertia(real_form_killing(changed)) == base);
    }
}

TEST_CASE("embedding") {
    const auto p = point(-1, -1, 2);
    const auto e = solve_embedding(p);
    CHECK(check_embedding(p, e).pass);
    CHECK(check_embedding(p, e).pairs_checked == 105);
    Inertia sig{0, 0, 0};
    for (const auto& g : e.metric6()) (sgn(g) > 0 ? sig.n_plus : sig.n_minus) += 1;
    CHECK(sig.n_plus == 2);  // o(2,4)

    EmbeddingCoefficients hand;
    hand.A = 1;
    hand.B = 1;
    hand.D = 0;
    hand.E = 0;
    hand.G = 1;
    hand.eps5 = 1;
    hand.eps6 = 1;
    CHECK(check_embedding(point(-1, -1, 0), hand).pass);
    hand.A = -1;
    CHECK_FALSE(check_embedding(point(-1, -1, 0), hand).pass);

    CHECK_THROWS_AS(solve_embedding(point(1, 1, 1)), DegenerateError);

    // every solution passes substitution, unit or rescaled
    for (const auto& q : {point(1, 1, 2), point(1, 1, make_rational(1, 2)), point(-1, -1, make_rational(1, 2)),
                          point(0, 1, make_rational(1, 2)), point(0, 0, 3), point(2, -3, 0), point(make_rational(1, 3), 5, 7, 2)}) {
        const auto s = solve_embedding(q);
        CHECK(check_embedding(q, s).pass);
        if (s.unit_normalized) {
            CHECK(abs(s.g55()) == 1);
            CHECK(abs(s.g66()) == 1);
        }
    }
}

TEST_CASE("infinite constants") {
    auto det_zero = [](const ExtendedSquare& L2, const ExtendedSquare& M2, const ExtendedSquare& H2) {
        return is_zero(determinant(hlm_killing(resolve_point(L2, M2, H2, 1).point)));
    };
    const std::vector<std::array<ExtendedSquare, 3>> samples{
        {sq(1), sq(2), sq(1, 4)}, {sq(-3), sq(5), sq(7)}, {sq(2), sq(2), sq(9)}, {sq(-1, 2), sq(-4), sq(1)}, {sq(3), sq(-2), sq(4, 9)}};
    for (auto s : samples) {
        auto [L2, M2, H2] = s;
        CHECK_FALSE(det_zero(L2, INF, H2));
        CHECK_FALSE(det_zero(INF, M2, H2));
        CHECK_FALSE(det_zero(L2, M2, INF));
        CHECK_FALSE(det_zero(INF, INF, H2));
        CHECK(det_zero(L2, INF, INF));
        CHECK(det_zero(INF, M2, INF));
        CHECK(det_zero(INF, INF, INF));
    }
}
