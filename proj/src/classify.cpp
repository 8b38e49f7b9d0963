#include "hlm/classify.hpp"

#include <numeric>

namespace hlm {

namespace {

const StructureConstants& hlm_symbolic() {
    static const StructureConstants sc = build_family(Family::hlm);
    return sc;
}

std::vector<std::string> six_generator_names(int n, const std::string& prefix) {
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) names.push_back(prefix + std::to_string(a) + std::to_string(b));
    return names;
}

int pair_slot(int n, int a, int b) { return a * n - a * (a + 1) / 2 + (b - a - 1); }

// Adds c * L_ab (with L_ba = -L_ab, L_aa = 0) to a vector indexed by pair slots.
template <class V, class S>
void add_pair(V& out, int n, int a, int b, const S& c) {
    if (a == b) return;
    if (a < b)
        out[pair_slot(n, a, b)] += c;
    else
        out[pair_slot(n, b, a)] -= c;
}

std::vector<int> signature_metric(int p, int q) {
    std::vector<int> g(p + q, -1);
    for (int k = 0; k < p; ++k) g[k] = 1;
    return g;
}

void set_so_relations(NumericStructureConstants& sc, const std::vector<int>& g) {
    const int n = static_cast<int>(g.size());
    auto G = [&](int x, int y) { return x == y ? g[x] : 0; };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int s1 = pair_slot(n, a, b), s2 = pair_slot(n, c, d);
                    if (s1 >= s2) continue;
                    std::vector<GaussRational> v(sc.dim());
                    add_pair(v, n, a, d, GaussRational(G(b, c)));
                    add_pair(v, n, b, d, GaussRational(-G(a, c)));
                    add_pair(v, n, b, c, GaussRational(G(a, d)));
                    add_pair(v, n, a, c, GaussRational(-G(b, d)));
                    sc.set(s1, s2, std::move(v));
                }
}

// Rational candidates ordered by height: 0, +-1, +-2, +-1/2, ...
std::vector<Rational> small_rationals(int max_height) {
    std::vector<Rational> out{Rational(0)};
    for (int h = 1; h <= max_height; ++h)
        for (int q = 1; q <= h; ++q)
            for (int p = 1; p <= h; ++p) {
                if (std::max(p, q) != h || std::gcd(p, q) != 1) continue;
                out.push_back(make_rational(p, q));
                out.push_back(make_rational(-p, q));
            }
    return out;
}

// Rational (B, D) with mu B^2 + 2 eta B D + lambda D^2 = target.
std::optional<std::pair<Rational, Rational>> find_conic_point(const Rational& lambda, const Rational& mu,
                                                              const Rational& eta, const Rational& target) {
    static const std::vector<Rational> candidates = small_rationals(24);
    for (const auto& B : candidates) {
        Rational c0 = mu * B * B - target;
        Rational half_b = eta * B;  // equation: lambda D^2 + 2 half_b D + c0 = 0
        if (!is_zero(lambda)) {
            Rational disc = half_b * half_b - lambda * c0;
            if (auto s = rational_sqrt(disc)) return std::pair<Rational, Rational>{B, Rational((-half_b + *s) / lambda)};
        } else if (!is_zero(half_b)) {
            return std::pair<Rational, Rational>{B, Rational(-c0 / (2 * half_b))};
        } else if (is_zero(c0)) {
            return std::pair<Rational, Rational>{B, Rational(0)};
        }
    }
    return std::nullopt;
}

EmbeddingCoefficients from_v5(const ParameterPoint& pt, const Rational& B, const Rational& D, const Rational& t,
                              const Rational& g55, const Rational& g66) {
    EmbeddingCoefficients e;
    e.B = B;
    e.D = D;
    e.E = Rational(t * (pt.eta * B + pt.lambda * D));
    e.G = Rational(-t * (pt.mu * B + pt.eta * D));
    e.A = Rational(t * g55);
    e.eps5 = sgn(g55);
    e.eps6 = sgn(g66);
    e.scale5 = abs(g55);
    e.scale6 = abs(g66);
    e.unit_normalized = e.scale5 == 1 && e.scale6 == 1;
    return e;
}

// Exchanges the roles of the fifth and sixth directions.
EmbeddingCoefficients swap56(const EmbeddingCoefficients& e) {
    EmbeddingCoefficients s = e;
    s.B = e.E;
    s.D = e.G;
    s.E = e.B;
    s.G = e.D;
    s.A = -e.A;
    std::swap(s.eps5, s.eps6);
    std::swap(s.scale5, s.scale6);
    return s;
}

std::optional<EmbeddingCoefficients> unit_embedding(const ParameterPoint& pt, int eps5, int eps6) {
    const Rational detM = pt.lambda * pt.mu - pt.eta * pt.eta;
    // t^2 = eps5 eps6 / det M
    Rational t2 = Rational(eps5 * eps6) / detM;
    auto t = rational_sqrt(t2);
    if (!t) return std::nullopt;
    auto v5 = find_conic_point(pt.lambda, pt.mu, pt.eta, Rational(-eps5));
    if (!v5) return std::nullopt;
    return from_v5(pt, v5->first, v5->second, *t, Rational(eps5), Rational(eps6));
}

}  // namespace

std::string Inertia::to_string() const {
    return "(" + std::to_string(n_minus) + "," + std::to_string(n_plus) + "," + std::to_string(n_zero) + ")";
}

Inertia inertia(const QMatrix& symmetric) {
    QMatrix a = symmetric;
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inertia needs a square matrix");
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
            if (a(r, c) != a(c, r)) throw std::invalid_argument("inertia needs a symmetric matrix");
    std::vector<std::size_t> active(n);
    std::iota(active.begin(), active.end(), 0);
    Inertia out;
    while (!active.empty()) {
        std::optional<std::size_t> pivot;
        for (auto k : active)
            if (!is_zero(a(k, k))) {
                pivot = k;
                break;
            }
        if (!pivot) {
            // All diagonal entries vanish; e_i -> e_i + e_j makes a(i,i) = 2 a(i,j).
            for (auto i : active) {
                for (auto j : active)
                    if (i != j && !is_zero(a(i, j))) {
                        for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
                        for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
                        pivot = i;
                        break;
                    }
                if (pivot) break;
            }
        }
        if (!pivot) {
            out.n_zero += static_cast<int>(active.size());
            break;
        }
        const std::size_t k = *pivot;
        const Rational d = a(k, k);
        (sgn(d) > 0 ? out.n_plus : out.n_minus) += 1;
        std::erase(active, k);
        for (auto r : active) {
            if (is_zero(a(r, k))) continue;
            Rational factor = a(r, k) / d;
            for (auto c : active) a(r, c) -= factor * a(k, c);
        }
        for (auto r : active) {
            a(r, k) = 0;
            a(k, r) = 0;
        }
    }
    return out;
}

QMatrix real_form_killing(const NumericStructureConstants& sc) {
    bool all_real = true, all_imag = true;
    for (std::size_t a = 0; a < sc.dim(); ++a)
        for (std::size_t b = a + 1; b < sc.dim(); ++b)
            for (const auto& c : sc.stored(a, b)) {
                all_real = all_real && c.is_real();
                all_imag = all_imag && c.is_imaginary();
            }
    if (!all_real && !all_imag)
        throw std::domain_error("structure constants mix real and imaginary parts; no canonical real form");
    QMatrix k = real_matrix(killing_form(sc));
    if (!all_real) k = -k;
    return k;
}

ExtendedSquare ExtendedSquare::parse(std::string_view text) {
    if (text == "inf" || text == "INF") return inf();
    return of(parse_rational(text));
}

Rational ExtendedSquare::inverse() const {
    if (infinite) return Rational(0);
    if (is_zero(value)) throw BoundaryError("inverse of a zero square");
    return Rational(1) / value;
}

std::string ExtendedSquare::to_string() const { return infinite ? "inf" : hlm::to_string(value); }

std::string algebra_type_name(AlgebraType t) {
    switch (t) {
        case AlgebraType::O33: return "o(3,3)";
        case AlgebraType::O24: return "o(2,4)";
        case AlgebraType::O15: return "o(1,5)";
        case AlgebraType::DegenO14SemiDirect: return "o(1,4)+T5";
        case AlgebraType::DegenO23SemiDirect: return "o(2,3)+T5";
        case AlgebraType::NonSemisimple: return "non-semisimple";
    }
    return "?";
}

namespace {
void check_squares(const ExtendedSquare& L2, const ExtendedSquare& M2, const ExtendedSquare& H2) {
    const std::array<std::pair<const char*, const ExtendedSquare*>, 3> named{{{"L^2", &L2}, {"M^2", &M2}, {"H^2", &H2}}};
    for (const auto& [name, s] : named)
        if (!s->infinite && is_zero(s->value))
            throw BoundaryError(std::string(name) + " = 0 is a boundary where the algebra changes type; "
                                                    "it is not an algebra point");
    if (!H2.infinite && sgn(H2.value) < 0) throw ParameterError("H^2 must be positive (H is real)");
}
}  // namespace

Rational semisimple_value(const ExtendedSquare& L2, const ExtendedSquare& M2, const ExtendedSquare& H2,
                          const Rational& f) {
    check_squares(L2, M2, H2);
    return f * f * (H2.inverse() - L2.inverse() * M2.inverse());
}

AlgebraType classify_point(const ExtendedSquare& L2, const ExtendedSquare& M2, const ExtendedSquare& H2,
                           const Rational& f) {
    if (is_zero(f)) throw ParameterError("f must be nonzero");
    const Rational value = semisimple_value(L2, M2, H2, f);
    const int sM = M2.sign(), sL = L2.sign();
    const bool finite = !L2.infinite && !M2.infinite && !H2.infinite;
    if (is_zero(value)) {
        if (finite && sM == sL && H2.value == M2.value * L2.value)
            return sM > 0 ? AlgebraType::DegenO14SemiDirect : AlgebraType::DegenO23SemiDirect;
        return AlgebraType::NonSemisimple;
    }
    if (sM != sL) return AlgebraType::O24;
    // Same signs: compare H^2 with M^2 L^2 > 0.
    const bool product_infinite = L2.infinite || M2.infinite;
    int cmp;  // sign of H^2 - M^2 L^2
    if (H2.infinite)
        cmp = 1;  // product is finite here, otherwise the value would vanish
    else if (product_infinite)
        cmp = -1;
    else
        cmp = sgn(Rational(H2.value - M2.value * L2.value));
    if (cmp < 0) return AlgebraType::O24;
    return sM > 0 ? AlgebraType::O15 : AlgebraType::O33;
}

ResolvedPoint resolve_point(const ExtendedSquare& L2, const ExtendedSquare& M2, const ExtendedSquare& H2,
                            const Rational& f) {
    check_squares(L2, M2, H2);
    ResolvedPoint r;
    r.point.f = f;
    r.point.hbar = f;
    r.point.lambda = L2.inverse();
    r.point.mu = M2.inverse();
    if (H2.infinite) {
        r.point.eta = 0;
    } else if (auto eta = rational_sqrt(Rational(1 / H2.value))) {
        r.point.eta = *eta;
    } else {
        r.point.eta = 1;
        r.point.mu = r.point.mu * H2.value;
        r.rescaled = true;
    }
    r.point.validate();
    return r;
}

NumericStructureConstants reference_so(int p, int q) {
    const int n = p + q;
    NumericStructureConstants sc("so(" + std::to_string(p) + "," + std::to_string(q) + ")",
                                 six_generator_names(n, "L"));
    set_so_relations(sc, signature_metric(p, q));
    return sc;
}

NumericStructureConstants reference_semidirect(int p, int q) {
    const int n = p + q;
    auto names = six_generator_names(n, "L");
    const int rot = static_cast<int>(names.size());
    for (int a = 0; a < n; ++a) names.push_back("T" + std::to_string(a));
    NumericStructureConstants sc("so(" + std::to_string(p) + "," + std::to_string(q) + ")+T" + std::to_string(n),
                                 names);
    const auto g = signature_metric(p, q);
    set_so_relations(sc, g);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::vector<GaussRational> v(sc.dim());
                if (b == c) v[rot + a] += GaussRational(g[b]);
                if (a == c) v[rot + b] -= GaussRational(g[a]);
                sc.set(pair_slot(n, a, b), rot + c, std::move(v));
            }
    return sc;
}

std::optional<Inertia> reference_inertia(AlgebraType t) {
    auto compute = [](const NumericStructureConstants& sc) { return inertia(real_form_killing(sc)); };
    switch (t) {
        case AlgebraType::O33: {
            static const Inertia i = compute(reference_so(3, 3));
            return i;
        }
        case AlgebraType::O24: {
            static const Inertia i = compute(reference_so(2, 4));
            return i;
        }
        case AlgebraType::O15: {
            static const Inertia i = compute(reference_so(1, 5));
            return i;
        }
        case AlgebraType::DegenO14SemiDirect: {
            static const Inertia i = compute(reference_semidirect(1, 4));
            return i;
        }
        case AlgebraType::DegenO23SemiDirect: {
            static const Inertia i = compute(reference_semidirect(2, 3));
            return i;
        }
        case AlgebraType::NonSemisimple: return std::nullopt;
    }
    return std::nullopt;
}

std::array<Rational, 6> EmbeddingCoefficients::metric6() const {
    return {Rational(1), Rational(-1), Rational(-1), Rational(-1), g55(), g66()};
}

EmbeddingCoefficients solve_embedding(const ParameterPoint& point) {
    point.validate();
    const Rational detM = point.lambda * point.mu - point.eta * point.eta;
    if (is_zero(detM))
        throw DegenerateError("lambda*mu = eta^2: the Killing form is degenerate, no embedding into o(G6)");
    if (sgn(detM) > 0) {
        // Definite form: both extra directions have the sign opposite to mu.
        const int eps = -sgn(point.mu);
        if (auto e = unit_embedding(point, eps, eps)) return *e;
    } else {
        if (auto e = unit_embedding(point, -1, 1)) return *e;
        if (auto e = unit_embedding(point, 1, -1)) return swap56(*e);
    }
    // Rescaled metric, always rational.
    Rational B, D, q;
    if (!is_zero(point.mu)) {
        B = 1, D = 0, q = point.mu;
    } else if (!is_zero(point.lambda)) {
        B = 0, D = 1, q = point.lambda;
    } else {
        B = 1, D = 1, q = 2 * point.eta;
    }
    const Rational g55 = -q;
    const Rational g66 = detM * g55;
    return from_v5(point, B, D, Rational(1), g55, g66);
}

const std::array<std::array<int, 2>, 15>& six_pairs() {
    static const std::array<std::array<int, 2>, 15> pairs = [] {
        std::array<std::array<int, 2>, 15> p{};
        int k = 0;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b) p[k++] = {a, b};
        return p;
    }();
    return pairs;
}

std::string six_label(int internal_index) {
    return internal_index < 4 ? std::to_string(internal_index) : std::to_string(internal_index + 1);
}

std::vector<std::vector<GaussRational>> embedding_generators(const EmbeddingCoefficients& emb) {
    std::vector<std::vector<GaussRational>> out;
    for (const auto& [a, b] : six_pairs()) {
        std::vector<GaussRational> v(kNumGen);
        if (b < 4) {
            v[idx(F(a, b))] = 1;
        } else if (a < 4 && b == 4) {
            v[idx(X(a))] = emb.B;
            v[idx(P(a))] = emb.D;
        } else if (a < 4 && b == 5) {
            v[idx(X(a))] = emb.E;
            v[idx(P(a))] = emb.G;
        } else {
            v[idx(Gen::Id)] = emb.A;
        }
        out.push_back(std::move(v));
    }
    return out;
}

EmbeddingCheck check_embedding(const ParameterPoint& point, const EmbeddingCoefficients& emb) {
    const auto sc = substitute(hlm_symbolic(), point);
    const auto J = embedding_generators(emb);
    const auto g = emb.metric6();
    const GaussRational i_f = GaussRational(Rational(0), point.f);
    auto G = [&](int x, int y) { return x == y ? GaussRational(g[x]) : GaussRational(); };
    auto j_of = [&](int x, int y, const GaussRational& c, std::vector<GaussRational>& acc) {
        if (x == y || c.is_zero()) return;
        const int s = x < y ? 1 : -1;
        const int slot = pair_slot(6, std::min(x, y), std::max(x, y));
        for (std::size_t k = 0; k < kNumGen; ++k) acc[k] += GaussRational(s) * c * J[slot][k];
    };
    EmbeddingCheck check;
    for (int s1 = 0; s1 < 15; ++s1)
        for (int s2 = s1 + 1; s2 < 15; ++s2) {
            const auto [a, b] = six_pairs()[s1];
            const auto [c, d] = six_pairs()[s2];
            auto lhs = sc.bracket(J[s1], J[s2]);
            std::vector<GaussRational> rhs(kNumGen);
            j_of(a, d, i_f * G(b, c), rhs);
            j_of(b, d, -(i_f * G(a, c)), rhs);
            j_of(b, c, i_f * G(a, d), rhs);
            j_of(a, c, -(i_f * G(b, d)), rhs);
            ++check.pairs_checked;
            if (lhs != rhs) {
                if (check.failures == 0)
                    check.first_failure = "[J" + six_label(a) + six_label(b) + ",J" + six_label(c) + six_label(d) + "]";
                ++check.failures;
            }
        }
    check.pass = check.failures == 0;
    return check;
}

ClassificationReport verify_classification(const ExtendedSquare& L2, const ExtendedSquare& M2,
                                           const ExtendedSquare& H2, const Rational& f) {
    ClassificationReport r;
    r.L2 = L2;
    r.M2 = M2;
    r.H2 = H2;
    r.f = f;
    r.type = classify_point(L2, M2, H2, f);
    r.semisimple_value = semisimple_value(L2, M2, H2, f);
    r.resolved = resolve_point(L2, M2, H2, f);
    const auto sc = substitute(hlm_symbolic(), r.resolved.point);
    const QMatrix k = real_form_killing(sc);
    r.inertia = inertia(k);
    r.det_zero = is_zero(determinant(k));
    r.expected = reference_inertia(r.type);
    r.pass = r.expected ? r.inertia == *r.expected : r.det_zero;
    if (r.det_zero != is_zero(r.semisimple_value)) {
        r.pass = false;
        r.message = "det K = 0 disagrees with the semisimplicity value";
    }
    if (!is_zero(r.semisimple_value)) {
        r.embedding = solve_embedding(r.resolved.point);
        r.embedding_verified = check_embedding(r.resolved.point, *r.embedding).pass;
        if (!r.embedding_verified) {
            r.pass = false;
            r.message = "embedding failed the substitution check";
        }
    }
    if (r.pass && r.message.empty()) r.message = "inertia matches the reference algebra";
    if (!r.pass && r.message.empty())
        r.message = "inertia " + r.inertia.to_string() + " differs from reference " +
                    (r.expected ? r.expected->to_string() : std::string("(none)")) + " for " +
                    algebra_type_name(r.type);
    return r;
}

}  // namespace hlm
