#include "hlm/algebra.hpp"

namespace hlm {

namespace {

using Vec = std::vector<ParamPoly>;

std::vector<std::string> generator_names() {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < kNumGen; ++k) names.emplace_back(gen_name(gen(k)));
    return names;
}

ParamPoly v(Var x) { return ParamPoly::variable(x); }
const GaussRational kI = GaussRational::i();

// Adds c * F_ij to a coefficient vector, with F_ji = -F_ij and F_ii = 0.
void add_f(Vec& out, int i, int j, const ParamPoly& c) {
    if (i == j) return;
    if (i < j)
        out[idx(F(i, j))] += c;
    else
        out[idx(F(j, i))] -= c;
}

// c * (g_jk F_il - g_ik F_jl + g_il F_jk - g_jl F_ik)
Vec lorentz_lorentz(int i, int j, int k, int l, const ParamPoly& c) {
    Vec out(kNumGen);
    add_f(out, i, l, c * GaussRational(metric(j, k)));
    add_f(out, j, l, c * GaussRational(-metric(i, k)));
    add_f(out, j, k, c * GaussRational(metric(i, l)));
    add_f(out, i, k, c * GaussRational(-metric(j, l)));
    return out;
}

// c * (g_jk V_i - g_ik V_j) for the vector family V = P or X
Vec lorentz_vector(int i, int j, int k, Gen (*vec)(int), const ParamPoly& c) {
    Vec out(kNumGen);
    if (metric(j, k)) out[idx(vec(i))] += c * GaussRational(metric(j, k));
    if (metric(i, k)) out[idx(vec(j))] -= c * GaussRational(metric(i, k));
    return out;
}

// c * eps_ijkl F^kl, summed over all k, l
Vec dual_f(int i, int j, const ParamPoly& c) {
    Vec out(kNumGen);
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
            int e = levi_civita4(i, j, k, l);
            if (!e) continue;
            add_f(out, k, l, c * GaussRational(e * metric(k) * metric(l)));
        }
    return out;
}

Vec operator+(Vec a, const Vec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

struct Relations {
    // Coefficient of the Lorentz relations (i*hbar, i*f, i, or i*q1 / i*q13 / i*q14).
    ParamPoly ff, fp, fx;
};

// Brackets shared by every family: Lorentz-Lorentz, Lorentz-p, Lorentz-x; [F, I] = 0.
void set_lorentz_part(StructureConstants& sc, const Relations& r) {
    for (const auto& [i, j] : kLorentzPairs) {
        for (const auto& [k, l] : kLorentzPairs) {
            if (idx(F(i, j)) >= idx(F(k, l))) continue;
            sc.set(idx(F(i, j)), idx(F(k, l)), lorentz_lorentz(i, j, k, l, r.ff));
        }
        for (int k = 0; k < 4; ++k) {
            sc.set(idx(F(i, j)), idx(P(k)), lorentz_vector(i, j, k, P, r.fp));
            sc.set(idx(F(i, j)), idx(X(k)), lorentz_vector(i, j, k, X, r.fx));
        }
    }
}

StructureConstants canonical() {
    StructureConstants sc("canonical", generator_names());
    const ParamPoly ih = kI * v(Var::hbar);
    set_lorentz_part(sc, {ih, ih, ih});
    for (int i = 0; i < 4; ++i) {
        Vec px(kNumGen);
        px[idx(Gen::Id)] = ih * GaussRational(metric(i));
        sc.set(idx(P(i)), idx(X(i)), px);
    }
    return sc;
}

StructureConstants hlm_family() {
    StructureConstants sc("hlm", generator_names());
    const ParamPoly iF = kI * v(Var::f);
    set_lorentz_part(sc, {iF, iF, iF});
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            // [p_i, x_j] = if (g_ij I + eta F_ij)
            Vec px(kNumGen);
            if (metric(i, j)) px[idx(Gen::Id)] = iF * GaussRational(metric(i, j));
            add_f(px, i, j, iF * v(Var::eta));
            sc.set(idx(P(i)), idx(X(j)), px);
            if (i < j) {
                Vec pp(kNumGen), xx(kNumGen);
                add_f(pp, i, j, iF * v(Var::lambda));
                add_f(xx, i, j, iF * v(Var::mu));
                sc.set(idx(P(i)), idx(P(j)), pp);
                sc.set(idx(X(i)), idx(X(j)), xx);
            }
        }
        // [p_i, I] = if (lambda x_i - eta p_i); [x_i, I] = if (eta x_i - mu p_i)
        Vec pI(kNumGen), xI(kNumGen);
        pI[idx(X(i))] = iF * v(Var::lambda);
        pI[idx(P(i))] = -(iF * v(Var::eta));
        xI[idx(X(i))] = iF * v(Var::eta);
        xI[idx(P(i))] = -(iF * v(Var::mu));
        sc.set(idx(P(i)), idx(Gen::Id), pI);
        sc.set(idx(X(i)), idx(Gen::Id), xI);
    }
    return sc;
}

// The H -> infinity member in units hbar = 1. The [x_i, I] relation is taken
// as -(i/M^2) p_i.
StructureConstants lm_family() {
    StructureConstants sc("lm", generator_names());
    const ParamPoly i1(kI);
    set_lorentz_part(sc, {i1, i1, i1});
    for (int i = 0; i < 4; ++i) {
        Vec px(kNumGen);
        px[idx(Gen::Id)] = i1 * GaussRational(metric(i));
        sc.set(idx(P(i)), idx(X(i)), px);
        for (int j = i + 1; j < 4; ++j) {
            Vec pp(kNumGen), xx(kNumGen);
            add_f(pp, i, j, kI * v(Var::lambda));
            add_f(xx, i, j, kI * v(Var::mu));
            sc.set(idx(P(i)), idx(P(j)), pp);
            sc.set(idx(X(i)), idx(X(j)), xx);
        }
        Vec pI(kNumGen), xI(kNumGen);
        pI[idx(X(i))] = kI * v(Var::lambda);
        xI[idx(P(i))] = -(kI * v(Var::mu));
        sc.set(idx(P(i)), idx(Gen::Id), pI);
        sc.set(idx(X(i)), idx(Gen::Id), xI);
    }
    return sc;
}

// General Lorentz-covariant ansatz with fourteen imaginary coefficients i*q_k,
// q1..q14 = (phi, A, B, C, a, b, c, d, alpha, beta, gamma, delta, h, f).
StructureConstants ansatz_family() {
    StructureConstants sc("ansatz", generator_names());
    auto q = [](int k) { return kI * ParamPoly::variable(ansatz_var(k)); };
    const ParamPoly phi = q(1), A = q(2), B = q(3), C = q(4), a = q(5), b = q(6), c = q(7), d = q(8);
    const ParamPoly alpha = q(9), beta = q(10), gamma = q(11), delta = q(12), h = q(13), fa = q(14);
    set_lorentz_part(sc, {phi, fa, h});
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Vec px(kNumGen);
            if (metric(i, j)) px[idx(Gen::Id)] = A * GaussRational(metric(i, j));
            add_f(px, i, j, B);
            px = px + dual_f(i, j, C);
            sc.set(idx(P(i)), idx(X(j)), px);
            if (i < j) {
                Vec pp(kNumGen), xx(kNumGen);
                add_f(pp, i, j, a);
                add_f(xx, i, j, c);
                sc.set(idx(P(i)), idx(P(j)), pp + dual_f(i, j, b));
                sc.set(idx(X(i)), idx(X(j)), xx + dual_f(i, j, d));
            }
        }
        Vec pI(kNumGen), xI(kNumGen);
        pI[idx(X(i))] = alpha;
        pI[idx(P(i))] = beta;
        xI[idx(X(i))] = gamma;
        xI[idx(P(i))] = delta;
        sc.set(idx(P(i)), idx(Gen::Id), pI);
        sc.set(idx(X(i)), idx(Gen::Id), xI);
    }
    return sc;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::canonical: return "canonical";
        case Family::ansatz: return "ansatz";
        case Family::hlm: return "hlm";
        case Family::lm: return "lm";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::canonical, Family::ansatz, Family::hlm, Family::lm})
        if (family_name(f) == name) return f;
    throw ParameterError("unknown family '" + std::string(name) + "'");
}

void ParameterPoint::validate() const {
    if (is_zero(f)) throw ParameterError("f must be nonzero");
}

std::map<Var, GaussRational> ParameterPoint::bindings() const {
    return {{Var::f, f}, {Var::lambda, lambda}, {Var::mu, mu}, {Var::eta, eta}, {Var::hbar, hbar}};
}

std::string ParameterPoint::to_string() const {
    return "f=" + hlm::to_string(f) + " lambda=" + hlm::to_string(lambda) + " mu=" + hlm::to_string(mu) +
           " eta=" + hlm::to_string(eta) + " hbar=" + hlm::to_string(hbar);
}

std::set<Var> family_parameters(Family family) {
    switch (family) {
        case Family::canonical: return {Var::hbar};
        case Family::hlm: return {Var::f, Var::lambda, Var::mu, Var::eta};
        case Family::lm: return {Var::lambda, Var::mu};
        case Family::ansatz: {
            std::set<Var> s;
            for (int k = 1; k <= 14; ++k) s.insert(ansatz_var(k));
            return s;
        }
    }
    return {};
}

StructureConstants build_family(Family family, const std::map<Var, ParamPoly>& overrides) {
    const auto legal = family_parameters(family);
    for (const auto& [var, value] : overrides)
        if (!legal.count(var))
            throw ParameterError("parameter '" + std::string(var_name(var)) + "' is not part of family '" +
                                 std::string(family_name(family)) + "'");
    StructureConstants sc;
    switch (family) {
        case Family::canonical: sc = canonical(); break;
        case Family::hlm: sc = hlm_family(); break;
        case Family::lm: sc = lm_family(); break;
        case Family::ansatz: sc = ansatz_family(); break;
    }
    return substitute_symbols(sc, overrides);
}

StructureConstants substitute_symbols(const StructureConstants& sc, const std::map<Var, ParamPoly>& bindings) {
    if (bindings.empty()) return sc;
    StructureConstants out(sc.family(), sc.names());
    for (std::size_t a = 0; a < sc.dim(); ++a)
        for (std::size_t b = a + 1; b < sc.dim(); ++b) {
            auto vec = sc.stored(a, b);
            for (auto& x : vec) x = x.substitute(bindings);
            out.set(a, b, std::move(vec));
        }
    return out;
}

NumericStructureConstants substitute(const StructureConstants& sc, const std::map<Var, GaussRational>& bindings) {
    std::map<Var, ParamPoly> as_poly;
    for (const auto& [var, value] : bindings) as_poly.emplace(var, ParamPoly(value));
    NumericStructureConstants out(sc.family(), sc.names());
    for (std::size_t a = 0; a < sc.dim(); ++a)
        for (std::size_t b = a + 1; b < sc.dim(); ++b) {
            std::vector<GaussRational> vec(sc.dim());
            const auto& src = sc.stored(a, b);
            for (std::size_t c = 0; c < sc.dim(); ++c) {
                if (src[c].is_zero()) continue;
                ParamPoly value = src[c].substitute(as_poly);
                if (!value.is_constant()) {
                    auto free = value.variables();
                    throw ParameterError("unbound parameter '" + std::string(var_name(*free.begin())) +
                                         "' in [" + sc.names()[a] + "," + sc.names()[b] + "]");
                }
                vec[c] = value.constant_term();
            }
            out.set(a, b, std::move(vec));
        }
    return out;
}

NumericStructureConstants substitute(const StructureConstants& sc, const ParameterPoint& point,
                                     const std::map<Var, GaussRational>& ansatz_bindings) {
    point.validate();
    auto b = point.bindings();
    for (const auto& [var, value] : ansatz_bindings) b[var] = value;
    return substitute(sc, b);
}

std::vector<ParamPoly> unit_vector(Gen g, const ParamPoly& c) {
    std::vector<ParamPoly> out(kNumGen);
    out[idx(g)] = c;
    return out;
}

NumericStructureConstants change_basis(const NumericStructureConstants& sc, const CMatrix& basis) {
    const std::size_t n = sc.dim();
    auto inv = inverse(basis);
    if (!inv) throw std::invalid_argument("change of basis is not invertible");
    NumericStructureConstants out(sc.family(), sc.names());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<GaussRational> u(n), w(n);
            for (std::size_t i = 0; i < n; ++i) {
                u[i] = basis(i, a);
                w[i] = basis(i, b);
            }
            auto old = sc.bracket(u, w);
            std::vector<GaussRational> coeffs(n);
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t k = 0; k < n; ++k)
                    if (!old[k].is_zero() && !(*inv)(c, k).is_zero()) coeffs[c] += (*inv)(c, k) * old[k];
            out.set(a, b, std::move(coeffs));
        }
    return out;
}

StructureConstants to_symbolic(const NumericStructureConstants& sc) {
    StructureConstants out(sc.family(), sc.names());
    for (std::size_t a = 0; a < sc.dim(); ++a)
        for (std::size_t b = a + 1; b < sc.dim(); ++b) {
            std::vector<ParamPoly> vec;
            for (const auto& x : sc.stored(a, b)) vec.emplace_back(x);
            out.set(a, b, std::move(vec));
        }
    return out;
}

CMatrix to_complex(const QMatrix& m) {
    CMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = GaussRational(m(r, c));
    return out;
}

QMatrix real_matrix(const CMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m(r, c).is_real()) throw std::domain_error("matrix has a non-real entry");
            out(r, c) = m(r, c).re();
        }
    return out;
}

}  // namespace hlm
