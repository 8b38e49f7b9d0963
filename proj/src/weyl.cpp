#include "hlm/weyl.hpp"

namespace hlm {

std::string weyl_key_string(const WeylKey& k) {
    std::string out;
    auto put = [&](const char* name, int i, unsigned e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += name + std::to_string(i);
        if (e > 1) out += '^' + std::to_string(e);
    };
    for (int i = 0; i < 4; ++i) put("xi", i, k.xi[i]);
    for (int i = 0; i < 4; ++i) put("d", i, k.d[i]);
    return out.empty() ? "1" : out;
}

std::string to_string(const WeylElement& w) {
    if (w.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : w.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        if (k != WeylKey{}) out += "*" + weyl_key_string(k);
    }
    return out;
}

void XiRepConfig::validate() const {
    if (is_zero(H)) throw ParameterError("H must be nonzero");
}

ParameterPoint xi_point(const XiRepConfig& config) {
    config.validate();
    ParameterPoint p;
    p.f = config.hbar;
    p.hbar = config.hbar;
    p.eta = Rational(kXiEtaSign) / config.H;
    return p;
}

std::vector<WeylElement> xi_rep(const XiRepConfig& config) {
    config.validate();
    return detail::xi_rep_impl<GaussRational>(GaussRational(config.a), config.H, config.hbar);
}

std::vector<SymbolicWeyl> xi_rep_symbolic(const Rational& H, const Rational& hbar) {
    if (is_zero(H)) throw ParameterError("H must be nonzero");
    return detail::xi_rep_impl<ParamPoly>(ParamPoly::variable(Var::a), H, hbar);
}

namespace {

XiSignResult check_sign(const std::vector<SymbolicWeyl>& img, const XiRepConfig& config, int sign) {
    ParameterPoint p;
    p.f = config.hbar;
    p.hbar = config.hbar;
    p.eta = Rational(sign) / config.H;
    static const StructureConstants hlm_sc = build_family(Family::hlm);
    const NumericStructureConstants sc = substitute(hlm_sc, p);
    XiSignResult r;
    r.sign = sign;
    for (std::size_t a = 0; a < kNumGen; ++a)
        for (std::size_t b = a + 1; b < kNumGen; ++b) {
            SymbolicWeyl res = weyl_commutator(img[a], img[b]);
            const auto& coeffs = sc.stored(a, b);
            for (std::size_t c = 0; c < kNumGen; ++c)
                if (!coeffs[c].is_zero()) res -= img[c] * ParamPoly(coeffs[c]);
            ++r.pairs_checked;
            if (!res.is_zero()) {
                if (r.nonzero_pairs == 0)
                    r.first_failure = "[" + std::string(gen_name(gen(a))) + "," + std::string(gen_name(gen(b))) + "]";
                ++r.nonzero_pairs;
            }
        }
    return r;
}

}  // namespace

XiVerifyReport verify_xi_rep(const XiRepConfig& config) {
    config.validate();
    const auto img = xi_rep_symbolic(config.H, config.hbar);
    XiVerifyReport rep;
    rep.plus = check_sign(img, config, +1);
    rep.minus = check_sign(img, config, -1);
    const bool plus_ok = rep.plus.nonzero_pairs == 0;
    const bool minus_ok = rep.minus.nonzero_pairs == 0;
    if (plus_ok != minus_ok) rep.adopted_sign = plus_ok ? +1 : -1;
    rep.pass = rep.adopted_sign == kXiEtaSign;
    return rep;
}

std::vector<WeylElement> spin_part(const XiRepConfig& config) {
    const auto img = xi_rep(config);
    std::vector<WeylElement> out;
    for (const auto& [i, j] : kLorentzPairs)
        out.push_back(img[idx(F(i, j))] - img[idx(X(i))] * img[idx(P(j))] + img[idx(P(i))] * img[idx(X(j))]);
    return out;
}

ScalarCoefficients scalar_coefficients(const ParameterPoint& p) {
    return {p.lambda * p.mu - p.eta * p.eta, Rational(1), p.eta, -p.lambda, -p.mu};
}

WeylElement scalar_operator(const ParameterPoint& point, const XiRepConfig& config) {
    config.validate();
    if (point.eta != Rational(kXiEtaSign) / config.H)
        throw ParameterError("eta = " + to_string(point.eta) + " is inconsistent with H = " + to_string(config.H) +
                             " (the representation realizes eta = " + std::to_string(kXiEtaSign) + "/H)");
    return assemble_scalar<WeylElement, GaussRational>(xi_rep(config), scalar_coefficients(point), WeylElement());
}

WeylElement apply(const WeylElement& op, const WeylElement& poly) {
    for (const auto& [k, c] : poly.terms())
        if (k.has_derivative()) throw std::invalid_argument("apply expects a polynomial without derivatives");
    WeylElement out;
    const WeylElement product = op * poly;
    for (const auto& [k, c] : product.terms())
        if (!k.has_derivative()) out.add_term(k, c);
    return out;
}

}  // namespace hlm
