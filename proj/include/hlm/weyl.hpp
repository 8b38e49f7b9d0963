#pragma once

#include "hlm/algebra.hpp"
#include "hlm/matrix.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hlm {

/// Exponents of xi^0..xi^3 (left) and d/dxi^0..d/dxi^3 (right) of a normal-ordered monomial.
struct WeylKey {
    std::array<std::uint8_t, 4> xi{};
    std::array<std::uint8_t, 4> d{};

    friend auto operator<=>(const WeylKey&, const WeylKey&) = default;
    bool has_derivative() const { return d != std::array<std::uint8_t, 4>{}; }
};

namespace detail {
// beta choose k times gamma!/(gamma-k)!
inline Rational leibniz_factor(unsigned beta, unsigned gamma, unsigned k) {
    Rational r(1);
    for (unsigned j = 0; j < k; ++j) r *= Rational(beta - j) * Rational(gamma - j) / Rational(j + 1);
    return r;
}
}  // namespace detail

/// Element of the Weyl algebra in four variables, kept as sum c * xi^a d^b with
/// every xi to the left. C is GaussRational or ParamPoly.
template <class C>
class BasicWeyl {
public:
    using Terms = std::map<WeylKey, C>;

    BasicWeyl() = default;
    BasicWeyl(const C& c) { add_term(WeylKey{}, c); }

    static BasicWeyl xi(int k) {
        WeylKey key;
        key.xi[k] = 1;
        return monomial(key);
    }
    static BasicWeyl d(int k) {
        WeylKey key;
        key.d[k] = 1;
        return monomial(key);
    }
    static BasicWeyl monomial(const WeylKey& key, const C& c = C(1)) {
        BasicWeyl w;
        w.add_term(key, c);
        return w;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const WeylKey& key, const C& c) {
        if (hlm::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (hlm::is_zero(it->second)) terms_.erase(it);
        }
    }

    BasicWeyl& operator+=(const BasicWeyl& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    BasicWeyl& operator-=(const BasicWeyl& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    BasicWeyl& operator*=(const C& s) {
        if (hlm::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        Terms out;
        for (auto& [k, c] : terms_) {
            C v = c * s;
            if (!hlm::is_zero(v)) out.emplace(k, std::move(v));
        }
        terms_ = std::move(out);
        return *this;
    }

    friend BasicWeyl operator+(BasicWeyl a, const BasicWeyl& b) { return a += b; }
    friend BasicWeyl operator-(BasicWeyl a, const BasicWeyl& b) { return a -= b; }
    friend BasicWeyl operator*(BasicWeyl a, const C& s) { return a *= s; }
    friend BasicWeyl operator*(const C& s, BasicWeyl a) { return a *= s; }
    BasicWeyl operator-() const { return *this * C(-1); }

    /// Normal-ordered product via d^b xi^g = sum_k prod_i C(b_i,k_i) g_i!/(g_i-k_i)! xi^(g-k) d^(b-k).
    friend BasicWeyl operator*(const BasicWeyl& u, const BasicWeyl& v) {
        BasicWeyl out;
        for (const auto& [ku, cu] : u.terms_)
            for (const auto& [kv, cv] : v.terms_) {
                const C c = cu * cv;
                std::array<unsigned, 4> k{};
                while (true) {
                    Rational factor(1);
                    WeylKey key;
                    for (int i = 0; i < 4; ++i) {
                        factor *= detail::leibniz_factor(ku.d[i], kv.xi[i], k[i]);
                        key.xi[i] = static_cast<std::uint8_t>(ku.xi[i] + kv.xi[i] - k[i]);
                        key.d[i] = static_cast<std::uint8_t>(ku.d[i] - k[i] + kv.d[i]);
                    }
                    out.add_term(key, c * GaussRational(factor));
                    int i = 0;
                    for (; i < 4; ++i) {
                        if (k[i] < std::min<unsigned>(ku.d[i], kv.xi[i])) {
                            ++k[i];
                            break;
                        }
                        k[i] = 0;
                    }
                    if (i == 4) break;
                }
            }
        return out;
    }

    friend bool operator==(const BasicWeyl&, const BasicWeyl&) = default;

private:
    Terms terms_;
};

template <class C>
BasicWeyl<C> weyl_commutator(const BasicWeyl<C>& u, const BasicWeyl<C>& v) {
    return u * v - v * u;
}

using WeylElement = BasicWeyl<GaussRational>;
using SymbolicWeyl = BasicWeyl<ParamPoly>;

/// "xi0^2*d1" style rendering of a key; "1" for the empty key.
std::string weyl_key_string(const WeylKey& k);
std::string to_string(const WeylElement& w);

/// Parameters of the differential-operator representation.
struct XiRepConfig {
    Rational a{0};
    Rational H{1};
    Rational hbar{1};

    /// Throws ParameterError when H == 0.
    void validate() const;
};

/// Sign s in eta = s/H under which the operators below satisfy the deformed
/// brackets; fixed after verify_xi_rep found that only s = -1 works.
inline constexpr int kXiEtaSign = -1;

/// The algebra point the representation realizes: f = hbar, lambda = mu = 0, eta = kXiEtaSign/H.
ParameterPoint xi_point(const XiRepConfig& config);

namespace detail {
template <class C>
std::vector<BasicWeyl<C>> xi_rep_impl(const C& a, const Rational& H, const Rational& hbar) {
    using W = BasicWeyl<C>;
    const C ih = C(GaussRational(Rational(0), hbar));
    const C invH = C(GaussRational(Rational(1) / H));
    auto lower = [](int i) { return W::xi(i) * C(metric(i)); };
    W euler;
    for (int m = 0; m < 4; ++m) euler += W::xi(m) * W::d(m);
    W xi_sq;
    for (int m = 0; m < 4; ++m) xi_sq += lower(m) * W::xi(m);

    std::vector<W> img(kNumGen);
    for (const auto& [i, j] : kLorentzPairs) img[idx(F(i, j))] = (lower(i) * W::d(j) - lower(j) * W::d(i)) * ih;
    for (int i = 0; i < 4; ++i) {
        img[idx(P(i))] = W::d(i) * ih;
        img[idx(X(i))] = (lower(i) * a + lower(i) * euler * invH - xi_sq * W::d(i) * (invH * C(GaussRational(make_rational(1, 2))))) * ih;
    }
    img[idx(Gen::Id)] = (W(a) + euler * invH) * ih;
    return img;
}
}  // namespace detail

/// p_i = i hbar d_i, I = i hbar (a + xi^m d_m / H), F_ij = i hbar (xi_i d_j - xi_j d_i),
/// x_i = i hbar (a xi_i + xi_i xi^m d_m / H - xi^2 d_i / (2H)); indexed by Gen.
std::vector<WeylElement> xi_rep(const XiRepConfig& config);

/// The same operators with a left as the formal parameter Var::a.
std::vector<SymbolicWeyl> xi_rep_symbolic(const Rational& H, const Rational& hbar);

struct XiSignResult {
    int sign = 0;
    std::size_t pairs_checked = 0;
    std::size_t nonzero_pairs = 0;
    std::string first_failure;
};

struct XiVerifyReport {
    XiSignResult plus;   // eta = +1/H
    XiSignResult minus;  // eta = -1/H
    int adopted_sign = 0;
    bool pass = false;  // exactly one convention matches, and it is the frozen one
};

/// All 105 commutators with a symbolic, against the deformed table at f = hbar,
/// lambda = mu = 0 and both readings of eta.
XiVerifyReport verify_xi_rep(const XiRepConfig& config);

/// S_ij = F_ij - x_i p_j + p_i x_j for the six pairs i<j (kLorentzPairs order).
std::vector<WeylElement> spin_part(const XiRepConfig& config);

/// Coefficients of the second-order scalar operator
/// ff * sum_{i<j} F_ij F^ij + ii * I^2 + xp * (x_i p^i + p_i x^i) + xx * x_i x^i + pp * p_i p^i.
struct ScalarCoefficients {
    Rational ff, ii, xp, xx, pp;
    friend bool operator==(const ScalarCoefficients&, const ScalarCoefficients&) = default;
};

/// ff = lambda*mu - eta^2, ii = 1, xp = eta, xx = -lambda, pp = -mu.
ScalarCoefficients scalar_coefficients(const ParameterPoint& point);

/// Assembles the scalar operator from any images indexed by Gen.
template <class T, class S>
T assemble_scalar(const std::vector<T>& img, const ScalarCoefficients& k, T zero) {
    auto c = [](const Rational& r) { return S(GaussRational(r)); };
    T ff = zero, xp = zero, xx = zero, pp = zero;
    for (const auto& [i, j] : kLorentzPairs) {
        const T& f = img[idx(F(i, j))];
        ff += (f * f) * c(Rational(metric(i) * metric(j)));
    }
    for (int i = 0; i < 4; ++i) {
        const T& x = img[idx(X(i))];
        const T& p = img[idx(P(i))];
        const S g = c(Rational(metric(i)));
        xp += (x * p + p * x) * g;
        xx += (x * x) * g;
        pp += (p * p) * g;
    }
    const T& id = img[idx(Gen::Id)];
    return ff * c(k.ff) + (id * id) * c(k.ii) + xp * c(k.xp) + xx * c(k.xx) + pp * c(k.pp);
}

/// Scalar operator in the xi-representation. The point must satisfy
/// eta = kXiEtaSign / H; lambda and mu may be anything, but only lambda = mu = 0
/// gives an operator that commutes with the represented generators.
WeylElement scalar_operator(const ParameterPoint& point, const XiRepConfig& config);

/// Action of a differential operator on a polynomial in xi (an element without derivatives).
WeylElement apply(const WeylElement& op, const WeylElement& poly);

}  // namespace hlm
