#pragma once

#include "hlm/gauss_rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace hlm {

/// Formal parameters a structure constant may depend on.
///
/// q1..q14 are the real symbols behind the fourteen imaginary coefficients of
/// the general ansatz, in the order (phi, A, B, C, a, b, c, d, alpha, beta,
/// gamma, delta, h, f); each ansatz coefficient is stored as i*q_k. `a` is the
/// free parameter of the differential-operator representation.
enum class Var : std::uint8_t {
    f, lambda, mu, eta, hbar, a,
    q1, q2, q3, q4, q5, q6, q7, q8, q9, q10, q11, q12, q13, q14,
};

inline constexpr std::size_t kNumVars = 20;

std::string_view var_name(Var v);
Var parse_var(std::string_view name);
inline Var ansatz_var(int k) { return static_cast<Var>(static_cast<int>(Var::q1) + k - 1); }

using Monomial = std::array<std::uint8_t, kNumVars>;

/// Sparse polynomial in the formal parameters with Gaussian-rational coefficients.
/// Zero coefficients are never stored, so equality is structural.
class ParamPoly {
public:
    using Terms = std::map<Monomial, GaussRational>;

    ParamPoly() = default;
    ParamPoly(int c) : ParamPoly(GaussRational(c)) {}
    ParamPoly(const GaussRational& c);
    ParamPoly(const Rational& c) : ParamPoly(GaussRational(c)) {}

    static ParamPoly variable(Var v, unsigned power = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the empty monomial.
    GaussRational constant_term() const;
    std::set<Var> variables() const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    ParamPoly& operator*=(const GaussRational& c);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const GaussRational& c) { return a *= c; }
    friend ParamPoly operator*(const GaussRational& c, ParamPoly a) { return a *= c; }
    ParamPoly operator-() const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    /// Replaces each bound variable by the given polynomial.
    ParamPoly substitute(const std::map<Var, ParamPoly>& bindings) const;

    std::string to_string() const;
    static ParamPoly parse(std::string_view text);

private:
    void add_term(const Monomial& m, const GaussRational& c);

    Terms terms_;
};

inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }

}  // namespace hlm
