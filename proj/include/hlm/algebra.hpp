#pragma once

#include "hlm/generators.hpp"
#include "hlm/structure_constants.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hlm {

enum class Family { canonical, ansatz, hlm, lm };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

/// Raised for overrides or substitutions that name parameters a family does not have,
/// or leave parameters unbound.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A member of the deformed family, in inverse parameters:
/// lambda = 1/L^2, mu = 1/M^2, eta = 1/H. The limits L, M, H -> infinity are
/// lambda = mu = eta = 0.
struct ParameterPoint {
    Rational f{1};
    Rational lambda{0};
    Rational mu{0};
    Rational eta{0};
    Rational hbar{1};

    /// Throws ParameterError when f == 0.
    void validate() const;
    std::map<Var, GaussRational> bindings() const;
    std::string to_string() const;

    friend bool operator==(const ParameterPoint& a, const ParameterPoint& b) {
        return a.f == b.f && a.lambda == b.lambda && a.mu == b.mu && a.eta == b.eta && a.hbar == b.hbar;
    }
};

/// Formal parameters that appear in a family's brackets.
std::set<Var> family_parameters(Family family);

/// Full bracket table of a family with symbolic coefficients. Overrides bind
/// family parameters to polynomials (constants or other parameters).
StructureConstants build_family(Family family, const std::map<Var, ParamPoly>& overrides = {});

/// Partial substitution; the result stays symbolic.
StructureConstants substitute_symbols(const StructureConstants& sc, const std::map<Var, ParamPoly>& bindings);

/// Evaluates every coefficient. All formal parameters present must be bound.
NumericStructureConstants substitute(const StructureConstants& sc, const std::map<Var, GaussRational>& bindings);

/// Binds f, lambda, mu, eta, hbar from the point plus optional ansatz parameters.
NumericStructureConstants substitute(const StructureConstants& sc, const ParameterPoint& point,
                                     const std::map<Var, GaussRational>& ansatz_bindings = {});

/// Coefficient vector with a single entry.
std::vector<ParamPoly> unit_vector(Gen g, const ParamPoly& c);

}  // namespace hlm
