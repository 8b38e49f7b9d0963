#include "hlm/param_poly.hpp"

#include <cctype>
#include <vector>

namespace hlm {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "f",  "lambda", "mu", "eta", "hbar", "a",   "q1",  "q2",  "q3",  "q4",
    "q5", "q6",     "q7", "q8",  "q9",   "q10", "q11", "q12", "q13", "q14",
};

GaussRational pow_int(GaussRational base, unsigned e) {
    GaussRational r(1);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

// Recursive-descent parser over the grammar
//   expr   := [+|-] term {(+|-) term}
//   term   := factor {(*|/) factor}
//   factor := integer | 'i' | ident ['^' integer] | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ParamPoly parse() {
        ParamPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ParamPoly expr() {
        ParamPoly result;
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        ParamPoly t = term();
        result = negate ? -t : t;
        while (true) {
            if (accept('+'))
                result += term();
            else if (accept('-'))
                result -= term();
            else
                break;
        }
        return result;
    }

    ParamPoly term() {
        ParamPoly result = factor();
        while (true) {
            if (accept('*')) {
                result = result * factor();
            } else if (accept('/')) {
                ParamPoly d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                result *= GaussRational(1) / d.constant_term();
            } else {
                break;
            }
        }
        return result;
    }

    ParamPoly factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ParamPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal literals are not exact");
            mpz_class z(std::string(s_.substr(start, pos_ - start)), 10);
            return ParamPoly(GaussRational(Rational(z)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            if (name == "i") return ParamPoly(GaussRational::i());
            Var v;
            try {
                v = parse_var(name);
            } catch (const ParseError&) {
                fail("unknown symbol '" + std::string(name) + "'");
            }
            unsigned power = 1;
            if (accept('^')) {
                skip_ws();
                std::size_t ds = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (ds == pos_) fail("expected exponent");
                power = static_cast<unsigned>(std::stoul(std::string(s_.substr(ds, pos_ - ds))));
                if (power > 255) fail("exponent too large");
            }
            return ParamPoly::variable(v, power);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string monomial_string(const Monomial& m) {
    std::string out;
    for (std::size_t k = 0; k < kNumVars; ++k) {
        if (m[k] == 0) continue;
        if (!out.empty()) out += '*';
        out += kVarNames[k];
        if (m[k] > 1) out += '^' + std::to_string(m[k]);
    }
    return out;
}

std::string term_string(const Monomial& m, const GaussRational& c) {
    std::string mono = monomial_string(m);
    if (mono.empty()) return c.to_string();
    if (c.is_one()) return mono;
    if (c == GaussRational(-1)) return "-" + mono;
    if (c.is_real() || c.is_imaginary()) return c.to_string() + "*" + mono;
    return "(" + c.to_string() + ")*" + mono;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

Var parse_var(std::string_view name) {
    for (std::size_t k = 0; k < kNumVars; ++k)
        if (kVarNames[k] == name) return static_cast<Var>(k);
    throw ParseError("unknown parameter '" + std::string(name) + "'");
}

ParamPoly::ParamPoly(const GaussRational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

ParamPoly ParamPoly::variable(Var v, unsigned power) {
    Monomial m{};
    m[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
    ParamPoly p;
    p.terms_.emplace(m, GaussRational(1));
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

GaussRational ParamPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? GaussRational() : it->second;
}

std::set<Var> ParamPoly::variables() const {
    std::set<Var> out;
    for (const auto& [m, c] : terms_)
        for (std::size_t k = 0; k < kNumVars; ++k)
            if (m[k]) out.insert(static_cast<Var>(k));
    return out;
}

void ParamPoly::add_term(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (std::size_t k = 0; k < kNumVars; ++k) {
                unsigned e = unsigned(ma[k]) + mb[k];
                if (e > 255) throw std::overflow_error("monomial exponent overflow");
                m[k] = static_cast<std::uint8_t>(e);
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly& ParamPoly::operator*=(const GaussRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

ParamPoly ParamPoly::substitute(const std::map<Var, ParamPoly>& bindings) const {
    if (bindings.empty()) return *this;
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        ParamPoly term(c);
        Monomial rest{};
        for (std::size_t k = 0; k < kNumVars; ++k) {
            if (m[k] == 0) continue;
            auto it = bindings.find(static_cast<Var>(k));
            if (it == bindings.end()) {
                rest[k] = m[k];
                continue;
            }
            const ParamPoly& value = it->second;
            if (value.is_constant()) {
                term *= pow_int(value.constant_term(), m[k]);
            } else {
                for (unsigned e = 0; e < m[k]; ++e) term = term * value;
            }
        }
        ParamPoly restp;
        restp.terms_.emplace(rest, GaussRational(1));
        out += term * restp;
    }
    return out;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string t = term_string(m, c);
        if (!out.empty() && t[0] != '-') out += '+';
        out += t;
    }
    return out;
}

ParamPoly ParamPoly::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace hlm
