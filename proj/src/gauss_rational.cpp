#include "hlm/gauss_rational.hpp"

#include "hlm/param_poly.hpp"

#include <cctype>

namespace hlm {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    std::size_t pos = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) pos = 1;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t k = pos; k < s.size(); ++k) {
        char c = s[k];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digit_after : digit_before) = true;
        } else if (c == '/' && !seen_slash) {
            seen_slash = true;
        } else {
            throw ParseError("malformed rational '" + s + "'");
        }
    }
    if (!digit_before || (seen_slash && !digit_after))
        throw ParseError("malformed rational '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    mpz_class n = sqrt(q.get_num());
    mpz_class d = sqrt(q.get_den());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::optional<GaussRational> gauss_sqrt(const Rational& q) {
    if (sgn(q) >= 0) {
        if (auto r = rational_sqrt(q)) return GaussRational(*r);
        return std::nullopt;
    }
    if (auto r = rational_sqrt(-q)) return GaussRational(Rational(0), *r);
    return std::nullopt;
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    Rational n = o.norm();
    GaussRational q = *this * o.conj();
    re_ = q.re_ / n;
    im_ = q.im_ / n;
    return *this;
}

std::string GaussRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    if (imag[0] == '-') return re_.get_str() + imag;
    return re_.get_str() + "+" + imag;
}

GaussRational GaussRational::parse(std::string_view text) {
    ParamPoly p = ParamPoly::parse(text);
    if (!p.is_constant()) throw ParseError("expected a number, got '" + std::string(text) + "'");
    return p.constant_term();
}

}  // namespace hlm
