#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hlm {

using Rational = mpq_class;

/// Raised when a textual number or expression does not parse.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);

/// Accepts "p", "-p", "p/q", "-p/q" (optionally with a leading '+'). No decimals.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Complex number with exact rational real and imaginary parts.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(int n) : re_(n), im_(0) {}
    GaussRational(long n) : re_(n), im_(0) {}
    GaussRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_imaginary() const { return sgn(re_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    GaussRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    /// "p/q", "r/s*i", "p/q+r/s*i", "p/q-i", ...
    std::string to_string() const;
    static GaussRational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
        return os << z.to_string();
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline bool is_zero(const GaussRational& z) { return z.is_zero(); }

/// Square root inside Q(i) of a rational: sqrt(r) or i*sqrt(-r) when that is exact.
std::optional<GaussRational> gauss_sqrt(const Rational& q);

}  // namespace hlm
