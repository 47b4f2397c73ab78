#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "jetspace/errors.hpp"

namespace jetspace {

using Rational = mpq_class;

// Accepts "p" or "p/q" with optional sign; result is canonical.
Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& q);

// Element of Q(i), always in canonical form (both parts canonical mpq).
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(int n) : re(n) {}  // NOLINT: implicit for literals
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational imaginary_unit() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_imaginary() const { return re == 0 && im != 0; }

    GaussianRational conj() const { return GaussianRational(re, -im); }
    Rational norm() const { return re * re + im * im; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational x, const GaussianRational& y) { return x += y; }
    friend GaussianRational operator-(GaussianRational x, const GaussianRational& y) { return x -= y; }
    friend GaussianRational operator*(GaussianRational x, const GaussianRational& y) { return x *= y; }
    friend GaussianRational operator/(GaussianRational x, const GaussianRational& y) { return x /= y; }
    friend GaussianRational operator-(const GaussianRational& x) { return GaussianRational(-x.re, -x.im); }

    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const GaussianRational& x, const GaussianRational& y) { return !(x == y); }
};

GaussianRational gq_add(const GaussianRational& x, const GaussianRational& y);
GaussianRational gq_mul(const GaussianRational& x, const GaussianRational& y);
GaussianRational gq_inv(const GaussianRational& x);
GaussianRational gq_pow(GaussianRational base, unsigned long exp);

// "0", "1", "-3/2", "i", "-i", "2*i", "-1/2*i", "1+i", "1-2*i".
std::string gq_to_string(const GaussianRational& x);
// Parses any constant expression in the polynomial grammar, e.g. "1/2+i/3".
GaussianRational gq_from_string(const std::string& text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace jetspace
