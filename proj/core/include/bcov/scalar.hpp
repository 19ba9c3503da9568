#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "bcov/errors.hpp"

namespace bcov {

using Rational = boost::multiprecision::cpp_rational;

// Element of the Gaussian-rational field Q(i). All arithmetic in the pipeline
// is exact; equality is map equality on (re, im).
struct Scalar {
    Rational re{0};
    Rational im{0};

    Scalar() = default;
    Scalar(long n) : re(n) {}
    Scalar(Rational r) : re(std::move(r)) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return {re, -im}; }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(Scalar a) { return {-a.re, -a.im}; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

// Canonical string form: "p/q" for real values, "p/q+r/s*i" / "p/q-r/s*i"
// otherwise, always in lowest terms with positive denominators.
std::string to_string(const Rational& r);
std::string to_string(const Scalar& s);

// Accepts the canonical forms plus integer shorthand ("3", "-2", "3*i", "i").
Scalar parse_scalar(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace bcov
