#pragma once

#include "mvlab/rational.hpp"

namespace mvlab {

// a + b i with exact rational parts.
struct GaussianRat {
    BigRat re;
    BigRat im;

    GaussianRat() = default;
    GaussianRat(BigRat real, BigRat imag = 0) : re(std::move(real)), im(std::move(imag)) {}

    static GaussianRat i() { return {BigRat(0), BigRat(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRat conj() const { return {re, -im}; }

    GaussianRat& operator+=(const GaussianRat& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRat& operator-=(const GaussianRat& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRat& operator*=(const GaussianRat& o)
    {
        BigRat r = re * o.re - im * o.im;
        BigRat s = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(s);
        return *this;
    }
    GaussianRat& operator*=(const BigRat& k)
    {
        re *= k;
        im *= k;
        return *this;
    }

    friend GaussianRat operator+(GaussianRat a, const GaussianRat& b) { return a += b; }
    friend GaussianRat operator-(GaussianRat a, const GaussianRat& b) { return a -= b; }
    friend GaussianRat operator*(GaussianRat a, const GaussianRat& b) { return a *= b; }
    friend GaussianRat operator*(GaussianRat a, const BigRat& k) { return a *= k; }
    friend GaussianRat operator*(const BigRat& k, GaussianRat a) { return a *= k; }
    GaussianRat operator-() const { return {-re, -im}; }

    friend bool operator==(const GaussianRat& a, const GaussianRat& b) { return a.re == b.re && a.im == b.im; }
};

// (i * num/den)^k, exact.
GaussianRat imaginary_power(const BigRat& scale, unsigned long k);

} // namespace mvlab
