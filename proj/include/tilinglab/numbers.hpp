#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace tilinglab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Gaussian integer a + bi.
struct GaussInt {
    BigInt re, im;

    GaussInt() : re(0), im(0) {}
    GaussInt(long r, long i = 0) : re(r), im(i) {}
    GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    BigInt norm() const { return re * re + im * im; }
    GaussInt conj() const { return {re, -im}; }
};

GaussInt operator+(const GaussInt& a, const GaussInt& b);
GaussInt operator-(const GaussInt& a, const GaussInt& b);
GaussInt operator*(const GaussInt& a, const GaussInt& b);
bool operator==(const GaussInt& a, const GaussInt& b);

// a / b where b divides a exactly in Z[i].
GaussInt exact_div(const GaussInt& a, const GaussInt& b);

// Element of Q(i).
struct QComplex {
    Rational re, im;

    QComplex() : re(0), im(0) {}
    QComplex(long r, long i = 0) : re(r), im(i) {}
    QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    Rational norm() const { return re * re + im * im; }
    QComplex conj() const { return {re, -im}; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string str() const;
};

QComplex operator+(const QComplex& a, const QComplex& b);
QComplex operator-(const QComplex& a, const QComplex& b);
QComplex operator-(const QComplex& a);
QComplex operator*(const QComplex& a, const QComplex& b);
QComplex operator/(const QComplex& a, const QComplex& b);
bool operator==(const QComplex& a, const QComplex& b);

// i^k for k mod 4.
QComplex unit_power(int k);

// Exact square root of a nonnegative rational if it is a perfect square.
bool rational_sqrt(const Rational& x, Rational& out);

}  // namespace tilinglab
