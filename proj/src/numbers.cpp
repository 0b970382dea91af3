#include "tilinglab/numbers.hpp"

#include "tilinglab/error.hpp"

namespace tilinglab {

GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
    BigInt n = b.norm();
    if (sgn(n) == 0) throw Error(ErrorKind::DomainError, "division by zero Gaussian integer");
    GaussInt num = a * b.conj();
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
    return q;
}

QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }

QComplex operator*(const QComplex& a, const QComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

QComplex operator/(const QComplex& a, const QComplex& b) {
    Rational n = b.norm();
    if (sgn(n) == 0) throw Error(ErrorKind::DomainError, "division by zero");
    QComplex num = a * b.conj();
    return {num.re / n, num.im / n};
}

bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }

QComplex unit_power(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

std::string QComplex::str() const {
    if (sgn(im) == 0) return re.get_str();
    if (sgn(re) == 0) return im.get_str() + "i";
    std::string s = re.get_str();
    s += sgn(im) > 0 ? "+" : "-";
    Rational a = abs(im);
    return s + a.get_str() + "i";
}

bool rational_sqrt(const Rational& x, Rational& out) {
    if (sgn(x) < 0) return false;
    BigInt n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = Rational(rn, rd);
    out.canonicalize();
    return true;
}

}  // namespace tilinglab
