#include "tilinglab/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace tilinglab {

namespace {

int joint(const BigFloat& a, const BigFloat& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

std::string BigFloat::str(int digits) const {
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return buf.data();
}

BigFloat BigFloat::pi(int bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log2(int bits) {
    BigFloat r(bits);
    mpfr_const_log2(r.get(), MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.bits());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_cos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
    BigFloat r(std::max(x.bits(), y.bits()));
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

}  // namespace tilinglab
