#pragma once

#include <mpfr.h>

#include <gmpxx.h>
#include <string>

namespace tilinglab {

// Thin RAII wrapper over an MPFR value. Binary results take the larger of the
// operand precisions; everything rounds to nearest.
class BigFloat {
public:
    explicit BigFloat(int bits = 128) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    BigFloat(double d, int bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, d, MPFR_RNDN); }
    BigFloat(long n, int bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, n, MPFR_RNDN); }
    BigFloat(const mpz_class& z, int bits) { mpfr_init2(v_, bits); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    BigFloat(const mpq_class& q, int bits) { mpfr_init2(v_, bits); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    int bits() const { return static_cast<int>(mpfr_get_prec(v_)); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 30) const;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    static BigFloat pi(int bits);
    static BigFloat log2(int bits);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat abs(const BigFloat& x);

}  // namespace tilinglab
