#ifndef MESTRE_REAL_HPP
#define MESTRE_REAL_HPP

#include <mpfr.h>

#include <string>

#include "mestre/rat.hpp"

namespace mestre {

// RAII wrapper over mpfr_t, round-to-nearest at a fixed precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static Real from_rat(const Rat& q, mpfr_prec_t prec);
    static Real from_int(const BigInt& n, mpfr_prec_t prec);
    static Real from_long(long n, mpfr_prec_t prec);
    static Real from_double(double d, mpfr_prec_t prec);

    bool zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(size_t digits = 0) const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;
    Real abs() const;
    Real log_abs() const;  // log|x|
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }

    // 1 ulp of this value at its own precision (0 for zero).
    Real ulp() const;

private:
    mpfr_t v_;
};

// Midpoint-radius arithmetic: the true value lies in [value-err, value+err].
// Radii are kept at a small fixed precision and always rounded outward.
struct ApproxReal {
    Real value;
    Real err;
    long prec_bits;

    explicit ApproxReal(mpfr_prec_t prec = 128);
    static ApproxReal exact_rat(const Rat& q, mpfr_prec_t prec);
    static ApproxReal exact_int(const BigInt& n, mpfr_prec_t prec);
    static ApproxReal zero(mpfr_prec_t prec);

    friend ApproxReal operator+(const ApproxReal& a, const ApproxReal& b);
    friend ApproxReal operator-(const ApproxReal& a, const ApproxReal& b);
    friend ApproxReal operator*(const ApproxReal& a, const ApproxReal& b);
    ApproxReal operator-() const;
    ApproxReal scale_rat(const Rat& q) const;   // multiply by an exact rational
    ApproxReal div_exact(long n) const;
    ApproxReal reciprocal() const;              // requires definitely_nonzero
    ApproxReal log_abs() const;                 // requires definitely_nonzero
    friend ApproxReal operator/(const ApproxReal& a, const ApproxReal& b) {
        return a * b.reciprocal();
    }

    bool contains_zero() const;
    bool definitely_nonzero() const { return !contains_zero(); }
    double value_d() const { return value.to_double(); }
    double err_d() const { return err.to_double(); }
    std::string to_string(size_t digits = 0) const { return value.to_string(digits); }
};

// log|x| of an exact rational, with the rounding error folded into err.
ApproxReal log_abs_rat(const Rat& q, mpfr_prec_t prec);
ApproxReal log_abs_int(const BigInt& n, mpfr_prec_t prec);

}  // namespace mestre

#endif
