#include "mestre/real.hpp"

#include <algorithm>
#include <stdexcept>

namespace mestre {

namespace {
constexpr mpfr_prec_t kRadPrec = 64;
}

Real::Real(mpfr_prec_t prec) { mpfr_init2(v_, std::max<mpfr_prec_t>(prec, 16)); mpfr_set_zero(v_, 1); }
Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}
Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}
Real::~Real() { mpfr_clear(v_); }

Real Real::from_rat(const Rat& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}
Real Real::from_int(const BigInt& n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
    return r;
}
Real Real::from_long(long n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
}
Real Real::from_double(double d, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

std::string Real::to_string(size_t digits) const {
    if (zero()) return "0";
    if (digits == 0) digits = static_cast<size_t>(prec() * 0.30103) + 2;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string dig = neg ? mant.substr(1) : mant;
    std::string out = neg ? "-" : "";
    if (e <= 0) {
        out += "0." + std::string(-e, '0') + dig;
    } else if (static_cast<size_t>(e) >= dig.size()) {
        out += dig + std::string(e - dig.size(), '0');
    } else {
        out += dig.substr(0, e) + "." + dig.substr(e);
    }
    // trim trailing zeros after a decimal point
    if (out.find('.') != std::string::npos) {
        size_t last = out.find_last_not_of('0');
        if (out[last] == '.') --last;
        out.erase(last + 1);
    }
    return out;
}

namespace {
Real binop(const Real& a, const Real& b,
           int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    Real r(std::max(a.prec(), b.prec()));
    op(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
}  // namespace

Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }

Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}
Real Real::abs() const {
    Real r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}
Real Real::log_abs() const {
    if (zero()) throw std::domain_error("log_abs of zero");
    Real t = abs();
    Real r(prec());
    mpfr_log(r.raw(), t.raw(), MPFR_RNDN);
    return r;
}
Real Real::ulp() const {
    Real r(kRadPrec);
    if (zero()) return r;
    mpfr_set_ui_2exp(r.raw(), 1, mpfr_get_exp(v_) - prec(), MPFR_RNDU);
    return r;
}

// ---- ApproxReal ----

namespace {
Real rad_add(const Real& a, const Real& b) {
    Real r(kRadPrec);
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}
Real rad_mul(const Real& a, const Real& b) {
    Real r(kRadPrec);
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}
}  // namespace

ApproxReal::ApproxReal(mpfr_prec_t prec)
    : value(prec), err(kRadPrec), prec_bits(prec) {}

ApproxReal ApproxReal::exact_rat(const Rat& q, mpfr_prec_t prec) {
    ApproxReal r(prec);
    r.value = Real::from_rat(q, prec);
    r.err = r.value.ulp();
    return r;
}
ApproxReal ApproxReal::exact_int(const BigInt& n, mpfr_prec_t prec) {
    ApproxReal r(prec);
    r.value = Real::from_int(n, prec);
    r.err = r.value.ulp();  // exact if it fits, ulp covers truncation otherwise
    return r;
}
ApproxReal ApproxReal::zero(mpfr_prec_t prec) { return ApproxReal(prec); }

ApproxReal operator+(const ApproxReal& a, const ApproxReal& b) {
    ApproxReal r(std::max(a.value.prec(), b.value.prec()));
    r.value = a.value + b.value;
    r.err = rad_add(rad_add(a.err, b.err), r.value.ulp());
    return r;
}
ApproxReal operator-(const ApproxReal& a, const ApproxReal& b) {
    ApproxReal r(std::max(a.value.prec(), b.value.prec()));
    r.value = a.value - b.value;
    r.err = rad_add(rad_add(a.err, b.err), r.value.ulp());
    return r;
}
ApproxReal operator*(const ApproxReal& a, const ApproxReal& b) {
    ApproxReal r(std::max(a.value.prec(), b.value.prec()));
    r.value = a.value * b.value;
    Real t = rad_add(rad_add(rad_mul(a.value.abs(), b.err), rad_mul(b.value.abs(), a.err)),
                     rad_mul(a.err, b.err));
    r.err = rad_add(t, r.value.ulp());
    return r;
}
ApproxReal ApproxReal::operator-() const {
    ApproxReal r(value.prec());
    r.value = -value;
    r.err = err;
    return r;
}
ApproxReal ApproxReal::scale_rat(const Rat& q) const {
    ApproxReal r(value.prec());
    Real f = Real::from_rat(q, value.prec());
    r.value = value * f;
    r.err = rad_add(rad_add(rad_mul(err, f.abs()), value.ulp()), r.value.ulp());
    return r;
}
ApproxReal ApproxReal::div_exact(long n) const {
    return scale_rat(Rat(1, n));
}

bool ApproxReal::contains_zero() const {
    Real a = value.abs();
    return !(err < a);
}

ApproxReal ApproxReal::reciprocal() const {
    if (contains_zero()) throw std::domain_error("ApproxReal::reciprocal near zero");
    ApproxReal r(value.prec());
    r.value = Real::from_long(1, value.prec()) / value;
    // |1/x - 1/m| <= r/(|m|(|m|-r))
    Real am = value.abs();
    Real lo(kRadPrec);
    mpfr_sub(lo.raw(), am.raw(), err.raw(), MPFR_RNDD);
    Real denom(kRadPrec);
    mpfr_mul(denom.raw(), am.raw(), lo.raw(), MPFR_RNDD);
    Real bound(kRadPrec);
    mpfr_div(bound.raw(), err.raw(), denom.raw(), MPFR_RNDU);
    r.err = rad_add(bound, r.value.ulp());
    return r;
}

ApproxReal ApproxReal::log_abs() const {
    if (contains_zero()) throw std::domain_error("ApproxReal::log_abs near zero");
    ApproxReal r(value.prec());
    r.value = value.log_abs();
    // |log|x| - log|m|| <= r/(|m|-r)
    Real am = value.abs();
    Real lo(kRadPrec);
    mpfr_sub(lo.raw(), am.raw(), err.raw(), MPFR_RNDD);
    Real bound(kRadPrec);
    mpfr_div(bound.raw(), err.raw(), lo.raw(), MPFR_RNDU);
    r.err = rad_add(bound, r.value.ulp());
    return r;
}

ApproxReal log_abs_rat(const Rat& q, mpfr_prec_t prec) {
    if (q == 0) throw std::domain_error("log_abs_rat of zero");
    ApproxReal r(prec);
    // split into numerator/denominator logs so huge values stay exact in mpz
    ApproxReal ln = log_abs_int(num(q), prec);
    ApproxReal ld = log_abs_int(den(q), prec);
    return ln - ld;
}

ApproxReal log_abs_int(const BigInt& n, mpfr_prec_t prec) {
    if (n == 0) throw std::domain_error("log_abs_int of zero");
    ApproxReal r(prec);
    Real x = Real::from_int(abs(n), prec + 8);
    r.value = x.log_abs();
    // |log(x(1+eps)) - log x| <= 2 eps for |eps| <= 1/2; x carries <= 1 ulp
    Real rel(64);
    mpfr_set_ui_2exp(rel.raw(), 4, -(prec + 8), MPFR_RNDU);
    r.err = rad_add(rel, r.value.ulp());
    return r;
}

}  // namespace mestre
