#ifndef MESTRE_RATFUNC_HPP
#define MESTRE_RATFUNC_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "mestre/poly.hpp"
#include "mestre/rat.hpp"

namespace mestre {

// Rational functions num/den over F, kept in the canonical form
// gcd(num,den)=1 with den monic (constants migrate to the numerator), so
// operator== is exact equality in F(x).
template <Field F>
class RatFunc {
public:
    RatFunc() : num_(), den_(F(1)) {}
    RatFunc(const F& c) : num_(c), den_(F(1)) {}
    RatFunc(int c) : num_(F(c)), den_(F(1)) {}
    RatFunc(Poly<F> n) : num_(std::move(n)), den_(F(1)) {}
    RatFunc(Poly<F> n, Poly<F> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static RatFunc x() { return RatFunc(Poly<F>::x()); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool zero() const { return num_.zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.zero()) throw std::invalid_argument("RatFunc division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const {
        // (n/d)' = (n'd - nd')/d^2
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Evaluation at a field point; nullopt when the denominator vanishes.
    std::optional<F> eval_at(const F& x) const {
        F d = den_.template eval<F>(x);
        if (is_zero(d)) return std::nullopt;
        return F(num_.template eval<F>(x) / d);
    }

    // Evaluation in an F-algebra G (e.g. a quotient ring); requires a
    // division in G, throws if the denominator is not invertible there.
    template <typename G>
    G eval_ring(const G& x) const {
        G n = num_.template eval<G>(x);
        G d = den_.template eval<G>(x);
        return G(n / d);
    }

private:
    void reduce() {
        if (den_.zero()) throw std::invalid_argument("RatFunc with zero denominator");
        if (num_.zero()) {
            den_ = Poly<F>(F(1));
            return;
        }
        Poly<F> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        F l = den_.lc();
        if (!(l == F(1))) {
            num_ = num_ / l;
            den_ = den_ / l;
        }
    }

    Poly<F> num_, den_;
};

using RatFuncQ = RatFunc<Rat>;

std::string ratfunc_to_string(const RatFuncQ& f, const std::string& var = "t");

// h = c * s^n with c in Q*? Decided purely from squarefree multiplicities of
// numerator and denominator; the constant is absorbed.
bool is_nth_power_up_to_constant(const RatFuncQ& h, unsigned n);

// Exact n-th root in Q(t) when it exists (including the rational constant).
std::optional<RatFuncQ> nth_root_ratfunc(const RatFuncQ& h, unsigned n);

}  // namespace mestre

#endif
