#ifndef MESTRE_FUNCRING_HPP
#define MESTRE_FUNCRING_HPP

#include <stdexcept>
#include <vector>

#include "mestre/linalg.hpp"
#include "mestre/poly.hpp"
#include "mestre/ratfunc.hpp"

namespace mestre {

// Function field of a hyperelliptic-style model w^2 = q(x): elements
// c0(x) + c1(x)*w over F(x). The model transformations are derived by plain
// arithmetic in this ring, so every map identity is proved symbolically
// rather than trusted.
template <Field F>
class QuadFunc {
public:
    using RF = RatFunc<F>;

    QuadFunc() : c0_(), c1_() {}
    QuadFunc(int c) : c0_(c), c1_() {}
    QuadFunc(const F& c) : c0_(c), c1_() {}
    QuadFunc(RF c0) : c0_(std::move(c0)), c1_() {}
    QuadFunc(RF c0, RF c1, Poly<F> q)
        : c0_(std::move(c0)), c1_(std::move(c1)), q_(std::move(q)) {
        if (c1_.zero()) q_ = Poly<F>();
    }

    static QuadFunc x_gen() { return QuadFunc(RF::x()); }
    static QuadFunc w_gen(Poly<F> q) { return QuadFunc(RF(0), RF(1), std::move(q)); }

    const RF& c0() const { return c0_; }
    const RF& c1() const { return c1_; }
    bool w_free() const { return c1_.zero(); }
    bool zero() const { return c0_.zero() && c1_.zero(); }

    friend QuadFunc operator+(const QuadFunc& a, const QuadFunc& b) {
        return QuadFunc(a.c0_ + b.c0_, a.c1_ + b.c1_, merge(a, b));
    }
    friend QuadFunc operator-(const QuadFunc& a, const QuadFunc& b) {
        return QuadFunc(a.c0_ - b.c0_, a.c1_ - b.c1_, merge(a, b));
    }
    QuadFunc operator-() const { return QuadFunc(-c0_, -c1_, q_); }
    friend QuadFunc operator*(const QuadFunc& a, const QuadFunc& b) {
        Poly<F> q = merge(a, b);
        RF qq(q);
        return QuadFunc(a.c0_ * b.c0_ + a.c1_ * b.c1_ * qq, a.c0_ * b.c1_ + a.c1_ * b.c0_, q);
    }
    friend QuadFunc operator/(const QuadFunc& a, const QuadFunc& b) {
        Poly<F> q = merge(a, b);
        RF qq(q);
        RF nrm = b.c0_ * b.c0_ - b.c1_ * b.c1_ * qq;
        if (nrm.zero()) throw std::invalid_argument("QuadFunc: division by zero divisor");
        QuadFunc conj(b.c0_, -b.c1_, q);
        QuadFunc numr = a * conj;
        return QuadFunc(numr.c0_ / nrm, numr.c1_ / nrm, q);
    }
    friend bool operator==(const QuadFunc& a, const QuadFunc& b) {
        return a.c0_ == b.c0_ && a.c1_ == b.c1_;
    }

private:
    static Poly<F> merge(const QuadFunc& a, const QuadFunc& b) {
        if (a.c1_.zero()) return b.q_;
        if (b.c1_.zero()) return a.q_;
        if (!(a.q_ == b.q_)) throw std::invalid_argument("QuadFunc: mixed moduli");
        return a.q_;
    }

    RF c0_, c1_;
    Poly<F> q_;  // empty (zero poly) for w-free elements
};

// Function field of a cubic-in-y model y^3 = m(x): elements
// c0 + c1*y + c2*y^2 over F(x).
template <Field F>
class CubicFunc {
public:
    using RF = RatFunc<F>;

    CubicFunc() : c_{RF(), RF(), RF()} {}
    CubicFunc(int c) : c_{RF(c), RF(), RF()} {}
    CubicFunc(const F& c) : c_{RF(c), RF(), RF()} {}
    CubicFunc(RF c0) : c_{std::move(c0), RF(), RF()} {}
    CubicFunc(RF c0, RF c1, RF c2, Poly<F> m)
        : c_{std::move(c0), std::move(c1), std::move(c2)}, m_(std::move(m)) {
        if (c_[1].zero() && c_[2].zero()) m_ = Poly<F>();
    }

    static CubicFunc x_gen() { return CubicFunc(RF::x()); }
    static CubicFunc y_gen(Poly<F> m) {
        return CubicFunc(RF(0), RF(1), RF(0), std::move(m));
    }

    const RF& c(int i) const { return c_[i]; }
    bool y_free() const { return c_[1].zero() && c_[2].zero(); }
    bool zero() const { return c_[0].zero() && y_free(); }

    friend CubicFunc operator+(const CubicFunc& a, const CubicFunc& b) {
        Poly<F> m = merge(a, b);
        return CubicFunc(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], m);
    }
    friend CubicFunc operator-(const CubicFunc& a, const CubicFunc& b) {
        Poly<F> m = merge(a, b);
        return CubicFunc(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], m);
    }
    CubicFunc operator-() const { return CubicFunc(-c_[0], -c_[1], -c_[2], m_); }
    friend CubicFunc operator*(const CubicFunc& a, const CubicFunc& b) {
        Poly<F> m = merge(a, b);
        RF mm(m);
        // convolution with y^3 -> m, y^4 -> m*y
        RF d0 = a.c_[0] * b.c_[0] + mm * (a.c_[1] * b.c_[2] + a.c_[2] * b.c_[1]);
        RF d1 = a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0] + mm * (a.c_[2] * b.c_[2]);
        RF d2 = a.c_[0] * b.c_[2] + a.c_[1] * b.c_[1] + a.c_[2] * b.c_[0];
        return CubicFunc(std::move(d0), std::move(d1), std::move(d2), m);
    }
    friend CubicFunc operator/(const CubicFunc& a, const CubicFunc& b) {
        if (b.zero()) throw std::invalid_argument("CubicFunc: division by zero");
        if (b.y_free()) {
            Poly<F> m = a.m_;
            return CubicFunc(a.c_[0] / b.c_[0], a.c_[1] / b.c_[0], a.c_[2] / b.c_[0], m);
        }
        Poly<F> m = merge(a, b);
        RF mm(m);
        // solve (b * s) = 1 for s, then a * s
        std::vector<std::vector<RF>> sys = {
            {b.c_[0], mm * b.c_[2], mm * b.c_[1]},
            {b.c_[1], b.c_[0], mm * b.c_[2]},
            {b.c_[2], b.c_[1], b.c_[0]},
        };
        std::vector<RF> rhs = {RF(1), RF(0), RF(0)};
        std::vector<RF> s = solve_linear<RF>(sys, rhs);
        return a * CubicFunc(s[0], s[1], s[2], m);
    }
    friend bool operator==(const CubicFunc& a, const CubicFunc& b) {
        return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2];
    }

private:
    static Poly<F> merge(const CubicFunc& a, const CubicFunc& b) {
        if (a.y_free()) return b.m_;
        if (b.y_free()) return a.m_;
        if (!(a.m_ == b.m_)) throw std::invalid_argument("CubicFunc: mixed moduli");
        return a.m_;
    }

    RF c_[3];
    Poly<F> m_;
};

}  // namespace mestre

#endif
