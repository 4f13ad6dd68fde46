#ifndef MESTRE_EC_HPP
#define MESTRE_EC_HPP

#include <stdexcept>
#include <vector>

#include "mestre/rat.hpp"
#include "mestre/ratfunc.hpp"

namespace mestre {

// y^2 = x^3 + A x + B over a field F. The one group-law implementation below
// serves Q, Q(t) and Q(t)(sqrt f) alike; everything downstream leans on that.
template <Field F>
struct ShortW {
    F A, B;

    ShortW(F a, F b) : A(std::move(a)), B(std::move(b)) {
        if (is_zero(discriminant_scaled()))
            throw std::invalid_argument("ShortW: singular curve (4A^3+27B^2 = 0)");
    }

    F discriminant_scaled() const {  // 4A^3 + 27B^2
        return F(F(4) * A * A * A + F(27) * B * B);
    }
    F discriminant() const { return F(F(-16) * discriminant_scaled()); }

    F rhs(const F& x) const { return F(x * x * x + A * x + B); }

    friend bool operator==(const ShortW& a, const ShortW& b) {
        return a.A == b.A && a.B == b.B;
    }
};

template <Field F>
struct ECPoint {
    bool infinity = true;
    F x{0}, y{0};

    ECPoint() = default;
    ECPoint(F px, F py) : infinity(false), x(std::move(px)), y(std::move(py)) {}
    static ECPoint inf() { return ECPoint(); }

    friend bool operator==(const ECPoint& p, const ECPoint& q) {
        if (p.infinity || q.infinity) return p.infinity == q.infinity;
        return p.x == q.x && p.y == q.y;
    }
};

template <Field F>
bool on_curve(const ShortW<F>& e, const ECPoint<F>& p) {
    if (p.infinity) return true;
    return F(p.y * p.y) == e.rhs(p.x);
}

template <Field F>
F j_invariant(const ShortW<F>& e) {
    F a3 = F(F(4) * e.A * e.A * e.A);
    return F(F(1728) * a3 / e.discriminant_scaled());
}

template <Field F>
ECPoint<F> neg(const ECPoint<F>& p) {
    if (p.infinity) return p;
    return ECPoint<F>(p.x, F(-p.y));
}

template <Field F>
ECPoint<F> add(const ShortW<F>& e, const ECPoint<F>& p, const ECPoint<F>& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    F s(0);
    if (p.x == q.x) {
        if (p.y == F(-q.y)) return ECPoint<F>::inf();
        // tangent
        s = F((F(3) * p.x * p.x + e.A) / (F(2) * p.y));
    } else {
        s = F((q.y - p.y) / (q.x - p.x));
    }
    F x3 = F(s * s - p.x - q.x);
    F y3 = F(s * (p.x - x3) - p.y);
    return ECPoint<F>(x3, y3);
}

template <Field F>
ECPoint<F> sub(const ShortW<F>& e, const ECPoint<F>& p, const ECPoint<F>& q) {
    return add(e, p, neg(q));
}

template <Field F>
ECPoint<F> scalar_mul(const ShortW<F>& e, long n, ECPoint<F> p) {
    if (n == 0 || p.infinity) return ECPoint<F>::inf();
    if (n < 0) {
        n = -n;
        p = neg(p);
    }
    ECPoint<F> r = ECPoint<F>::inf();
    while (n) {
        if (n & 1) r = add(e, r, p);
        if (n >>= 1) p = add(e, p, p);
    }
    return r;
}

template <Field F>
ShortW<F> quadratic_twist(const ShortW<F>& e, const F& d) {
    if (is_zero(d)) throw std::invalid_argument("quadratic_twist: d must be nonzero");
    return ShortW<F>(F(e.A * d * d), F(e.B * d * d * d));
}

// Q-isomorphism test by twist-class comparison: generic j needs u^2 = B'A/(BA')
// to be a rational square consistent with A'/A and B'/B; j=1728 compares A in
// (Q*)^4 classes, j=0 compares B in (Q*)^6 classes.
bool isomorphic_over_Q(const ShortW<Rat>& e1, const ShortW<Rat>& e2);

}  // namespace mestre

#endif
