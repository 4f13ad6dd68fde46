#ifndef MESTRE_QUADEXT_HPP
#define MESTRE_QUADEXT_HPP

#include <stdexcept>

#include "mestre/rat.hpp"

namespace mestre {

// Elements a + b*sqrt(d) of a quadratic extension F(sqrt(d)). The radicand
// travels with each element; mixing radicands in one operation is a logic
// error and throws. d is assumed not to be a square in F within a given
// arithmetic context (nothing here depends on it, but inverses of nonzero
// elements would otherwise not exist).
template <Field F>
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(int c) : a_(c), b_(0), d_(0) {}
    QuadExt(const F& c) : a_(c), b_(0), d_(0) {}
    QuadExt(F a, F b, F d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (is_zero(b_)) d_ = F(0);
    }

    static QuadExt sqrt_d(const F& d) { return QuadExt(F(0), F(1), d); }

    const F& a() const { return a_; }
    const F& b() const { return b_; }
    const F& radicand() const { return d_; }
    bool rational() const { return is_zero(b_); }  // lies in the base field
    bool pure() const { return is_zero(a_); }      // pure multiple of sqrt(d)

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        F d = merge(x, y);
        return QuadExt(F(x.a_ + y.a_), F(x.b_ + y.b_), d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        F d = merge(x, y);
        return QuadExt(F(x.a_ - y.a_), F(x.b_ - y.b_), d);
    }
    QuadExt operator-() const { return QuadExt(F(-a_), F(-b_), d_); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        F d = merge(x, y);
        return QuadExt(F(x.a_ * y.a_ + x.b_ * y.b_ * d),
                       F(x.a_ * y.b_ + x.b_ * y.a_), d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        F d = merge(x, y);
        F n = F(y.a_ * y.a_ - y.b_ * y.b_ * d);  // norm of y
        if (is_zero(n)) throw std::invalid_argument("QuadExt division by zero");
        QuadExt conj(y.a_, F(-y.b_), d);
        QuadExt num = x * conj;
        return QuadExt(F(num.a_ / n), F(num.b_ / n), d);
    }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (!(x.a_ == y.a_) || !(x.b_ == y.b_)) return false;
        if (is_zero(x.b_)) return true;
        return x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    QuadExt galois_conjugate() const { return QuadExt(a_, F(-b_), d_); }

private:
    static F merge(const QuadExt& x, const QuadExt& y) {
        if (is_zero(x.b_)) return y.d_;
        if (is_zero(y.b_)) return x.d_;
        if (!(x.d_ == y.d_))
            throw std::invalid_argument("QuadExt: mixed radicands");
        return x.d_;
    }

    F a_, b_, d_;
};

}  // namespace mestre

#endif
