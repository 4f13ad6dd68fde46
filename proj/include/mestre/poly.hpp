#ifndef MESTRE_POLY_HPP
#define MESTRE_POLY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mestre/rat.hpp"

namespace mestre {

// Dense univariate polynomials over a field F. coeffs[i] is the coefficient
// of x^i; the representation is normalized so the leading coefficient is
// nonzero (empty vector = zero polynomial, degree -1).
template <Field F>
class Poly {
public:
    Poly() = default;
    Poly(const F& c) { coeffs_.push_back(c); normalize(); }
    Poly(int c) : Poly(F(c)) {}
    explicit Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }
    static Poly monomial(const F& c, int deg) {
        std::vector<F> v(deg + 1, F(0));
        v[deg] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool zero() const { return coeffs_.empty(); }
    const std::vector<F>& coeffs() const { return coeffs_; }

    const F& operator[](int i) const {
        static const F zero_{0};
        if (i < 0 || i > degree()) return zero_;
        return coeffs_[i];
    }

    const F& lc() const {
        if (zero()) throw std::invalid_argument("lc of zero polynomial");
        return coeffs_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r[i] = a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) r[i] = F(r[i] + b.coeffs_[i]);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<F> r;
        r.reserve(coeffs_.size());
        for (const F& c : coeffs_) r.push_back(F(-c));
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return Poly();
        std::vector<F> r(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] = F(r[i + j] + a.coeffs_[i] * b.coeffs_[j]);
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& c, const Poly& p) {
        if (is_zero(c)) return Poly();
        std::vector<F> r;
        r.reserve(p.coeffs_.size());
        for (const F& a : p.coeffs_) r.push_back(F(c * a));
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& p, const F& c) { return c * p; }
    friend Poly operator/(const Poly& p, const F& c) { return F(F(1) / c) * p; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; F is a field so this always succeeds for b != 0.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.zero()) throw std::invalid_argument("polynomial division by zero");
        Poly q, r = a;
        std::vector<F> qc(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, F(0));
        while (!r.zero() && r.degree() >= b.degree()) {
            F c = F(r.lc() / b.lc());
            int d = r.degree() - b.degree();
            qc[d] = c;
            r = r - Poly::monomial(c, d) * b;
        }
        return {Poly(std::move(qc)), r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly derivative() const {
        if (degree() < 1) return Poly();
        std::vector<F> r(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = F(F(int(i)) * coeffs_[i]);
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (zero()) return *this;
        return *this / lc();
    }

    // Evaluate at a point of any commutative F-algebra G (G must be
    // constructible from F); used both for plain evaluation and for
    // composition with rational functions.
    template <typename G>
    G eval(const G& x) const {
        G r(F(0));
        for (int i = degree(); i >= 0; --i) r = G(r * x + G(coeffs_[i]));
        return r;
    }

    Poly compose(const Poly& inner) const { return eval<Poly>(inner); }

    Poly shift_var(const F& r) const {  // p(x + r)
        return compose(Poly(std::vector<F>{r, F(1)}));
    }

    Poly pow(unsigned n) const {
        Poly r(F(1)), b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<F> coeffs_;
};

template <Field F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.zero()) {
        Poly<F> r = a % b;
        a = b;
        b = r;
    }
    if (a.zero()) return a;
    return a.monic();
}

// Over Q the naive Euclidean chain suffers catastrophic coefficient growth;
// this specialization clears denominators and runs a primitive PRS on
// integer polynomials instead.
template <>
PolyQ poly_gcd<Rat>(PolyQ a, PolyQ b);

// Resultant via the Euclidean remainder sequence.
template <Field F>
F resultant(const Poly<F>& a, const Poly<F>& b) {
    if (a.zero() || b.zero()) return F(0);
    Poly<F> f = a, g = b;
    F acc(1);
    bool negate = false;
    while (g.degree() > 0) {
        Poly<F> r = f % g;
        if (r.zero()) return F(0);
        // res(f,g) = (-1)^{deg f deg g} lc(g)^{deg f - deg r} res(g, r)
        if ((f.degree() & 1) && (g.degree() & 1)) negate = !negate;
        F l = g.lc();
        int e = f.degree() - r.degree();
        F lp(1);
        for (int i = 0; i < e; ++i) lp = F(lp * l);
        acc = F(acc * lp);
        f = g;
        g = r;
    }
    // deg g == 0: res(f, g) = lc(g)^{deg f}
    F l = g.lc(), lp(1);
    for (int i = 0; i < f.degree(); ++i) lp = F(lp * l);
    acc = F(acc * lp);
    return negate ? F(-acc) : acc;
}

// disc(p) = (-1)^{d(d-1)/2} res(p, p') / lc(p)
template <Field F>
F poly_discriminant(const Poly<F>& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("poly_discriminant: degree must be >= 1");
    F r = resultant(p, p.derivative());
    F d = F(r / p.lc());
    int dd = p.degree();
    if (((dd * (dd - 1)) / 2) % 2) d = F(-d);
    return d;
}

template <Field F>
struct SquarefreeFactor {
    Poly<F> factor;     // monic, squarefree
    int multiplicity;
};

template <Field F>
struct SquarefreeDecomposition {
    F content;  // p = content * prod factor^multiplicity
    std::vector<SquarefreeFactor<F>> factors;

    Poly<F> reassemble() const {
        Poly<F> r{content};
        for (const auto& f : factors) r = r * f.factor.pow(f.multiplicity);
        return r;
    }
};

// Yun's algorithm (characteristic 0).
template <Field F>
SquarefreeDecomposition<F> squarefree_decomposition(const Poly<F>& p) {
    if (p.zero())
        throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    SquarefreeDecomposition<F> out;
    out.content = p.lc();
    Poly<F> f = p.monic();
    if (f.degree() == 0) return out;
    Poly<F> fp = f.derivative();
    Poly<F> a = poly_gcd(f, fp);
    Poly<F> b = f / a;
    Poly<F> c = fp / a;
    int i = 1;
    while (b.degree() > 0) {
        Poly<F> d = c - b.derivative();
        Poly<F> g = poly_gcd(b, d);
        if (g.degree() > 0) out.factors.push_back({g, i});
        b = b / g;
        c = d / g;
        ++i;
    }
    return out;
}

// Product of the odd-multiplicity factors, with the content folded in:
// p = odd_part * square_part^2 exactly. This is what genus computations and
// n-th power tests for twists actually consume.
template <Field F>
std::pair<Poly<F>, Poly<F>> odd_square_split(const Poly<F>& p) {
    auto dec = squarefree_decomposition(p);
    Poly<F> odd{dec.content}, sq{F(1)};
    for (const auto& f : dec.factors) {
        if (f.multiplicity % 2) odd = odd * f.factor;
        sq = sq * f.factor.pow(f.multiplicity / 2);
    }
    return {odd, sq};
}

template <Field F>
std::string poly_to_string(const Poly<F>& p, const std::string& var,
                           std::string (*coeff_str)(const F&)) {
    if (p.zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        if (is_zero(p[i])) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeff_str(p[i]) + ")";
        if (i >= 1) s += "*" + var;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

using PolyQ = Poly<Rat>;

// n-th roots in Q[x]: q with q^n = p, if any. Even n picks the positive
// leading coefficient. Candidate assembled from squarefree multiplicities,
// then verified by expansion.
std::optional<PolyQ> nth_root_poly(const PolyQ& p, unsigned n);

}  // namespace mestre

#endif
