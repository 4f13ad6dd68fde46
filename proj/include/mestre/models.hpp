#ifndef MESTRE_MODELS_HPP
#define MESTRE_MODELS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mestre/ec.hpp"
#include "mestre/funcring.hpp"
#include "mestre/poly.hpp"
#include "mestre/ratfunc.hpp"

namespace mestre {

// n-th roots inside the coefficient field; specialized for Q and Q(t).
template <Field F>
struct FieldRoots;

template <>
struct FieldRoots<Rat> {
    static std::optional<Rat> nth_root(const Rat& v, unsigned n) { return rat_nth_root(v, n); }
};
template <>
struct FieldRoots<RatFuncQ> {
    static std::optional<RatFuncQ> nth_root(const RatFuncQ& v, unsigned n) {
        return nth_root_ratfunc(v, n);
    }
};

struct ModelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MapEvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coordinate map (x,y) -> (X,Y) on a plane model, with each target
// coordinate polynomial in y of degree <= 2 and rational in x:
//   X = sum_i cx[i](x) y^i,  Y = sum_i cy[i](x) y^i.
// Stored as formulas (not closures) so maps serialize into reports.
template <Field F>
struct PointFormula {
    std::vector<RatFunc<F>> cx, cy;

    ECPoint<F> eval(const F& x, const F& y) const {
        F X(0), Y(0), yp(1);
        for (size_t i = 0; i < std::max(cx.size(), cy.size()); ++i) {
            if (i < cx.size() && !cx[i].zero()) {
                auto v = cx[i].eval_at(x);
                if (!v) throw MapEvaluationError("point map: denominator vanishes");
                X = F(X + *v * yp);
            }
            if (i < cy.size() && !cy[i].zero()) {
                auto v = cy[i].eval_at(x);
                if (!v) throw MapEvaluationError("point map: denominator vanishes");
                Y = F(Y + *v * yp);
            }
            yp = F(yp * y);
        }
        return ECPoint<F>(X, Y);
    }
};

// ---------------------------------------------------------------------------
// Descent of w^2 = q(x), deg q in {3,4}, through the rational point (0, e),
// q(0) = e^2, e != 0. Produces a short Weierstrass model together with the
// coordinate map; the map is proved to land on the model by an identity in
// the function field F(x)[w]/(w^2 - q), not by spot checks.
// ---------------------------------------------------------------------------
template <Field F>
struct QuarticDescent {
    F A, B;               // target y^2 = x^3 + A x + B
    PointFormula<F> map;  // in the (x, w) coordinates of the quartic
};

template <Field F>
QuarticDescent<F> descend_quartic_with_point(const Poly<F>& q, const F& e) {
    if (q.degree() > 4 || q.degree() < 3)
        throw ModelError("quartic descent: degree must be 3 or 4");
    if (is_zero(e) || !(q[0] == F(e * e)))
        throw ModelError("quartic descent: point (0,e) not on w^2 = q, or e = 0");
    const F a = q[4], b = q[3], c = q[2], d = q[1];
    const F D = F(d / (F(2) * e));
    const F cp = F(c - D * D);
    const F C = F(cp / (F(2) * e));

    using R = QuadFunc<F>;
    R xh = R::x_gen();
    R wh = R::w_gen(q);
    R X0 = (wh + R(e) + R(D) * xh) / (xh * xh);
    R Y0 = (wh + R(e) + R(D) * xh + R(C) * xh * xh) / (xh * xh * xh);
    const F e2 = F(F(2) * e);
    R X2 = X0 / R(e2);
    R Y2 = Y0 / R(e2);

    // long Weierstrass coefficients of the image
    const F a1 = F(D / e);
    const F a2 = F(C / e2);
    const F a3 = F(b / F(F(4) * e * e));
    const F a4 = F(-a / F(F(4) * e * e));
    const F a6 = F(F(-a) * C / F(F(8) * e * e * e));
    {
        R lhs = Y2 * Y2 + R(a1) * X2 * Y2 + R(a3) * Y2;
        R rhs = X2 * X2 * X2 + R(a2) * X2 * X2 + R(a4) * X2 + R(a6);
        if (!((lhs - rhs).zero()))
            throw ModelError("quartic descent: long-model identity failed");
    }
    // long -> short
    const F b2 = F(a1 * a1 + F(4) * a2);
    const F b4 = F(F(2) * a4 + a1 * a3);
    const F b6 = F(a3 * a3 + F(4) * a6);
    const F c4 = F(b2 * b2 - F(24) * b4);
    const F c6 = F(-(b2 * b2 * b2) + F(36) * b2 * b4 - F(216) * b6);
    const F A = F(-c4 / F(48));
    const F B = F(-c6 / F(864));
    R X3 = X2 + R(F(b2 / F(12)));
    R Y3 = Y2 + (R(a1) * X2 + R(a3)) / R(F(2));
    {
        R lhs = Y3 * Y3;
        R rhs = X3 * X3 * X3 + R(A) * X3 + R(B);
        if (!((lhs - rhs).zero()))
            throw ModelError("quartic descent: short-model identity failed");
    }
    QuarticDescent<F> out{A, B, {}};
    out.map.cx = {X3.c0(), X3.c1()};
    out.map.cy = {Y3.c0(), Y3.c1()};
    return out;
}

// Substitute x -> x + shift in every coefficient function of a formula.
template <Field F>
RatFunc<F> ratfunc_shift(const RatFunc<F>& f, const F& shift) {
    return RatFunc<F>(f.num().shift_var(shift), f.den().shift_var(shift));
}

// ---------------------------------------------------------------------------
// j = 1728 side: x^4 + a2 y^2 + a1 y + a0 = 0 with marked points
// P_i = (x_i, x_i) and O = (-u, 0), a0 = -u^4.
// ---------------------------------------------------------------------------
template <Field F>
struct QuarticModel {
    F a0, a1, a2;
    std::vector<F> roots;  // x1..x4, sum zero
    F u;

    void validate() const {
        if (roots.size() != 4) throw ModelError("QuarticModel: need 4 roots");
        F s(0);
        for (const F& r : roots) s = F(s + r);
        if (!is_zero(s)) throw ModelError("QuarticModel: roots must sum to zero");
        if (!(a0 == F(-(u * u * u * u)))) throw ModelError("QuarticModel: a0 != -u^4");
        Poly<F> prod{F(1)};
        Poly<F> x = Poly<F>::x();
        for (const F& r : roots) prod = prod * (x - Poly<F>(r));
        Poly<F> expect(std::vector<F>{a0, a1, a2, F(0), F(1)});
        if (!(prod == expect)) throw ModelError("QuarticModel: coefficients disagree with roots");
        if (is_zero(a2) || is_zero(F(a1 * a1 - F(4) * a0 * a2)))
            throw ModelError("QuarticModel: degenerate (a2(a1^2-4a0a2) = 0)");
    }

    bool on_model(const F& x, const F& y) const {
        return is_zero(F(x * x * x * x + a2 * y * y + a1 * y + a0));
    }
};

template <Field F>
struct QuarticToW {
    ShortW<F> curve;                 // exactly y^2 = x^3 + a2(a1^2-4a0a2) x
    PointFormula<F> map;             // model coords (x,y) -> curve
    std::vector<ECPoint<F>> images;  // of P_i = (x_i, x_i); O maps to identity
};

// Completing the square w = 2 a2 y + a1 turns the model into
// w^2 = -4 a2 x^4 + (a1^2 - 4 a0 a2). The descent is centered at the image
// (x,w) = (-u, +a1) of O, which is what sends O to the group identity; the
// center's w-value is checked against w(O) rather than assumed.
template <Field F>
QuarticToW<F> quartic_to_weierstrass(const QuarticModel<F>& m) {
    m.validate();
    const F K = F(m.a1 * m.a1 - F(4) * m.a0 * m.a2);
    Poly<F> q(std::vector<F>{K, F(0), F(0), F(0), F(-4) * m.a2});
    Poly<F> qs = q.shift_var(F(-m.u));
    const F w_of_origin = F(F(2) * m.a2 * F(0) + m.a1);
    if (!(qs[0] == F(w_of_origin * w_of_origin)))
        throw ModelError("quartic_to_weierstrass: descent center does not match O");
    auto desc = descend_quartic_with_point<F>(qs, w_of_origin);

    // compose with x -> x + u and w = 2 a2 y + a1 (linear in y)
    PointFormula<F> f;
    auto compose = [&](const std::vector<RatFunc<F>>& cw) {
        RatFunc<F> h0 = ratfunc_shift(cw[0], m.u);
        RatFunc<F> h1 = ratfunc_shift(cw[1], m.u);
        return std::vector<RatFunc<F>>{h0 + RatFunc<F>(m.a1) * h1,
                                       RatFunc<F>(F(F(2) * m.a2)) * h1};
    };
    f.cx = compose(desc.map.cx);
    f.cy = compose(desc.map.cy);

    // rescale onto the paper's model y^2 = x^3 + a2 K x
    if (!is_zero(desc.B)) throw ModelError("quartic_to_weierstrass: expected B = 0");
    const F At = F(m.a2 * K);
    std::optional<F> rho2 = FieldRoots<F>::nth_root(F(At / desc.A), 2);
    std::optional<F> rho;
    if (rho2) rho = FieldRoots<F>::nth_root(*rho2, 2);
    if (!rho2 || !rho)
        throw ModelError("quartic_to_weierstrass: model not a 4th-power rescale of target");
    const F r2 = F(*rho * *rho), r3 = F(*rho * *rho * *rho);
    for (auto& cc : f.cx) cc = RatFunc<F>(r2) * cc;
    for (auto& cc : f.cy) cc = RatFunc<F>(r3) * cc;

    QuarticToW<F> out{ShortW<F>(At, F(0)), f, {}};
    for (const F& xi : m.roots) {
        ECPoint<F> img = f.eval(xi, xi);
        if (!on_curve(out.curve, img))
            throw ModelError("quartic_to_weierstrass: marked point missed the curve");
        out.images.push_back(img);
    }
    return out;
}

// ---------------------------------------------------------------------------
// j = 0 side: r(x) + y^3 = 0 with r = p - g^3 of degree 3, marked points
// P_i = (x_i, g(x_i)), origin the rational point at infinity [1 : -u : 0],
// u^3 = lc(r).
// ---------------------------------------------------------------------------
template <Field F>
struct CubicYModel {
    Poly<F> p;             // monic sextic, root sum zero
    Poly<F> g;             // x^2 + a4/3
    Poly<F> r;             // p - g^3
    std::vector<F> roots;  // x1..x6

    static CubicYModel from_p(const Poly<F>& pp, std::vector<F> roots) {
        if (pp.degree() != 6 || !(pp.lc() == F(1)))
            throw ModelError("CubicYModel: p must be monic of degree 6");
        if (!is_zero(pp[5])) throw ModelError("CubicYModel: root sum must vanish");
        CubicYModel m;
        m.p = pp;
        m.g = Poly<F>(std::vector<F>{F(pp[4] / F(3)), F(0), F(1)});
        m.r = pp - m.g.pow(3);
        m.roots = std::move(roots);
        m.validate();
        return m;
    }

    void validate() const {
        if (r.degree() != 3) throw ModelError("CubicYModel: r must have degree 3");
        if (is_zero(poly_discriminant(r))) throw ModelError("CubicYModel: disc(r) = 0");
        if (roots.size() != 6) throw ModelError("CubicYModel: need 6 roots");
        F s(0);
        for (const F& x : roots) s = F(s + x);
        if (!is_zero(s)) throw ModelError("CubicYModel: roots must sum to zero");
        for (const F& x : roots)
            if (!is_zero(p.template eval<F>(x)))
                throw ModelError("CubicYModel: stated root is not a root of p");
    }

    // points (x_i, g(x_i)): they satisfy r(x)+y^3 = 0 since r(x_i) = -g(x_i)^3
    std::vector<std::pair<F, F>> marked_points() const {
        std::vector<std::pair<F, F>> pts;
        for (const F& x : roots) pts.push_back({x, g.template eval<F>(x)});
        return pts;
    }
};

template <Field F>
struct CubicToW {
    ShortW<F> curve;                 // j = 0 model the reduction lands on
    PointFormula<F> map;             // (x,y) -> curve, before basepoint shift
    ECPoint<F> infinity_image;       // image of [1:-u:0], subtracted from all points
    std::vector<ECPoint<F>> images;  // of P_i with the basepoint shift applied
    bool matches_minus16D = false;   // isomorphic to y^2 = x^3 - 16 disc(r)?
    F sixth_ratio{0};                // B / (-16 D), recorded either way
};

// Nagell-style reduction of r(x) + y^3 = 0 through the rational point at
// infinity. That point is generally not a flex: its tangent meets the curve
// again at an affine point Q0, and the pencil of lines through Q0 presents
// the curve as w^2 = quartic with a rational point, which feeds the quartic
// descent. When the infinite point is a flex, r = s^3 + c and the classical
// diagonal-cubic maps apply directly.
template <Field F>
CubicToW<F> cubic_y3_to_weierstrass(const CubicYModel<F>& model) {
    const Poly<F>& r = model.r;
    const F a3 = r[3], a2c = r[2], a1c = r[1], a0c = r[0];
    auto u_opt = FieldRoots<F>::nth_root(a3, 3);
    if (!u_opt) throw ModelError("cubic_y3_to_weierstrass: leading coefficient not a cube");
    const F u = *u_opt;

    using K = CubicFunc<F>;
    using RF = RatFunc<F>;
    Poly<F> mpoly = -r;  // y^3 = m(x)
    K xh = K::x_gen();
    K yh = K::y_gen(mpoly);

    CubicToW<F> out{ShortW<F>(F(0), F(1)), {}, {}, {}, false, F(0)};
    K Xf(0), Yf(0);

    const bool flex = F(F(3) * a1c * a3) == F(a2c * a2c);
    if (flex) {
        // r = s^3 + cconst with s = u x + a2/(3u^2)
        const F cconst = F(a0c - a2c * a2c * a2c / (F(27) * a3 * a3));
        const F mm = F(-cconst);  // s^3 + y^3 = mm on the curve
        if (is_zero(mm)) throw ModelError("cubic_y3_to_weierstrass: degenerate flex");
        K s = K(RF(u)) * xh + K(F(a2c / (F(3) * u * u)));
        K denom = s + yh;
        Xf = K(F(F(12) * mm)) / denom;
        Yf = K(F(F(36) * mm)) * (s - yh) / denom;
        out.curve = ShortW<F>(F(0), F(F(-432) * mm * mm));
        out.infinity_image = ECPoint<F>::inf();  // the flex is the map's center
    } else {
        // tangent at infinity: third intersection point Q0 = (x0, y0)
        const F x0 = F(-(a0c - a2c * a2c * a2c / (F(27) * a3 * a3)) /
                       (a1c - a2c * a2c / (F(3) * a3)));
        const F y0 = F(-u * x0 - a2c / (F(3) * u * u));
        if (!is_zero(F(r.template eval<F>(x0) + y0 * y0 * y0)))
            throw ModelError("cubic_y3_to_weierstrass: tangent point computation failed");
        const F c2a = F(F(3) * a3 * x0 + a2c);
        const F c2b = F(F(3) * y0);
        const F c1a = r.derivative().template eval<F>(x0);
        const F c1b = F(F(3) * y0 * y0);
        if (is_zero(c1a) && is_zero(c1b))
            throw ModelError("cubic_y3_to_weierstrass: Q0 singular");

        K xt = xh - K(x0);
        K yt = yh - K(y0);
        // pencil through Q0; parametrize by y/x slope unless the tangent at
        // Q0 is vertical (y0 = 0), in which case swap the roles of x and y
        const bool swapped = is_zero(c1b);
        K th = swapped ? xt / yt : yt / xt;
        K base = swapped ? yt : xt;
        const F tstar = swapped ? F(-c1b / c1a) : F(-c1a / c1b);
        Poly<F> f3p = swapped ? Poly<F>(std::vector<F>{F(1), F(0), F(0), a3})
                              : Poly<F>(std::vector<F>{a3, F(0), F(0), F(1)});
        Poly<F> f2p = swapped ? Poly<F>(std::vector<F>{c2b, F(0), c2a})
                              : Poly<F>(std::vector<F>{c2a, F(0), c2b});
        Poly<F> f1p = swapped ? Poly<F>(std::vector<F>{c1b, c1a})
                              : Poly<F>(std::vector<F>{c1a, c1b});
        Poly<F> Q = f2p * f2p - F(4) * f3p * f1p;
        const F e = f2p.template eval<F>(tstar);
        if (is_zero(e)) throw ModelError("cubic_y3_to_weierstrass: degenerate descent point");
        Poly<F> Qs = Q.shift_var(tstar);
        auto desc = descend_quartic_with_point<F>(Qs, e);

        K f3v = f3p.template eval<K>(th);
        K f2v = f2p.template eval<K>(th);
        K vh = K(F(2)) * f3v * base + f2v;
        if (!(vh * vh == Q.template eval<K>(th)))
            throw ModelError("cubic_y3_to_weierstrass: v^2 = Q(t) identity failed");

        K xi = th - K(tstar);
        auto eval_formula = [&](const std::vector<RF>& cs) {
            K acc(0), wp(1);
            for (const RF& cfun : cs) {
                if (!cfun.zero()) acc = acc + cfun.template eval_ring<K>(xi) * wp;
                wp = wp * vh;
            }
            return acc;
        };
        Xf = eval_formula(desc.map.cx);
        Yf = eval_formula(desc.map.cy);
        out.curve = ShortW<F>(desc.A, desc.B);

        // Image of [1:-u:0]: on the (t,v) chart that point sits at the finite
        // position t = -u (slope of the asymptote), v = f2(t), because
        // f3(t) -> 0 there at the same rate base blows up, with limit 0.
        const F tinf = swapped ? F(F(-1) / u) : F(-u);
        const F vinf = f2p.template eval<F>(tinf);
        const F xiv = F(tinf - tstar);
        if (is_zero(xiv) && vinf == e) {
            out.infinity_image = ECPoint<F>::inf();
        } else {
            out.infinity_image = desc.map.eval(xiv, vinf);
            if (!on_curve(out.curve, out.infinity_image))
                throw ModelError("cubic_y3_to_weierstrass: infinity image off-curve");
        }
    }

    // symbolic proof that the map lands on the model
    {
        K lhs = Yf * Yf;
        K rhs = Xf * Xf * Xf + K(out.curve.A) * Xf + K(out.curve.B);
        if (!(lhs == rhs)) throw ModelError("cubic_y3_to_weierstrass: landing identity failed");
    }
    if (!is_zero(out.curve.A))
        throw ModelError("cubic_y3_to_weierstrass: expected j = 0 (A = 0)");

    out.map.cx = {Xf.c(0), Xf.c(1), Xf.c(2)};
    out.map.cy = {Yf.c(0), Yf.c(1), Yf.c(2)};

    for (auto& [px, py] : model.marked_points()) {
        ECPoint<F> img = out.map.eval(px, py);
        if (!on_curve(out.curve, img))
            throw ModelError("cubic_y3_to_weierstrass: marked point missed the curve");
        out.images.push_back(sub(out.curve, img, out.infinity_image));
    }

    // compare against the paper's y^2 = x^3 - 16 D, D = disc(r)
    const F D = poly_discriminant(r);
    out.sixth_ratio = F(out.curve.B / (F(-16) * D));
    std::optional<F> rho = FieldRoots<F>::nth_root(out.sixth_ratio, 6);
    if (rho) {
        out.matches_minus16D = true;
        const F ri = F(F(1) / *rho);
        const F r2 = F(ri * ri), r3 = F(ri * ri * ri);
        for (auto& cc : out.map.cx) cc = RatFunc<F>(r2) * cc;
        for (auto& cc : out.map.cy) cc = RatFunc<F>(r3) * cc;
        ShortW<F> target(F(0), F(F(-16) * D));
        auto rescale = [&](ECPoint<F>& P) {
            if (!P.infinity) P = ECPoint<F>(F(r2 * P.x), F(r3 * P.y));
            if (!on_curve(target, P))
                throw ModelError("cubic_y3_to_weierstrass: rescale broke a point");
        };
        for (auto& P : out.images) rescale(P);
        rescale(out.infinity_image);
        out.curve = target;
    }
    return out;
}

}  // namespace mestre

#endif
