#include "mestre/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace mestre {

namespace {

// check f_target(x_map) == y_mult^2 * F_cleared, the statement that the map
// actually lands on the target curve
void verify_cover_map(const ShortW<Rat>& target, const CoverMap& m, const PolyQ& fc) {
    RatFuncQ x = m.x_map;
    RatFuncQ lhs = x * x * x + RatFuncQ(target.A) * x + RatFuncQ(target.B);
    RatFuncQ rhs = m.y_mult * m.y_mult * RatFuncQ(fc);
    if (!(lhs == rhs)) throw std::logic_error("cover map fails its landing identity");
}

}  // namespace

CoverSpec build_cover(const ShortW<Rat>& e, const ShortW<Rat>& ep) {
    const Rat a = e.A, b = e.B, apr = ep.A, bpr = ep.B;
    if ((a == 0 && apr == 0) || (b == 0 && bpr == 0))
        throw std::invalid_argument(
            "build_cover: j(E) and j(E') must not both be 0 or both 1728");

    PolyQ X = PolyQ::x();
    // phi(u) = -(b' - u^6 b) / (u^2 (a' - u^4 a))
    PolyQ nphi = -(PolyQ(bpr) - PolyQ::monomial(b, 6));
    PolyQ dphi = PolyQ::monomial(Rat(1), 2) * (PolyQ(apr) - PolyQ::monomial(a, 4));
    RatFuncQ phi(nphi, dphi);

    // clear Y^2 = f(phi): with phi = n/d reduced, f(phi) = M/d^3 and
    // (Y d^2)^2 = M d
    const PolyQ n = phi.num(), d = phi.den();
    PolyQ M = n * n * n + a * (n * (d * d)) + b * (d * d * d);
    PolyQ Fc = M * d;

    CoverSpec c{e, ep, phi, Fc, {}, {}, {}, {}, {}, 0, false};
    auto [S, T] = odd_square_split(Fc);
    c.S = S;
    c.T = T;
    if (!(S * T * T == Fc)) throw std::logic_error("build_cover: S T^2 split failed");

    c.rho = CoverMap{phi, RatFuncQ(PolyQ(Rat(1)), d * d)};
    RatFuncQ x2phi = RatFuncQ(PolyQ::monomial(Rat(1), 2)) * phi;
    c.rho_prime = CoverMap{x2phi, RatFuncQ(PolyQ::monomial(Rat(1), 3), d * d)};
    verify_cover_map(e, c.rho, Fc);
    verify_cover_map(ep, c.rho_prime, Fc);

    // the paper's functional identity g(X^2 phi) = X^6 f(phi), in Q(X)
    {
        RatFuncQ g_at = x2phi * x2phi * x2phi + RatFuncQ(apr) * x2phi + RatFuncQ(bpr);
        RatFuncQ f_at = phi * phi * phi + RatFuncQ(a) * phi + RatFuncQ(b);
        if (!(g_at == RatFuncQ(PolyQ::monomial(Rat(1), 6)) * f_at))
            throw std::logic_error("build_cover: u^6 f(phi) = g(u^2 phi) failed");
    }

    c.ratio = pullback_ratio(c);
    c.genus = cover_genus(c);
    return c;
}

RatFuncQ pullback_ratio(const CoverSpec& c) {
    // rho^*(dx/y) = x_map' dt / (y_mult Y); the Y's cancel in the quotient.
    // For the phi-construction this reduces to phi'(X) X^3 / (X^2 phi)'.
    RatFuncQ num = c.rho.x_map.derivative() * c.rho_prime.y_mult;
    RatFuncQ den = c.rho_prime.x_map.derivative() * c.rho.y_mult;
    if (den.zero()) throw std::logic_error("pullback_ratio: degenerate cover");
    RatFuncQ r = num / den;
    if (r.num().degree() == 0 && r.den().degree() == 0)
        throw std::logic_error("pullback_ratio: ratio unexpectedly constant");
    return r;
}

RatFuncQ pullback_ratio_closed_form(const Rat& a, const Rat& b, const Rat& ap,
                                    const Rat& bp) {
    // (3a X^4 b' - 2 X^6 b a' - b'a') / (X^3 (X^6 b a - 3 X^2 b a' + 2 a b'))
    PolyQ num = PolyQ::monomial(3 * a * bp, 4) - PolyQ::monomial(2 * b * ap, 6) -
                PolyQ(bp * ap);
    PolyQ inner = PolyQ::monomial(b * a, 6) - PolyQ::monomial(3 * b * ap, 2) +
                  PolyQ(2 * a * bp);
    PolyQ den = PolyQ::monomial(Rat(1), 3) * inner;
    return RatFuncQ(num, den);
}

int cover_genus(const CoverSpec& c) { return (c.S.degree() - 1) / 2; }

CoverSpec special_cover(long j) {
    if (j == 0) {
        ShortW<Rat> e(Rat(0), Rat(1));  // y^2 = x^3 + 1
        PolyQ f(std::vector<Rat>{1, 0, 0, 0, 0, 0, 1});  // t^6 + 1
        CoverSpec c{e, e, RatFuncQ(PolyQ::monomial(Rat(1), 2)), f, {}, {},
                    {}, {}, {}, 0, false};
        auto [S, T] = odd_square_split(f);
        c.S = S;
        c.T = T;
        c.rho = CoverMap{RatFuncQ(PolyQ::monomial(Rat(1), 2)), RatFuncQ(Rat(1))};
        c.rho_prime = CoverMap{RatFuncQ(PolyQ(Rat(1)), PolyQ::monomial(Rat(1), 2)),
                               RatFuncQ(PolyQ(Rat(1)), PolyQ::monomial(Rat(1), 3))};
        verify_cover_map(e, c.rho, f);
        verify_cover_map(e, c.rho_prime, f);
        c.ratio = pullback_ratio(c);
        c.genus = cover_genus(c);
        return c;
    }
    if (j == 1728) {
        // (t^2+1)(t^2-2)(2t^2-1) = 2t^6 - 3t^4 - 3t^2 + 2
        ShortW<Rat> e(Rat(-9), Rat(0));  // short form of y^2 = (x+1)(x-2)(2x-1)
        PolyQ f(std::vector<Rat>{2, 0, -3, 0, -3, 0, 2});
        CoverSpec c{e, e, RatFuncQ(), f, {}, {}, {}, {}, {}, 0, false};
        auto [S, T] = odd_square_split(f);
        c.S = S;
        c.T = T;
        // x |-> 2x - 1 carries y^2 = (x+1)(x-2)(2x-1), (x,y) -> (2x-1, 2y),
        // onto y^2 = x^3 - 9x; compose with (t,y) -> (t^2, y) and (1/t^2, y/t^3)
        PolyQ t2 = PolyQ::monomial(Rat(1), 2);
        c.rho = CoverMap{RatFuncQ(PolyQ(std::vector<Rat>{-1, 0, 2})), RatFuncQ(Rat(2))};
        c.rho_prime = CoverMap{
            RatFuncQ(PolyQ(std::vector<Rat>{2, 0, -1}), t2),
            RatFuncQ(PolyQ(Rat(2)), PolyQ::monomial(Rat(1), 3))};
        c.phi = c.rho.x_map;
        verify_cover_map(e, c.rho, f);
        verify_cover_map(e, c.rho_prime, f);
        c.ratio = pullback_ratio(c);
        c.genus = cover_genus(c);
        return c;
    }
    throw std::invalid_argument("special_cover: j must be 0 or 1728");
}

CoverSpec cover_for_invariant(const Rat& j) {
    if (j == 0) return special_cover(0);
    if (j == 1728) return special_cover(1728);
    Rat a = 27 * j / (4 * (j - 1728));
    ShortW<Rat> e(a, a);
    if (!(j_invariant(e) == j))
        throw std::logic_error("cover_for_invariant: j formula failed");
    return build_cover(e, e);
}

Remark1Spec conic_double_cover(const Rat& alpha, const Rat& beta, const Rat& b) {
    Rat a = alpha * alpha + 3 * beta * beta;
    if (a == 0) throw std::invalid_argument("conic_double_cover: a = 0");
    Remark1Spec r;
    r.alpha = alpha;
    r.beta = beta;
    r.a = a;
    r.b = b;
    r.conic_x = alpha - beta;
    r.conic_y = 2 * beta;
    if (!(r.conic_x * r.conic_x + r.conic_x * r.conic_y + r.conic_y * r.conic_y == a))
        throw std::logic_error("conic_double_cover: base point off the conic");

    // pencil (x, y) = (x0 + l, y0 + s l) through the base point
    PolyQ s = PolyQ::x();
    RatFuncQ x0(r.conic_x), y0(r.conic_y);
    RatFuncQ sv(s);
    RatFuncQ c2 = sv * sv + sv + RatFuncQ(Rat(1));
    RatFuncQ c1 = RatFuncQ(2 * r.conic_x + r.conic_y) + sv * RatFuncQ(r.conic_x + 2 * r.conic_y);
    RatFuncQ lam = -(c1 / c2);
    r.x1 = x0 + lam;
    r.x2 = y0 + sv * lam;

    if (!(r.x1 * r.x1 + r.x1 * r.x2 + r.x2 * r.x2 == RatFuncQ(a)))
        throw std::logic_error("conic_double_cover: conic identity failed");
    auto fE = [&](const RatFuncQ& x) {
        return RatFuncQ(x * x * x - RatFuncQ(a) * x + RatFuncQ(b));
    };
    if (!(fE(r.x1) == fE(r.x2)))
        throw std::logic_error("conic_double_cover: f(x1) = f(x2) failed");

    // derivatives must not be proportional (two independent morphisms)
    RatFuncQ d1 = r.x1.derivative(), d2 = r.x2.derivative();
    if ((d1 / d2).den().degree() == 0 && (d1 / d2).num().degree() == 0)
        throw std::logic_error("conic_double_cover: derivatives proportional");

    // clear y^2 = f(x1(s)): with x1 = n/d, f(x1) = M/d^3, (Y d^2)^2 = M d
    PolyQ n = r.x1.num(), d = r.x1.den();
    PolyQ M = n * n * n - a * (n * (d * d)) + b * (d * d * d);
    r.F_cleared = M * d;
    auto [S, T] = odd_square_split(r.F_cleared);
    r.S = S;
    r.T = T;
    r.y_mult = RatFuncQ(PolyQ(Rat(1)), d * d);
    r.genus = (S.degree() - 1) / 2;

    ShortW<Rat> e(-a, b);
    verify_cover_map(e, CoverMap{r.x1, r.y_mult}, r.F_cleared);
    verify_cover_map(e, CoverMap{r.x2, r.y_mult}, r.F_cleared);
    return r;
}

ShortFromCubic short_from_cubic(const PolyQ& cubic) {
    if (cubic.degree() != 3) throw std::invalid_argument("short_from_cubic: need degree 3");
    // y^2 = c x^3 + ...: scale (X, Y) = (c x, c y), then depress
    Rat c = cubic.lc();
    PolyQ scaled(std::vector<Rat>{c * c * cubic[0], c * cubic[1], cubic[2], Rat(1)});
    Rat shift = scaled[2] / 3;
    PolyQ dep = scaled.shift_var(-shift);
    if (!(dep[2] == 0)) throw std::logic_error("short_from_cubic: depression failed");
    ShortFromCubic out{ShortW<Rat>(dep[1], dep[0]), c, -shift, c};
    return out;
}

Remark2Spec two_torsion_glue(const std::vector<Rat>& r1, const std::vector<Rat>& r2) {
    if (r1.size() != 3 || r2.size() != 3)
        throw std::invalid_argument("two_torsion_glue: need two root triples");
    auto distinct = [](const std::vector<Rat>& v) {
        return v[0] != v[1] && v[0] != v[2] && v[1] != v[2];
    };
    if (!distinct(r1) || !distinct(r2))
        throw std::invalid_argument("two_torsion_glue: roots must be distinct");

    Remark2Spec out;
    out.roots1 = r1;
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& pm : perms) {
        Rat ap = r2[pm[0]], bp = r2[pm[1]], cp = r2[pm[2]];
        Rat alpha = (bp - ap) / (r1[1] - r1[0]);
        if (alpha == 0) continue;
        Rat beta = ap - alpha * r1[0];
        if (alpha * r1[2] + beta == cp) continue;  // h(c) = c': inadmissible
        Rat hinv_cp = (cp - beta) / alpha;
        if (hinv_cp == r1[0] || hinv_cp == r1[1]) continue;  // q2 would be degenerate
        out.alpha = alpha;
        out.beta = beta;
        out.roots2 = {ap, bp, cp};
        PolyQ x = PolyQ::x();
        out.q1 = (x - PolyQ(r1[0])) * (x - PolyQ(r1[1])) * (x - PolyQ(r1[2]));
        out.q2 = alpha * ((x - PolyQ(r1[0])) * (x - PolyQ(r1[1])) * (x - PolyQ(hinv_cp)));
        if (poly_gcd(out.q1, out.q2).degree() != 2)
            throw std::logic_error("two_torsion_glue: shared-root count wrong");
        // transport z^2 = q2 through X = h(x) and compare with E2
        PolyQ comp;  // q2(h^{-1}(X)) * alpha^2
        {
            // h^{-1}(X) = (X - beta)/alpha: compose manually
            RatFuncQ Xv(PolyQ::x());
            RatFuncQ hx = (Xv - RatFuncQ(beta)) / RatFuncQ(alpha);
            RatFuncQ val = out.q2.eval<RatFuncQ>(hx) * RatFuncQ(alpha * alpha);
            if (val.den().degree() != 0)
                throw std::logic_error("two_torsion_glue: transport not polynomial");
            comp = val.num();
        }
        PolyQ e2poly = (x - PolyQ(ap)) * (x - PolyQ(bp)) * (x - PolyQ(cp));
        ShortFromCubic se2 = short_from_cubic(e2poly);
        ShortFromCubic str = short_from_cubic(comp);
        out.transported_iso_to_E2 = isomorphic_over_Q(str.curve, se2.curve);
        return out;
    }
    out.degenerate = true;
    return out;
}

}  // namespace mestre
