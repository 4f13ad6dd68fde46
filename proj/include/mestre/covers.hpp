#ifndef MESTRE_COVERS_HPP
#define MESTRE_COVERS_HPP

#include <vector>

#include "mestre/ec.hpp"
#include "mestre/poly.hpp"
#include "mestre/ratfunc.hpp"

namespace mestre {

// A morphism from the hyperelliptic model Y^2 = F(t) to an elliptic curve:
// (t, Y) -> (x_map(t), y_mult(t) * Y).
struct CoverMap {
    RatFuncQ x_map;
    RatFuncQ y_mult;
};

// Quadratic cover of P^1 with two independent morphisms to elliptic curves.
// Built either from the phi(u) construction (generic pair) or from the two
// fixed genus-2 curves handling j = 0 and j = 1728.
struct CoverSpec {
    ShortW<Rat> E, Eprime;
    RatFuncQ phi;          // x = phi(u) solving u^6 f(x) = g(u^2 x)
    PolyQ F_cleared;       // cover model (Y * den^2)^2 = F_cleared(X) = S T^2
    PolyQ S, T;            // odd-multiplicity part (with constant) and square part
    CoverMap rho, rho_prime;
    RatFuncQ ratio;        // omega / omega'
    int genus = 0;
    bool genus_degenerate = false;  // deg S <= 2
};

// Preconditions are the paper's: j(E) and j(E') not both 0 and not both 1728,
// i.e. (A=0 -> A'!=0) and (B=0 -> B'!=0).
CoverSpec build_cover(const ShortW<Rat>& e, const ShortW<Rat>& eprime);

// rho^*(dx/y) / rho'^*(dx/y) = phi'(X) X^3 / (X^2 phi(X))' reduced.
RatFuncQ pullback_ratio(const CoverSpec& c);

// The closed form of the same ratio in terms of (a, b, a', b').
RatFuncQ pullback_ratio_closed_form(const Rat& a, const Rat& b, const Rat& ap,
                                    const Rat& bp);

int cover_genus(const CoverSpec& c);

// j = 0: Y^2 = t^6 + 1 over y^2 = x^3 + 1;
// j = 1728: Y^2 = (t^2+1)(t^2-2)(2t^2-1) over the short form of
// y^2 = (x+1)(x-2)(2x-1), which is y^2 = x^3 - 9x.
CoverSpec special_cover(long j);

// Theorem 4 dispatcher: any j in Q.
CoverSpec cover_for_invariant(const Rat& j);

// Remarque 1: conic parametrization giving a genus-3 double cover of
// y^2 = x^3 - a x + b for a = alpha^2 + 3 beta^2.
struct Remark1Spec {
    Rat alpha, beta, a, b;
    Rat conic_x, conic_y;  // the rational point (alpha-beta, 2beta)
    RatFuncQ x1, x2;       // conic parametrization in s
    PolyQ F_cleared, S, T;
    RatFuncQ y_mult;       // shared by both maps (s, Y) -> (x_i(s), y_mult Y)
    int genus = 0;
};
Remark1Spec conic_double_cover(const Rat& alpha, const Rat& beta, const Rat& b);

// Remarque 2: gluing two full-2-torsion curves along an affine map.
struct Remark2Spec {
    Rat alpha, beta;       // h(x) = alpha x + beta
    std::vector<Rat> roots1, roots2;  // (a,b,c) and the permuted (a',b',c') used
    PolyQ q1, q2;
    bool degenerate = false;          // no admissible permutation
    bool transported_iso_to_E2 = false;
};
Remark2Spec two_torsion_glue(const std::vector<Rat>& roots1, const std::vector<Rat>& roots2);

// Short form of y^2 = cubic (any nonzero leading coefficient), plus the point
// transform x -> scale_x * x + shift_x, y -> scale_y * y onto it.
struct ShortFromCubic {
    ShortW<Rat> curve;
    Rat scale_x, shift_x, scale_y;
    ECPoint<Rat> map(const Rat& x, const Rat& y) const {
        return ECPoint<Rat>(scale_x * x + shift_x, scale_y * y);
    }
};
ShortFromCubic short_from_cubic(const PolyQ& cubic);

}  // namespace mestre

#endif
