#ifndef MESTRE_FAMILIES_HPP
#define MESTRE_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "mestre/covers.hpp"
#include "mestre/height.hpp"
#include "mestre/models.hpp"

namespace mestre {

// Theorem 1 family: twist of E_j by sqrt(f(t)) carrying the two points
// p_i o w - p_i, rational over Q(t).
struct TwistFamily {
    Rat j;
    ShortW<Rat> base;        // E over Q with invariant j
    PolyQ f;                 // hyperelliptic model y^2 = f(t) of the cover
    RatFuncQ A, B;           // twisted curve y^2 = x^3 + A(t) x + B(t)
    ECPoint<RatFuncQ> P1, P2;
    bool isotrivial = true;
    std::vector<PolyQ> excluded_polys;  // t0 with any of these vanishing is excluded
};
TwistFamily twist_family(const Rat& j);

// Euler's parametrized quartic family (4 points, j = 1728).
struct QuarticFamily {
    QuarticModel<RatFuncQ> model;
    QuarticToW<RatFuncQ> transform;
    bool non_isotrivial = false;  // A(t) fails the 4th-power test
    std::vector<PolyQ> excluded_polys;
};
QuarticFamily euler_family_1728();

// The degree-3 parametrization family on r(x) + y^3 = 0 (6 points, j = 0).
struct CubicFamily {
    std::vector<PolyQ> xs;  // x1..x6 as polynomials in t
    Rat repaired_coefficient;  // the constraint-solved coefficient (on t^2)
    CubicYModel<RatFuncQ> model;
    CubicToW<RatFuncQ> transform;
    PolyQ D;                // disc of r, a polynomial in t
    PolyQ a3_cuberoot;      // u(t) with u^3 = lc_x(r)
    bool non_isotrivial = false;  // D fails the 6th-power test
    std::optional<BigInt> irreducibility_prime;  // witness for D, < 200
    std::vector<PolyQ> excluded_polys;
};
CubicFamily sextic_family_0();

struct SpecializedCurve {
    std::string family;  // "twist", "euler1728", "sextic0"
    Rat j;
    Rat t0;
    std::optional<ShortW<Rat>> curve;  // integral model (A, B cleared)
    std::vector<ECPoint<Rat>> points;
    std::string excluded_reason;  // nonempty means excluded, no curve/points
    bool excluded() const { return !excluded_reason.empty(); }
};

SpecializedCurve specialize(const TwistFamily& fam, const Rat& t0);
SpecializedCurve specialize(const QuarticFamily& fam, const Rat& t0);
SpecializedCurve specialize(const CubicFamily& fam, const Rat& t0);

RankCertificate certify(const SpecializedCurve& spec, long prec_bits = 128,
                        const FactorOptions& fopt = {});

// Partition under isomorphic_over_Q; returns groups of indices into specs.
std::vector<std::vector<size_t>> distinct_classes(const std::vector<SpecializedCurve>& specs);

// Shared helper: scale y^2 = x^3 + Ax + B by the least integer u making
// u^4 A and u^6 B integral, carrying the points along.
void clear_to_integral(ShortW<Rat>& e, std::vector<ECPoint<Rat>>& pts,
                       const FactorOptions& fopt = {});

}  // namespace mestre

#endif
