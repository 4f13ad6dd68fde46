#ifndef MESTRE_MINMODEL_HPP
#define MESTRE_MINMODEL_HPP

#include <optional>

#include "mestre/ec.hpp"
#include "mestre/factor.hpp"
#include "mestre/rat.hpp"

namespace mestre {

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct LongW {
    Rat a1, a2, a3, a4, a6;

    Rat b2() const { return a1 * a1 + 4 * a2; }
    Rat b4() const { return 2 * a4 + a1 * a3; }
    Rat b6() const { return a3 * a3 + 4 * a6; }
    Rat b8() const {
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
    Rat c4() const { return b2() * b2() - 24 * b4(); }
    Rat c6() const {
        Rat b = b2();
        return -b * b * b + 36 * b * b4() - 216 * b6();
    }
    Rat disc() const {
        Rat B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
    }
    bool integral() const;
    Rat rhs_lhs(const Rat& x, const Rat& y) const {  // defining polynomial at (x,y)
        return y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6);
    }
    bool contains(const ECPoint<Rat>& p) const {
        return p.infinity || rhs_lhs(p.x, p.y) == 0;
    }
};

// Standard change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t,
// mapping a model to a transformed one.
struct WTransform {
    Rat u{1}, r{0}, s{0}, t{0};

    LongW apply(const LongW& e) const;
    ECPoint<Rat> fwd_point(const ECPoint<Rat>& p) const;  // source -> target coords
    WTransform then(const WTransform& second) const;
};

struct MinimalModelData {
    LongW model;                  // globally minimal integral model
    WTransform to_minimal;        // from the input short model to `model`
    FactoredInt disc_factored;    // of the minimal discriminant (cofactor allowed)
    BigInt disc;                  // minimal discriminant as plain integer
};

// Laska-Kraus-Connell reduction of y^2 = x^3 + Ax + B over Q. Factorization
// of the minimal discriminant honors `fopt`; an unsplittable cofactor is kept
// explicitly rather than failing the reduction itself (heights decide later
// whether they actually need it split).
MinimalModelData minimal_model(const ShortW<Rat>& e, const FactorOptions& fopt = {});

// Kraus' integrality conditions for a (c4, c6) pair at 2 and 3.
bool kraus_ok(const BigInt& c4, const BigInt& c6);

// Connell's reconstruction of a reduced integral model from admissible
// (c4, c6); returns nullopt when the pair is not admissible.
std::optional<LongW> model_from_c4c6(const BigInt& c4, const BigInt& c6);

}  // namespace mestre

#endif
