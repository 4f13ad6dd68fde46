#include "mestre/ec.hpp"

namespace mestre {

bool isomorphic_over_Q(const ShortW<Rat>& e1, const ShortW<Rat>& e2) {
    if (!(j_invariant(e1) == j_invariant(e2))) return false;
    bool a0 = e1.A == 0, b0 = e1.B == 0;
    if (b0) {
        // j = 1728: twists classified by A'/A mod 4th powers
        return rat_is_nth_power(Rat(e2.A / e1.A), 4);
    }
    if (a0) {
        // j = 0: twists classified by B'/B mod 6th powers
        return rat_is_nth_power(Rat(e2.B / e1.B), 6);
    }
    // generic j: need u in Q* with A' = u^4 A and B' = u^6 B; u^2 is forced
    Rat u2 = Rat(e2.B * e1.A) / Rat(e1.B * e2.A);
    if (!(u2 * u2 == Rat(e2.A / e1.A))) return false;
    if (!(u2 * u2 * u2 == Rat(e2.B / e1.B))) return false;
    return rat_is_square(u2);
}

}  // namespace mestre
