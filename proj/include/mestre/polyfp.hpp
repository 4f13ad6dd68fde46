#ifndef MESTRE_POLYFP_HPP
#define MESTRE_POLYFP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mestre/poly.hpp"

namespace mestre {

// Small-prime polynomial arithmetic, just enough for the distinct-degree
// irreducibility test that certifies irreducibility over Q.
class PolyFp {
public:
    PolyFp(uint64_t p) : p_(p) {}

    using P = std::vector<uint64_t>;  // coeffs mod p, trimmed

    P reduce(const PolyQ& q) const;   // requires p not dividing any denominator
    P mulmod(const P& a, const P& b, const P& mod) const;
    P powmod_x(const BigInt& e, const P& mod) const;  // x^e mod (mod)
    P gcd(P a, P b) const;
    bool irreducible(const P& f) const;

    static int deg(const P& a) { return static_cast<int>(a.size()) - 1; }

private:
    P trim(P a) const;
    P rem(P a, const P& b) const;
    uint64_t inv(uint64_t a) const;
    uint64_t p_;
};

// Smallest prime q <= prime_bound with q not dividing lc(p) such that p mod q
// is irreducible over F_q. A returned witness proves p irreducible over Q;
// nullopt is inconclusive.
std::optional<BigInt> irreducibility_witness(const PolyQ& p, long prime_bound);

}  // namespace mestre

#endif
