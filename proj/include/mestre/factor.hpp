#ifndef MESTRE_FACTOR_HPP
#define MESTRE_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mestre/rat.hpp"

namespace mestre {

struct PrimePower {
    BigInt prime;
    unsigned exponent;
};

// Factored integer: input = sign * prod(prime^exponent) * cofactor.
// A fully factored value has cofactor 1; a budget-exceeded factorization
// carries the remaining composite cofactor explicitly so callers can decide
// whether they actually need it split (heights often do not).
struct FactoredInt {
    int sign = 1;
    std::vector<PrimePower> factors;
    BigInt cofactor = 1;

    bool complete() const { return cofactor == 1; }
    BigInt reassemble() const;
};

struct FactorBudgetExceeded : std::runtime_error {
    FactoredInt partial;
    explicit FactorBudgetExceeded(FactoredInt p)
        : std::runtime_error("factor_integer: budget exceeded, composite cofactor " +
                             p.cofactor.get_str()),
          partial(std::move(p)) {}
};

// 40 Miller-Rabin rounds with bases from a fixed splitmix64 stream, so golden
// files never depend on run-to-run randomness.
bool is_probable_prime(const BigInt& n);

struct FactorOptions {
    uint64_t rho_budget = 1'000'000;  // Brent iterations per cofactor
    std::vector<BigInt> hints;        // trusted divisors (CLI --factor-hint)
    bool throw_on_budget = true;      // otherwise: return with cofactor set
};

// Trial division, then Pollard rho with Brent cycle detection.
FactoredInt factor_integer(const BigInt& n, const FactorOptions& opt = {});

// The part of |n| supported on the primes of `block`, i.e.
// prod q^{v_q(n)} over primes q | block, computed by iterated gcd without
// splitting `block`. Used to reason about unfactored cofactors of a
// discriminant: if block_part(n, M) < q_min^k then no prime of M divides n
// to the k-th power.
BigInt block_part(const BigInt& n, const BigInt& block);

unsigned valuation(const BigInt& n, const BigInt& p);
unsigned valuation(const Rat& q, const BigInt& p, bool& negative);

}  // namespace mestre

#endif
