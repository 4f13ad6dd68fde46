#ifndef MESTRE_RAT_HPP
#define MESTRE_RAT_HPP

#include <gmpxx.h>

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>

namespace mestre {

using BigInt = mpz_class;

// Exact rational numbers. mpq_class keeps gcd(num,den)=1 and den>=1 after
// every operation, which is exactly the canonical form we rely on for
// equality tests throughout.
using Rat = mpq_class;

// Minimal field interface used by all the generic curve/polynomial code.
template <typename F>
concept Field = requires(F a, F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    F(0);
    F(1);
    F(a);
};

template <Field F>
inline bool is_zero(const F& a) { return a == F(0); }

inline const BigInt& num(const Rat& q) { return q.get_num(); }
inline const BigInt& den(const Rat& q) { return q.get_den(); }

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    q.canonicalize();
    return q;
}

// Exact "num/den" form, used by every serialized artifact.
inline std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline int sgn(const Rat& q) { return ::sgn(q); }

inline BigInt int_nth_root_exact(const BigInt& n, unsigned long k, bool& exact) {
    BigInt r;
    exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0;
    return r;
}

// q = s^n for some rational s? Returns s when it exists (principal choice:
// s > 0 for even n, sign of q for odd n).
inline std::optional<Rat> rat_nth_root(const Rat& q, unsigned n) {
    if (n == 0) throw std::invalid_argument("rat_nth_root: n must be positive");
    if (q == 0) return Rat(0);
    if (n % 2 == 0 && sgn(q) < 0) return std::nullopt;
    BigInt an = abs(num(q));
    bool okn = false, okd = false;
    BigInt rn = int_nth_root_exact(an, n, okn);
    if (!okn) return std::nullopt;
    BigInt rd = int_nth_root_exact(den(q), n, okd);
    if (!okd) return std::nullopt;
    Rat r(rn, rd);
    r.canonicalize();
    if (sgn(q) < 0) r = -r;  // only reachable for odd n
    return r;
}

inline bool rat_is_square(const Rat& q) {
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(num(q).get_mpz_t()) != 0 &&
           mpz_perfect_square_p(den(q).get_mpz_t()) != 0;
}

inline bool rat_is_nth_power(const Rat& q, unsigned n) {
    return rat_nth_root(q, n).has_value();
}

}  // namespace mestre

#endif
