#ifndef MESTRE_HEIGHT_HPP
#define MESTRE_HEIGHT_HPP

#include <optional>
#include <vector>

#include "mestre/ec.hpp"
#include "mestre/minmodel.hpp"
#include "mestre/real.hpp"

namespace mestre {

struct HeightOptions {
    long prec_bits = 128;
    FactorOptions factor;
    // false: half-x-height convention, h(P) = (1/2) lim h_x(2^k P)/4^k.
    // true: the doubled convention (no 1/2), exposed for comparisons against
    // tools using the other normalization.
    bool doubled_convention = false;
};

struct GramMatrix {
    std::vector<std::vector<ApproxReal>> entries;
    ApproxReal determinant;
};

enum class Verdict { independent, dependent, inconclusive };

struct RankCertificate {
    ShortW<Rat> curve;
    std::vector<ECPoint<Rat>> points;
    GramMatrix gram;
    Verdict verdict = Verdict::inconclusive;
    std::vector<long> relation;  // nonempty iff verdict == dependent
    long prec_bits = 0;
};

const char* verdict_name(Verdict v);

// Canonical-height computations on one curve, sharing the minimal model and
// the discriminant factorization across all point queries.
class CurveHeights {
public:
    CurveHeights(ShortW<Rat> e, HeightOptions opt = {});

    const MinimalModelData& minimal() const { return md_; }
    const ShortW<Rat>& curve() const { return e_; }

    ApproxReal height(const ECPoint<Rat>& p) const;
    ApproxReal pairing(const ECPoint<Rat>& p, const ECPoint<Rat>& q) const;
    GramMatrix gram(const std::vector<ECPoint<Rat>>& pts) const;
    RankCertificate certificate(const std::vector<ECPoint<Rat>>& pts) const;

    // archimedean local height of the point with given x-coordinate on the
    // minimal model, half convention, no discriminant term
    ApproxReal archimedean_lambda(const Rat& x) const;

private:
    ApproxReal finite_corrections(const ECPoint<Rat>& pmin) const;
    std::optional<Rat> correction_at(const ECPoint<Rat>& pmin, const BigInt& p,
                                     unsigned n_disc) const;

    ShortW<Rat> e_;
    HeightOptions opt_;
    MinimalModelData md_;
    mpfr_prec_t wp_;  // working precision
};

ApproxReal det_interval(const std::vector<std::vector<ApproxReal>>& m);

// Spec-level convenience wrappers.
ApproxReal canonical_height(const ShortW<Rat>& e, const ECPoint<Rat>& p,
                            long prec_bits = 128, bool doubled = false);
ApproxReal neron_tate_pairing(const ShortW<Rat>& e, const ECPoint<Rat>& p,
                              const ECPoint<Rat>& q, long prec_bits = 128);
GramMatrix gram_determinant(const ShortW<Rat>& e, const std::vector<ECPoint<Rat>>& pts,
                            long prec_bits = 128);
RankCertificate independence_certificate(const ShortW<Rat>& e,
                                         const std::vector<ECPoint<Rat>>& pts,
                                         long prec_bits = 128);

}  // namespace mestre

#endif
