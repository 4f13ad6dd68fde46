#include "mestre/height.hpp"

#include <algorithm>
#include <stdexcept>

namespace mestre {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::independent: return "independent";
        case Verdict::dependent: return "dependent";
        default: return "inconclusive";
    }
}

CurveHeights::CurveHeights(ShortW<Rat> e, HeightOptions opt)
    : e_(std::move(e)),
      opt_(opt),
      md_(minimal_model(e_, opt.factor)),
      wp_(static_cast<mpfr_prec_t>(opt.prec_bits) + 64) {}

// ---------------------------------------------------------------------------
// Archimedean local height via Tate's series in the two-branch form
//   lambda(P) = -(1/2) log|t0| + (1/2) sum_{n>=0} 4^{-n-1} log|zeta_n|,
// with t = 1/x on one branch and t = 1/(x+1) on the other, switching so that
// |t| stays <= 2; zeta_n is the denominator used by the duplication step
// t -> w(t)/z(t). Every term is then bounded and the tail geometric. The
// whole iteration runs in midpoint-radius arithmetic, so the returned error
// bound covers the floating-point drift of the iteration itself.
// ---------------------------------------------------------------------------
ApproxReal CurveHeights::archimedean_lambda(const Rat& x) const {
    const LongW& m = md_.model;
    WTransform shift;  // x = x' - 1: the 1/(x+1) branch runs on this model
    shift.r = -1;
    LongW ms = shift.apply(m);

    auto coef = [&](const Rat& q) { return ApproxReal::exact_rat(q, wp_); };
    const ApproxReal b2A[2] = {coef(m.b2()), coef(ms.b2())};
    const ApproxReal b4A[2] = {coef(m.b4()), coef(ms.b4())};
    const ApproxReal b6A[2] = {coef(m.b6()), coef(ms.b6())};
    const ApproxReal b8A[2] = {coef(m.b8()), coef(ms.b8())};
    const ApproxReal one = coef(Rat(1));
    const ApproxReal four = coef(Rat(4));

    bool beta = !(abs(x) < Rat(1, 2));
    Rat t0 = beta ? Rat(Rat(1) / x) : Rat(Rat(1) / (x + 1));
    ApproxReal lam = log_abs_rat(t0, wp_).scale_rat(Rat(-1, 2));

    ApproxReal t = ApproxReal::exact_rat(t0, wp_);
    ApproxReal mu = ApproxReal::zero(wp_);
    const long N = opt_.prec_bits / 2 + 24;
    Rat four_pow(1, 4);
    double max_logz = 1.0;
    long n = 0;
    for (; n < N; ++n) {
        int b = beta ? 0 : 1;
        ApproxReal w =
            t * (four + t * (b2A[b] + t * (b4A[b].scale_rat(2) + t * b6A[b])));
        ApproxReal z =
            one - t * t * (b4A[b] + t * (b6A[b].scale_rat(2) + t * b8A[b]));
        bool switching = false;
        {
            Real aw = w.value.abs();
            Real az2 = z.value.abs() + z.value.abs();
            switching = az2 < aw;
        }
        ApproxReal zeta = !switching ? z : (beta ? z + w : z - w);
        if (zeta.contains_zero()) {
            max_logz += 60.0;  // cannot bound the remaining terms tightly
            break;
        }
        ApproxReal lz = zeta.log_abs();
        mu = mu + lz.scale_rat(four_pow);
        max_logz = std::max(max_logz, std::abs(lz.value_d()));
        t = w / zeta;
        if (switching) beta = !beta;
        four_pow /= 4;
    }
    // geometric tail bound: (1/2) * sum_{k>=n} 4^{-k-1} * max|log zeta|
    ApproxReal tail{wp_};
    Real bound(64);
    mpfr_set_d(bound.raw(), (max_logz + 8.0) / 6.0, MPFR_RNDU);
    Real scale(64);
    mpfr_set_ui_2exp(scale.raw(), 1, -2 * n, MPFR_RNDU);
    tail.err = bound * scale;
    return lam + mu.scale_rat(Rat(1, 2)) + tail;
}

namespace {

// numerator of a rational that is p-integral (den coprime to p)
BigInt p_integral_num(const Rat& q, const BigInt& p) {
    if (mpz_divisible_p(den(q).get_mpz_t(), p.get_mpz_t()))
        throw std::logic_error("p_integral_num: value not p-integral");
    return num(q);
}

struct PointData {
    Rat A, B, C;  // 3x^2+2a2x+a4-a1y, psi2 = 2y+a1x+a3, psi3 numerator
};

PointData point_invariants(const LongW& m, const ECPoint<Rat>& p) {
    const Rat& x = p.x;
    const Rat& y = p.y;
    PointData d;
    d.A = 3 * x * x + 2 * m.a2 * x + m.a4 - m.a1 * y;
    d.B = 2 * y + m.a1 * x + m.a3;
    d.C = 3 * x * x * x * x + m.b2() * x * x * x + 3 * m.b4() * x * x + 3 * m.b6() * x +
          m.b8();
    return d;
}

}  // namespace

// Correction to the naive finite part at a bad prime, as an exact rational
// multiple of log p (half-x-height convention), or nullopt when the point
// has nonsingular reduction there. Standard case analysis on the minimal
// model: multiplicative reduction uses the component pairing
// -(1/2) n(N-n)/N with n = min(v(psi2), N/2); additive reduction uses
// -v(psi2)/3 or -v(psi3)/8 according to v(psi3) >= 3 v(psi2).
std::optional<Rat> CurveHeights::correction_at(const ECPoint<Rat>& pmin, const BigInt& p,
                                               unsigned n_disc) const {
    const LongW& m = md_.model;
    if (mpz_divisible_p(den(pmin.x).get_mpz_t(), p.get_mpz_t()))
        return std::nullopt;  // reduces to the origin: nonsingular
    PointData d = point_invariants(m, pmin);
    bool singular =
        mpz_divisible_p(p_integral_num(d.A, p).get_mpz_t(), p.get_mpz_t()) &&
        mpz_divisible_p(p_integral_num(d.B, p).get_mpz_t(), p.get_mpz_t());
    if (!singular) return std::nullopt;

    bool mult = num(m.c4()) != 0 && valuation(num(m.c4()), p) == 0;
    if (mult) {
        Rat nn(n_disc);
        Rat vB = d.B == 0 ? nn / 2 : Rat(valuation(p_integral_num(d.B, p), p));
        Rat mcomp = std::min(vB, Rat(nn / 2));
        return -(mcomp * (nn - mcomp)) / (2 * nn);
    }
    // additive
    bool vB_inf = d.B == 0;
    bool vC_inf = d.C == 0;
    if (vB_inf && vC_inf)
        throw std::logic_error("correction_at: psi2 = psi3 = 0 impossible");
    if (vC_inf) return -Rat(valuation(p_integral_num(d.B, p), p)) / 3;
    if (vB_inf) return -Rat(valuation(p_integral_num(d.C, p), p)) / 8;
    unsigned vB = valuation(p_integral_num(d.B, p), p);
    unsigned vC = valuation(p_integral_num(d.C, p), p);
    if (vC >= 3 * vB) return -Rat(vB) / 3;
    return -Rat(vC) / 8;
}

ApproxReal CurveHeights::finite_corrections(const ECPoint<Rat>& pmin) const {
    ApproxReal acc = ApproxReal::zero(wp_);
    const FactoredInt& fd = md_.disc_factored;
    for (const auto& [p, ed] : fd.factors) {
        if (ed < 2) continue;  // trivial component group: no correction possible
        auto c = correction_at(pmin, p, ed);
        if (c) acc = acc + log_abs_int(p, wp_).scale_rat(*c);
    }
    if (!fd.complete()) {
        // unfactored cofactor: all its primes exceed the trial bound. A
        // correction there would require the point to reduce to the singular
        // locus, i.e. the prime divides both partial derivatives; check by gcd
        // and split further only when that actually happens.
        BigInt rest = fd.cofactor;
        BigInt g = gcd(rest, den(pmin.x));  // those primes reduce to the origin
        while (g > 1) {
            rest /= g;
            g = gcd(rest, g);
        }
        if (rest > 1) {
            PointData d = point_invariants(md_.model, pmin);
            BigInt gA = d.A == 0 ? rest : gcd(rest, num(d.A));
            BigInt gB = d.B == 0 ? rest : gcd(rest, num(d.B));
            BigInt bad = gcd(gA, gB);
            if (bad > 1) {
                // a genuinely singular reduction at an unsplit prime: resolve
                // just that divisor, or surface the budget failure honestly
                FactorOptions fo = opt_.factor;
                fo.throw_on_budget = true;
                FactoredInt split = factor_integer(bad, fo);
                for (const auto& [p, e_ignored] : split.factors) {
                    (void)e_ignored;
                    unsigned nd = valuation(md_.disc, p);
                    auto c = correction_at(pmin, p, nd);
                    if (c) acc = acc + log_abs_int(p, wp_).scale_rat(*c);
                }
            }
        }
    }
    return acc;
}

ApproxReal CurveHeights::height(const ECPoint<Rat>& p) const {
    if (p.infinity) return ApproxReal::zero(wp_);
    if (!on_curve(e_, p)) throw std::invalid_argument("height: point not on curve");
    ECPoint<Rat> pm = md_.to_minimal.fwd_point(p);
    if (!md_.model.contains(pm)) throw std::logic_error("height: transform failed");
    ApproxReal lam = archimedean_lambda(pm.x);
    ApproxReal denpart = log_abs_int(den(pm.x), wp_).scale_rat(Rat(1, 2));
    ApproxReal h = lam + denpart + finite_corrections(pm);
    if (opt_.doubled_convention) h = h.scale_rat(Rat(2));
    return h;
}

ApproxReal CurveHeights::pairing(const ECPoint<Rat>& p, const ECPoint<Rat>& q) const {
    ECPoint<Rat> s = add(e_, p, q);
    return (height(s) - height(p) - height(q)).scale_rat(Rat(1, 2));
}

GramMatrix CurveHeights::gram(const std::vector<ECPoint<Rat>>& pts) const {
    const size_t n = pts.size();
    if (n == 0) throw std::invalid_argument("gram: need at least one point");
    std::vector<ApproxReal> hs;
    hs.reserve(n);
    for (const auto& p : pts) hs.push_back(height(p));
    GramMatrix g;
    g.entries.assign(n, std::vector<ApproxReal>(n, ApproxReal::zero(wp_)));
    for (size_t i = 0; i < n; ++i) {
        g.entries[i][i] = hs[i];
        for (size_t j = i + 1; j < n; ++j) {
            ApproxReal hsum = height(add(e_, pts[i], pts[j]));
            ApproxReal v = (hsum - hs[i] - hs[j]).scale_rat(Rat(1, 2));
            g.entries[i][j] = v;
            g.entries[j][i] = v;
        }
    }
    g.determinant = det_interval(g.entries);
    return g;
}

// Exact cofactor expansion; n <= 6 throughout this project.
ApproxReal det_interval(const std::vector<std::vector<ApproxReal>>& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    ApproxReal acc = ApproxReal::zero(m[0][0].value.prec());
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<ApproxReal>> sub;
        sub.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<ApproxReal> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        ApproxReal term = m[0][j] * det_interval(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

RankCertificate CurveHeights::certificate(const std::vector<ECPoint<Rat>>& pts) const {
    RankCertificate cert{e_, pts, gram(pts), Verdict::inconclusive, {}, opt_.prec_bits};
    if (cert.gram.determinant.definitely_nonzero()) {
        cert.verdict = Verdict::independent;
        return cert;
    }
    // determinant interval straddles zero: look for an exact small relation
    const long BOUND = 8;
    const size_t n = pts.size();
    std::vector<long> c(n, 0);
    auto verify = [&]() {
        ECPoint<Rat> s = ECPoint<Rat>::inf();
        for (size_t i = 0; i < n; ++i)
            s = add(e_, s, scalar_mul(e_, c[i], pts[i]));
        return s.infinity;
    };
    if (n <= 3) {
        // full box search
        std::vector<long> idx(n, -BOUND);
        while (true) {
            c.assign(idx.begin(), idx.end());
            bool all0 = std::all_of(c.begin(), c.end(), [](long v) { return v == 0; });
            if (!all0 && verify()) {
                cert.verdict = Verdict::dependent;
                cert.relation = c;
                return cert;
            }
            size_t k = 0;
            while (k < n && ++idx[k] > BOUND) idx[k++] = -BOUND;
            if (k == n) break;
        }
    } else {
        // pairs only; enough for detecting duplicated/doubled points
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                for (long a = -BOUND; a <= BOUND; ++a)
                    for (long b = -BOUND; b <= BOUND; ++b) {
                        if (a == 0 && b == 0) continue;
                        c.assign(n, 0);
                        c[i] = a;
                        c[j] = b;
                        if (verify()) {
                            cert.verdict = Verdict::dependent;
                            cert.relation = c;
                            return cert;
                        }
                    }
    }
    return cert;
}

ApproxReal canonical_height(const ShortW<Rat>& e, const ECPoint<Rat>& p, long prec_bits,
                            bool doubled) {
    HeightOptions o;
    o.prec_bits = prec_bits;
    o.doubled_convention = doubled;
    return CurveHeights(e, o).height(p);
}
ApproxReal neron_tate_pairing(const ShortW<Rat>& e, const ECPoint<Rat>& p,
                              const ECPoint<Rat>& q, long prec_bits) {
    HeightOptions o;
    o.prec_bits = prec_bits;
    return CurveHeights(e, o).pairing(p, q);
}
GramMatrix gram_determinant(const ShortW<Rat>& e, const std::vector<ECPoint<Rat>>& pts,
                            long prec_bits) {
    HeightOptions o;
    o.prec_bits = prec_bits;
    return CurveHeights(e, o).gram(pts);
}
RankCertificate independence_certificate(const ShortW<Rat>& e,
                                         const std::vector<ECPoint<Rat>>& pts,
                                         long prec_bits) {
    HeightOptions o;
    o.prec_bits = prec_bits;
    return CurveHeights(e, o).certificate(pts);
}

}  // namespace mestre
