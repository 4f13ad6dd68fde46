#include "mestre/minmodel.hpp"

#include <algorithm>
#include <stdexcept>

namespace mestre {

bool LongW::integral() const {
    for (const Rat* a : {&a1, &a2, &a3, &a4, &a6})
        if (den(*a) != 1) return false;
    return true;
}

LongW WTransform::apply(const LongW& e) const {
    // Silverman III.3.1 transformation table
    Rat u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    LongW o;
    o.a1 = (e.a1 + 2 * s) / u;
    o.a2 = (e.a2 - s * e.a1 + 3 * r - s * s) / u2;
    o.a3 = (e.a3 + r * e.a1 + 2 * t) / u3;
    o.a4 = (e.a4 - s * e.a3 + 2 * r * e.a2 - (t + r * s) * e.a1 + 3 * r * r - 2 * s * t) / u4;
    o.a6 = (e.a6 + r * e.a4 + r * r * e.a2 + r * r * r - t * e.a3 - t * t - r * t * e.a1) / u6;
    return o;
}

ECPoint<Rat> WTransform::fwd_point(const ECPoint<Rat>& p) const {
    if (p.infinity) return p;
    Rat xp = (p.x - r) / (u * u);
    Rat yp = (p.y - s * (p.x - r) - t) / (u * u * u);
    return ECPoint<Rat>(xp, yp);
}

WTransform WTransform::then(const WTransform& w2) const {
    WTransform c;
    c.u = u * w2.u;
    c.r = r + u * u * w2.r;
    c.s = s + u * w2.s;
    c.t = t + u * u * w2.r * s + u * u * u * w2.t;
    return c;
}

namespace {

bool kraus_at_2(const BigInt& c4, const BigInt& c6) {
    BigInt c6m4 = ((c6 % 4) + 4) % 4;
    if (c6m4 == 3) return true;
    BigInt c4m16 = ((c4 % 16) + 16) % 16;
    BigInt c6m32 = ((c6 % 32) + 32) % 32;
    return c4m16 == 0 && (c6m32 == 0 || c6m32 == 8);
}

bool kraus_at_3(const BigInt& c6) {
    return c6 == 0 || valuation(c6, 3) != 2;
}

}  // namespace

bool kraus_ok(const BigInt& c4, const BigInt& c6) {
    return kraus_at_2(c4, c6) && kraus_at_3(c6);
}

std::optional<LongW> model_from_c4c6(const BigInt& c4, const BigInt& c6) {
    if (!kraus_ok(c4, c6)) return std::nullopt;
    // reduced models have a1, a3 in {0,1} and a2 in {-1,0,1}; search that box
    for (int a1 = 0; a1 <= 1; ++a1)
        for (int a2 = -1; a2 <= 1; ++a2)
            for (int a3 = 0; a3 <= 1; ++a3) {
                BigInt b2 = a1 * a1 + 4 * a2;
                BigInt nb4 = b2 * b2 - c4;
                if (nb4 % 24 != 0) continue;
                BigInt b4 = nb4 / 24;
                BigInt nb6 = -b2 * b2 * b2 + 36 * b2 * b4 - c6;
                if (nb6 % 216 != 0) continue;
                BigInt b6 = nb6 / 216;
                BigInt na4 = b4 - a1 * a3;
                BigInt na6 = b6 - a3 * a3;
                if (na4 % 2 != 0 || na6 % 4 != 0) continue;
                LongW m;
                m.a1 = Rat(a1);
                m.a2 = Rat(a2);
                m.a3 = Rat(a3);
                m.a4 = Rat(na4 / 2);
                m.a6 = Rat(na6 / 4);
                if (num(m.c4()) == c4 && num(m.c6()) == c6 && m.disc() != 0) return m;
            }
    return std::nullopt;
}

namespace {

// least positive integer n with n^4 A and n^6 B integral
BigInt clearing_scale(const Rat& A, const Rat& B, const FactorOptions& fopt) {
    BigInt dA = den(A), dB = den(B);
    if (dA == 1 && dB == 1) return 1;
    BigInt n = 1;
    FactorOptions f = fopt;
    f.throw_on_budget = false;
    FactoredInt fa = factor_integer(dA * dB, f);
    for (const auto& pp : fa.factors) {
        unsigned va = valuation(dA, pp.prime), vb = valuation(dB, pp.prime);
        unsigned ep = std::max((va + 3) / 4, (vb + 5) / 6);
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), ep);
        n *= pe;
    }
    if (!fa.complete())  // crude but correct fallback for the unsplit part
        n *= block_part(dA, fa.cofactor) * block_part(dB, fa.cofactor);
    return n;
}

BigInt pow_bi(const BigInt& p, unsigned e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

}  // namespace

MinimalModelData minimal_model(const ShortW<Rat>& e, const FactorOptions& fopt) {
    // step 1: integral short model via x -> x/n^2, y -> y/n^3
    BigInt n = clearing_scale(e.A, e.B, fopt);
    WTransform t_int;
    t_int.u = Rat(1, n);
    LongW ei;
    ei.a1 = 0; ei.a2 = 0; ei.a3 = 0;
    ei.a4 = e.A * Rat(pow_bi(n, 4));
    ei.a6 = e.B * Rat(pow_bi(n, 6));
    if (!ei.integral()) throw std::logic_error("minimal_model: clearing failed");

    BigInt c4 = num(ei.c4()), c6 = num(ei.c6()), disc = num(ei.disc());

    FactorOptions f2 = fopt;
    f2.throw_on_budget = false;
    FactoredInt fd = factor_integer(disc, f2);

    // step 2: largest admissible u from the factored primes
    BigInt u_red = 1;
    for (const auto& [p, ed] : fd.factors) {
        unsigned ep = ed / 12;
        if (c4 != 0) ep = std::min(ep, valuation(c4, p) / 4);
        if (c6 != 0) ep = std::min(ep, valuation(c6, p) / 6);
        if (p == 2)
            while (ep > 0 && !kraus_at_2(c4 / pow_bi(p, 4 * ep), c6 / pow_bi(p, 6 * ep))) --ep;
        if (p == 3)
            while (ep > 0 && !kraus_at_3(c6 / pow_bi(p, 6 * ep))) --ep;
        if (ep > 0) u_red *= pow_bi(p, ep);
    }
    if (!fd.complete()) {
        // an unfactored cofactor could only hide a u-candidate if some prime
        // of it divided disc to the 12th power; primes there exceed the trial
        // bound 10^5, so the block part of disc must reach (10^5)^12 first
        BigInt part = block_part(disc, fd.cofactor);
        BigInt bound = pow_bi(BigInt(100000), 12);
        if (part >= bound) throw FactorBudgetExceeded(fd);
    }

    auto mm = model_from_c4c6(c4 / pow_bi(u_red, 4), c6 / pow_bi(u_red, 6));
    if (!mm) throw std::logic_error("minimal_model: Connell reconstruction failed");

    // step 3: the transform integral -> minimal (u fixed; r, s, t forced)
    WTransform t_red;
    t_red.u = Rat(u_red);
    t_red.s = Rat(u_red) * mm->a1 / 2;
    t_red.r = (Rat(u_red * u_red) * mm->b2() - ei.b2()) / 12;
    t_red.t = (Rat(u_red * u_red * u_red) * mm->a3 - ei.a3 - t_red.r * ei.a1) / 2;
    {
        LongW check = t_red.apply(ei);
        if (!(check.a1 == mm->a1 && check.a2 == mm->a2 && check.a3 == mm->a3 &&
              check.a4 == mm->a4 && check.a6 == mm->a6))
            throw std::logic_error("minimal_model: transform reconstruction failed");
    }

    MinimalModelData out{*mm, t_int.then(t_red), {}, 0};
    out.disc = num(mm->disc());

    FactoredInt fmin;
    fmin.sign = fd.sign;
    fmin.cofactor = fd.cofactor;
    for (const auto& [p, ed] : fd.factors) {
        unsigned drop = 12 * valuation(u_red, p);
        if (ed > drop) fmin.factors.push_back({p, ed - drop});
    }
    if (fmin.reassemble() != out.disc) throw std::logic_error("minimal_model: disc bookkeeping");
    out.disc_factored = fmin;
    return out;
}

}  // namespace mestre
