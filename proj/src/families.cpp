#include "mestre/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "mestre/polyfp.hpp"
#include "mestre/quadext.hpp"

namespace mestre {

namespace {

RatFuncQ tvar() { return RatFuncQ::x(); }

// evaluate a rational function at t0, nullopt if a denominator vanishes
std::optional<Rat> ev(const RatFuncQ& f, const Rat& t0) { return f.eval_at(t0); }

void push_excluded(std::vector<PolyQ>& out, const PolyQ& p) {
    if (p.degree() >= 1) out.push_back(p);
}

}  // namespace

TwistFamily twist_family(const Rat& j) {
    CoverSpec cov = cover_for_invariant(j);
    const Rat a = cov.E.A, b = cov.E.B;

    // group law over Q(t)(sqrt f)
    using L = QuadExt<RatFuncQ>;
    RatFuncQ f(cov.F_cleared);
    ShortW<L> el{L(RatFuncQ(a)), L(RatFuncQ(b))};

    TwistFamily fam{j, cov.E, cov.F_cleared, {}, {}, {}, {}, true, {}};
    fam.A = RatFuncQ(a) * f * f;
    fam.B = RatFuncQ(b) * f * f * f;
    ShortW<RatFuncQ> ew(fam.A, fam.B);

    const CoverMap* maps[2] = {&cov.rho, &cov.rho_prime};
    ECPoint<RatFuncQ>* outs[2] = {&fam.P1, &fam.P2};
    for (int i = 0; i < 2; ++i) {
        // p_i o w - p_i = 2 (x_i(t), -m_i(t) Y), computed by the group law
        L x(maps[i]->x_map);
        L y(RatFuncQ(0), -maps[i]->y_mult, f);
        ECPoint<L> p(x, y);
        if (!on_curve(el, p))
            throw std::logic_error("twist_family: cover map point off E over Q(t)(sqrt f)");
        ECPoint<L> r = scalar_mul(el, 2, p);
        if (r.infinity) throw std::logic_error("twist_family: degenerate doubled point");
        // Galois-antisymmetric shape: x in Q(t), y in Y * Q(t)
        if (!r.x.rational() || !r.y.pure())
            throw std::logic_error("twist_family: point lacks the antisymmetric shape");
        RatFuncQ xi = r.x.a(), eta = r.y.b();
        ECPoint<RatFuncQ> tw(f * xi, f * f * eta);
        if (!on_curve(ew, tw))
            throw std::logic_error("twist_family: twisted point off the twisted curve");
        *outs[i] = tw;
    }

    // isotriviality: f up to squares in the generic case, A up to 4th powers
    // for j = 1728, B up to 6th powers for j = 0
    if (a != 0 && b != 0)
        fam.isotrivial = is_nth_power_up_to_constant(f, 2);
    else if (b == 0)
        fam.isotrivial = is_nth_power_up_to_constant(fam.A, 4);
    else
        fam.isotrivial = is_nth_power_up_to_constant(fam.B, 6);

    push_excluded(fam.excluded_polys, fam.f);
    for (const auto* p : {&fam.P1, &fam.P2}) {
        push_excluded(fam.excluded_polys, p->x.den());
        push_excluded(fam.excluded_polys, p->y.den());
    }
    return fam;
}

QuarticFamily euler_family_1728() {
    RatFuncQ t = tvar();
    RatFuncQ two_t2_m1 = RatFuncQ(2) * t * t - RatFuncQ(1);
    RatFuncQ two_t2_p1 = RatFuncQ(2) * t * t + RatFuncQ(1);
    RatFuncQ x1 = t * two_t2_m1 / two_t2_p1;
    RatFuncQ x2 = two_t2_m1 / (RatFuncQ(2) * t * two_t2_p1);
    RatFuncQ x3 = RatFuncQ(4) * t / two_t2_m1;
    RatFuncQ x4 = -x1 - x2 - x3;

    // Euler's identity x1 x2 x3 (x1+x2+x3) = u^4 with u = 1
    if (!(x1 * x2 * x3 * (x1 + x2 + x3) == RatFuncQ(1)))
        throw std::logic_error("euler_family_1728: Euler identity failed");

    Poly<RatFuncQ> prod{RatFuncQ(1)};
    Poly<RatFuncQ> X = Poly<RatFuncQ>::x();
    for (const RatFuncQ& xi : {x1, x2, x3, x4}) prod = prod * (X - Poly<RatFuncQ>(xi));
    if (!(prod[3] == RatFuncQ(0)))
        throw std::logic_error("euler_family_1728: root sum not zero");

    QuarticModel<RatFuncQ> model;
    model.roots = {x1, x2, x3, x4};
    model.u = RatFuncQ(1);
    model.a0 = prod[0];
    model.a1 = prod[1];
    model.a2 = prod[2];
    if (!(model.a0 == RatFuncQ(-1)))
        throw std::logic_error("euler_family_1728: a0 != -1");

    QuarticFamily fam{model, quartic_to_weierstrass(model), false, {}};
    fam.non_isotrivial = !is_nth_power_up_to_constant(fam.transform.curve.A, 4);

    for (const auto& xi : model.roots) push_excluded(fam.excluded_polys, xi.den());
    push_excluded(fam.excluded_polys, fam.transform.curve.A.num());
    push_excluded(fam.excluded_polys, fam.transform.curve.A.den());
    for (const auto& img : fam.transform.images) {
        push_excluded(fam.excluded_polys, img.x.den());
        push_excluded(fam.excluded_polys, img.y.den());
    }
    return fam;
}

CubicFamily sextic_family_0() {
    PolyQ T = PolyQ::x();
    auto lin = [&](long c1, long c0) { return PolyQ(std::vector<Rat>{Rat(c0), Rat(c1)}); };
    PolyQ x1 = Rat(-126) * (lin(35, -19) * lin(14, -13) * lin(1, 1));
    PolyQ x3 = -x1;
    PolyQ x4 = Rat(63) * PolyQ(std::vector<Rat>{Rat(-988), Rat(3525), Rat(-3108), Rat(1127)});
    PolyQ x5(std::vector<Rat>{Rat(69103), Rat(-259980), Rat(265629), Rat(-113876)});
    PolyQ x6(std::vector<Rat>{Rat(-78364), Rat(232197), Rat(-293412), Rat(104615)});

    // x2 with the garbled coefficient solved from sum x_i = 0, trying each
    // monomial placement for the unknown; the paper's display points at t^2
    PolyQ x2_base = Rat(63) * PolyQ(std::vector<Rat>{Rat(1135), Rat(-3084), Rat(0), Rat(-980)});
    PolyQ known_sum = x1 + x2_base + x3 + x4 + x5 + x6;
    PolyQ x2;
    Rat c_solved;
    bool repaired = false;
    for (int dcand : {2, 3, 1, 0}) {
        // x2 = x2_base + 63 c t^dcand; need 63 c = -coeff of known_sum at dcand
        Rat c = -known_sum[dcand] / 63;
        PolyQ cand = x2_base + PolyQ::monomial(63 * c, dcand);
        PolyQ total = x1 + cand + x3 + x4 + x5 + x6;
        if (total.zero()) {
            x2 = cand;
            c_solved = c;
            repaired = true;
            break;
        }
    }
    if (!repaired)
        throw std::logic_error(
            "sextic_family_0: no monomial placement of the garbled coefficient "
            "satisfies sum x_i = 0");

    std::vector<PolyQ> xs = {x1, x2, x3, x4, x5, x6};
    std::vector<RatFuncQ> roots;
    Poly<RatFuncQ> prod{RatFuncQ(1)};
    Poly<RatFuncQ> X = Poly<RatFuncQ>::x();
    for (const PolyQ& xi : xs) {
        roots.push_back(RatFuncQ(xi));
        prod = prod * (X - Poly<RatFuncQ>(RatFuncQ(xi)));
    }
    auto model = CubicYModel<RatFuncQ>::from_p(prod, roots);

    CubicFamily fam{xs, c_solved, model, cubic_y3_to_weierstrass(model), {}, {},
                    false, std::nullopt, {}};

    RatFuncQ Dr = poly_discriminant(model.r);
    if (!Dr.is_polynomial())
        throw std::logic_error("sextic_family_0: disc(r) not a polynomial in t");
    fam.D = Dr.num();

    RatFuncQ a3 = model.r.lc();
    auto uroot = nth_root_ratfunc(a3, 3);
    if (!uroot || !uroot->is_polynomial() || uroot->num().degree() != 1)
        throw std::logic_error("sextic_family_0: a3 is not the cube of a linear polynomial");
    fam.a3_cuberoot = uroot->num();

    fam.non_isotrivial = !is_nth_power_up_to_constant(Dr, 6);
    fam.irreducibility_prime = irreducibility_witness(fam.D, 200);

    push_excluded(fam.excluded_polys, fam.D);
    for (const auto& img : fam.transform.images) {
        push_excluded(fam.excluded_polys, img.x.den());
        push_excluded(fam.excluded_polys, img.y.den());
    }
    push_excluded(fam.excluded_polys, fam.transform.curve.B.num());
    push_excluded(fam.excluded_polys, fam.transform.curve.B.den());
    return fam;
}

void clear_to_integral(ShortW<Rat>& e, std::vector<ECPoint<Rat>>& pts,
                       const FactorOptions& fopt) {
    BigInt dA = den(e.A), dB = den(e.B);
    if (dA == 1 && dB == 1) return;
    FactorOptions f = fopt;
    f.throw_on_budget = false;
    FactoredInt fd = factor_integer(dA * dB, f);
    BigInt u = 1;
    for (const auto& pp : fd.factors) {
        unsigned va = valuation(dA, pp.prime), vb = valuation(dB, pp.prime);
        unsigned ep = std::max((va + 3) / 4, (vb + 5) / 6);
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), ep);
        u *= pe;
    }
    if (!fd.complete()) u *= block_part(dA, fd.cofactor) * block_part(dB, fd.cofactor);
    Rat u2(u * u), u4 = u2 * u2, u6 = u4 * u2;
    ShortW<Rat> cleared(e.A * u4, e.B * u6);
    for (auto& p : pts) {
        if (p.infinity) continue;
        p = ECPoint<Rat>(p.x * u2, p.y * u2 * Rat(u));
    }
    e = cleared;
    for (const auto& p : pts)
        if (!on_curve(e, p)) throw std::logic_error("clear_to_integral: point lost");
}

namespace {

SpecializedCurve specialize_common(const std::string& name, const Rat& j, const Rat& t0,
                                   const RatFuncQ& A, const RatFuncQ& B,
                                   const std::vector<ECPoint<RatFuncQ>>& pts) {
    SpecializedCurve out{name, j, t0, std::nullopt, {}, ""};
    auto a0 = ev(A, t0), b0 = ev(B, t0);
    if (!a0 || !b0) {
        out.excluded_reason = "curve coefficients undefined at t0";
        return out;
    }
    Rat dsc = 4 * *a0 * *a0 * *a0 + 27 * *b0 * *b0;
    if (dsc == 0) {
        out.excluded_reason = "discriminant vanishes at t0";
        return out;
    }
    ShortW<Rat> e(*a0, *b0);
    std::vector<ECPoint<Rat>> qpts;
    for (const auto& p : pts) {
        if (p.infinity) {
            out.excluded_reason = "a family point degenerates to the identity";
            return out;
        }
        auto x = ev(p.x, t0), y = ev(p.y, t0);
        if (!x || !y) {
            out.excluded_reason = "a family point is undefined at t0";
            return out;
        }
        ECPoint<Rat> q(*x, *y);
        if (!on_curve(e, q)) throw std::logic_error("specialize: point off curve");
        qpts.push_back(q);
    }
    clear_to_integral(e, qpts);
    out.curve = e;
    out.points = std::move(qpts);
    return out;
}

}  // namespace

SpecializedCurve specialize(const TwistFamily& fam, const Rat& t0) {
    auto f0 = fam.f.eval<Rat>(t0);
    if (f0 == 0) {
        SpecializedCurve out{"twist", fam.j, t0, std::nullopt, {}, "f(t0) = 0 degenerates the twist"};
        return out;
    }
    if (rat_is_square(f0)) {
        SpecializedCurve out{"twist", fam.j, t0, std::nullopt, {},
                             "f(t0) is a rational square: twist trivializes"};
        return out;
    }
    return specialize_common("twist", fam.j, t0, fam.A, fam.B, {fam.P1, fam.P2});
}

SpecializedCurve specialize(const QuarticFamily& fam, const Rat& t0) {
    return specialize_common("euler1728", Rat(1728), t0, fam.transform.curve.A,
                             fam.transform.curve.B, fam.transform.images);
}

SpecializedCurve specialize(const CubicFamily& fam, const Rat& t0) {
    return specialize_common("sextic0", Rat(0), t0, fam.transform.curve.A,
                             fam.transform.curve.B, fam.transform.images);
}

RankCertificate certify(const SpecializedCurve& spec, long prec_bits,
                        const FactorOptions& fopt) {
    if (spec.excluded()) throw std::invalid_argument("certify: excluded specialization");
    HeightOptions o;
    o.prec_bits = prec_bits;
    o.factor = fopt;
    CurveHeights ch(*spec.curve, o);
    return ch.certificate(spec.points);
}

std::vector<std::vector<size_t>> distinct_classes(const std::vector<SpecializedCurve>& specs) {
    std::vector<std::vector<size_t>> classes;
    for (size_t i = 0; i < specs.size(); ++i) {
        if (specs[i].excluded()) continue;
        bool placed = false;
        for (auto& cls : classes) {
            if (isomorphic_over_Q(*specs[cls[0]].curve, *specs[i].curve)) {
                cls.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i});
    }
    return classes;
}

}  // namespace mestre
