#include <sstream>

#include "mestre/factor.hpp"
#include "mestre/poly.hpp"
#include "mestre/polyfp.hpp"
#include "mestre/ratfunc.hpp"

namespace mestre {

namespace {

using ZPoly = std::vector<BigInt>;

ZPoly to_primitive_z(const PolyQ& p) {
    BigInt l = 1;
    for (int i = 0; i <= p.degree(); ++i) l = lcm(l, den(p[i]));
    ZPoly z(p.degree() + 1);
    BigInt content = 0;
    for (int i = 0; i <= p.degree(); ++i) {
        z[i] = num(p[i]) * (l / den(p[i]));
        content = gcd(content, z[i]);
    }
    if (content > 1)
        for (auto& c : z) c /= content;
    return z;
}

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void z_make_primitive(ZPoly& a) {
    BigInt content = 0;
    for (const auto& c : a) content = gcd(content, c);
    if (content > 1)
        for (auto& c : a) c /= content;
}

// pseudo-remainder: lc(b)^k * a mod b, fraction-free
ZPoly z_prem(ZPoly a, const ZPoly& b) {
    z_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        BigInt la = a.back(), lb = b.back();
        BigInt g = gcd(la, lb);
        BigInt ma = lb / g, mb = la / g;
        size_t shift = a.size() - b.size();
        for (auto& c : a) c *= ma;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= mb * b[i];
        z_trim(a);
    }
    return a;
}

}  // namespace

template <>
PolyQ poly_gcd<Rat>(PolyQ a, PolyQ b) {
    if (a.zero()) return b.zero() ? b : b.monic();
    if (b.zero()) return a.monic();
    ZPoly za = to_primitive_z(a), zb = to_primitive_z(b);
    if (za.size() < zb.size()) std::swap(za, zb);
    while (!zb.empty()) {
        ZPoly r = z_prem(za, zb);
        z_make_primitive(r);
        za = std::move(zb);
        zb = std::move(r);
    }
    std::vector<Rat> out(za.size());
    for (size_t i = 0; i < za.size(); ++i) out[i] = Rat(za[i]);
    return PolyQ(std::move(out)).monic();
}

std::optional<PolyQ> nth_root_poly(const PolyQ& p, unsigned n) {
    if (n == 0) throw std::invalid_argument("nth_root_poly: n must be positive");
    if (p.zero()) return PolyQ();
    if (n == 1) return p;
    if (p.degree() % static_cast<int>(n) != 0) return std::nullopt;
    auto dec = squarefree_decomposition(p);
    PolyQ q{Rat(1)};
    for (const auto& f : dec.factors) {
        if (f.multiplicity % n != 0) return std::nullopt;
        q = q * f.factor.pow(f.multiplicity / n);
    }
    auto c = rat_nth_root(dec.content, n);
    if (!c) return std::nullopt;
    q = *c * q;
    if (n % 2 == 0 && sgn(q.lc()) < 0) q = -q;  // can't happen with principal root, but cheap
    if (q.pow(n) != p) return std::nullopt;
    return q;
}

bool is_nth_power_up_to_constant(const RatFuncQ& h, unsigned n) {
    if (n == 0) throw std::invalid_argument("is_nth_power_up_to_constant: n must be positive");
    if (h.zero()) throw std::invalid_argument("is_nth_power_up_to_constant: h must be nonzero");
    for (const PolyQ* part : {&h.num(), &h.den()}) {
        if (part->degree() == 0) continue;
        for (const auto& f : squarefree_decomposition(*part).factors)
            if (f.multiplicity % n != 0) return false;
    }
    return true;
}

std::optional<RatFuncQ> nth_root_ratfunc(const RatFuncQ& h, unsigned n) {
    if (h.zero()) return std::nullopt;
    // pull the constant out so both parts are monic before rooting
    Rat c = h.num().lc();
    PolyQ nm = h.num().monic();
    auto rn = nth_root_poly(nm, n);
    auto rd = nth_root_poly(h.den(), n);
    auto rc = rat_nth_root(c, n);
    if (!rn || !rd || !rc) return std::nullopt;
    return RatFuncQ(*rc * *rn, *rd);
}

std::string ratfunc_to_string(const RatFuncQ& f, const std::string& var) {
    auto cs = +[](const Rat& q) { return rat_to_string(q); };
    std::string n = poly_to_string(f.num(), var, cs);
    if (f.den().degree() == 0) return n;
    return "(" + n + ") / (" + poly_to_string(f.den(), var, cs) + ")";
}

// ---- mod-p machinery ----

PolyFp::P PolyFp::trim(P a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

uint64_t PolyFp::inv(uint64_t a) const {
    // extended Euclid; p_ is prime and a != 0 mod p_
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p_), newr = static_cast<int64_t>(a % p_);
    while (newr != 0) {
        int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(p_) : t);
}

PolyFp::P PolyFp::reduce(const PolyQ& q) const {
    P out(q.degree() + 1, 0);
    for (int i = 0; i <= q.degree(); ++i) {
        const Rat& c = q[i];
        uint64_t dn = mpz_fdiv_ui(den(c).get_mpz_t(), p_);
        if (dn == 0) throw std::invalid_argument("PolyFp::reduce: p divides a denominator");
        uint64_t nm = mpz_fdiv_ui(num(c).get_mpz_t(), p_);
        out[i] = (nm * inv(dn)) % p_;
    }
    return trim(out);
}

PolyFp::P PolyFp::rem(P a, const P& b) const {
    a = trim(a);
    uint64_t li = inv(b.back());
    while (deg(a) >= deg(b)) {
        uint64_t c = (a.back() * li) % p_;
        int shift = deg(a) - deg(b);
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = (c * b[i]) % p_;
            uint64_t& t = a[i + shift];
            t = (t + p_ - sub) % p_;
        }
        a = trim(a);
        if (a.empty()) break;
    }
    return a;
}

PolyFp::P PolyFp::mulmod(const P& a, const P& b, const P& mod) const {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    return rem(trim(r), mod);
}

PolyFp::P PolyFp::powmod_x(const BigInt& e, const P& mod) const {
    P result{1};
    P base = rem(P{0, 1}, mod);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, mod);
    }
    return result;
}

PolyFp::P PolyFp::gcd(P a, P b) const {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        P r = rem(a, b);
        a = b;
        b = r;
    }
    return a;
}

bool PolyFp::irreducible(const P& f) const {
    int d = deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // f irreducible over F_q iff x^{q^d} == x mod f and for every prime l | d,
    // gcd(x^{q^{d/l}} - x, f) = 1.
    BigInt q = static_cast<unsigned long>(p_);
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool l_prime = true;
        for (int m = 2; m * m <= l; ++m)
            if (l % m == 0) { l_prime = false; break; }
        if (!l_prime) continue;
        BigInt e;
        mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d / l);
        P xq = powmod_x(e, f);
        // xq - x
        P diff = xq;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p_ - 1) % p_;
        P g = gcd(trim(diff), f);
        if (deg(g) > 0) return false;
    }
    BigInt e;
    mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d);
    P xq = powmod_x(e, f);
    P x = rem(P{0, 1}, f);
    return trim(xq) == trim(x);
}

std::optional<BigInt> irreducibility_witness(const PolyQ& p, long prime_bound) {
    if (p.degree() < 1)
        throw std::invalid_argument("irreducibility_witness: degree must be >= 1");
    if (p.degree() == 1) return BigInt(2);  // linear: any prime certifies
    // clear denominators: witness only depends on the primitive part
    BigInt l = 1;
    for (int i = 0; i <= p.degree(); ++i) l = lcm(l, den(p[i]));
    PolyQ prim = Rat(l) * p;
    BigInt q = 2;
    while (q <= prime_bound) {
        if (!mpz_divisible_p(num(prim.lc()).get_mpz_t(), q.get_mpz_t())) {
            PolyFp fp(q.get_ui());
            auto f = fp.reduce(prim);
            if (PolyFp::deg(f) == prim.degree() && fp.irreducible(f)) return q;
        }
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    }
    return std::nullopt;
}

}  // namespace mestre
