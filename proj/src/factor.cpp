#include "mestre/factor.hpp"

#include <algorithm>

namespace mestre {

BigInt FactoredInt::reassemble() const {
    BigInt r = cofactor;
    for (const auto& [p, e] : factors) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        r *= pe;
    }
    return sign < 0 ? BigInt(-r) : r;
}

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

bool miller_rabin_round(const BigInt& n, const BigInt& a, const BigInt& d, unsigned s) {
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    for (unsigned long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    uint64_t state = 0x6d65737472653140ULL;  // fixed seed
    for (int round = 0; round < 40; ++round) {
        BigInt a = 2 + BigInt(splitmix64(state)) % (n - 3);
        if (!miller_rabin_round(n, a, d, s)) return false;
    }
    return true;
}

namespace {

// Pollard rho, Brent variant. Returns a nontrivial factor or nullopt when the
// iteration budget runs out. n must be odd composite, not a perfect power.
std::optional<BigInt> rho_brent(const BigInt& n, uint64_t budget) {
    uint64_t state = 0x706f6c6c61726472ULL + mpz_fdiv_ui(n.get_mpz_t(), 0x7fffffff);
    while (budget > 0) {
        BigInt y = 2 + BigInt(splitmix64(state)) % (n - 3);
        BigInt c = 1 + BigInt(splitmix64(state)) % (n - 2);
        BigInt x = y, q = 1, g = 1, ys = y;
        const uint64_t m = 128;
        uint64_t r = 1;
        while (g == 1 && budget > 0) {
            x = y;
            for (uint64_t i = 0; i < r && budget > 0; ++i) {
                y = (y * y + c) % n;
                --budget;
            }
            uint64_t k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                uint64_t lim = std::min(m, r - k);
                for (uint64_t i = 0; i < lim && budget > 0; ++i) {
                    y = (y * y + c) % n;
                    BigInt diff = x > y ? x - y : y - x;
                    q = (q * diff) % n;
                    --budget;
                }
                g = gcd(q, n);
                k += m;
            }
            r <<= 1;
        }
        if (g == n) {  // backtrack
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                BigInt diff = x > ys ? x - ys : ys - x;
                g = gcd(diff, n);
            }
        }
        if (g != n && g > 1) return g;
        // cycle degenerated; retry with a new (y, c) pair
    }
    return std::nullopt;
}

void push_factor(FactoredInt& out, const BigInt& p, unsigned e) {
    for (auto& f : out.factors) {
        if (f.prime == p) {
            f.exponent += e;
            return;
        }
    }
    out.factors.push_back({p, e});
}

// Recursive split of an odd cofactor with no prime below the trial bound.
void split(FactoredInt& out, BigInt m, unsigned mult, const FactorOptions& opt) {
    if (m == 1) return;
    if (is_probable_prime(m)) {
        push_factor(out, m, mult);
        return;
    }
    unsigned long k = 2;
    if (mpz_perfect_power_p(m.get_mpz_t())) {
        for (k = 2; k < 8 * sizeof(unsigned long); ++k) {
            BigInt r;
            if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0) {
                split(out, r, mult * k, opt);
                return;
            }
        }
    }
    auto f = rho_brent(m, opt.rho_budget);
    if (!f) {
        out.cofactor *= [&] {
            BigInt c;
            mpz_pow_ui(c.get_mpz_t(), m.get_mpz_t(), mult);
            return c;
        }();
        return;
    }
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), f->get_mpz_t())) {
        m /= *f;
        ++e;
    }
    split(out, *f, mult * e, opt);
    split(out, m, mult, opt);
}

}  // namespace

FactoredInt factor_integer(const BigInt& n, const FactorOptions& opt) {
    if (n == 0) throw std::invalid_argument("factor_integer: N must be nonzero");
    FactoredInt out;
    BigInt m = n;
    if (m < 0) {
        out.sign = -1;
        m = -m;
    }
    for (const BigInt& h : opt.hints) {
        if (h <= 1) continue;
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), h.get_mpz_t())) {
            m /= h;
            ++e;
        }
        if (e > 0) split(out, h, e, opt);
    }
    // trial division by small primes
    BigInt p = 2;
    while (p <= 100000 && m > 1) {
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            unsigned e = 0;
            while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
                m /= p;
                ++e;
            }
            push_factor(out, p, e);
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (m > 1 && m < p * p) {  // remaining part is prime
            push_factor(out, m, 1);
            m = 1;
        }
    }
    if (m > 1) split(out, m, 1, opt);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    if (!out.complete() && opt.throw_on_budget) throw FactorBudgetExceeded(out);
    return out;
}

BigInt block_part(const BigInt& n, const BigInt& block) {
    if (block <= 1 || n == 0) return 1;
    BigInt c = abs(n), part = 1;
    BigInt g = gcd(c, block);
    while (g > 1) {
        part *= g;
        c /= g;
        g = gcd(c, g);
    }
    return part;
}

unsigned valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    BigInt m = abs(n);
    unsigned v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

unsigned valuation(const Rat& q, const BigInt& p, bool& negative) {
    unsigned vd = valuation(den(q), p);
    if (vd > 0) {
        negative = true;
        return vd;
    }
    negative = false;
    return valuation(num(q), p);
}

}  // namespace mestre
