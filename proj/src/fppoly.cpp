#include "lisom/fppoly.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <sstream>

namespace lisom {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// below this modulus, products fit u64 with room to accumulate lazily
constexpr u64 kLazyMaxP = 1ull << 21;
constexpr size_t kLazyMaxLen = 1u << 14;
constexpr long kMatrixMinDeg = 64;
constexpr long kMatrixMaxDeg = 1536; // ~19 MB of columns at the cap

u64 mulmod_s(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod_u(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_s(r, a, p);
        a = mulmod_s(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod_u(a % p, p - 2, p); }

std::vector<u64> mul_raw(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> c(a.size() + b.size() - 1, 0);
    if (p < kLazyMaxP && std::min(a.size(), b.size()) <= kLazyMaxLen) {
        for (size_t i = 0; i < a.size(); ++i) {
            u64 ai = a[i];
            if (!ai) continue;
            u64* dst = c.data() + i;
            const u64* src = b.data();
            for (size_t j = 0; j < b.size(); ++j) dst[j] += ai * src[j];
        }
        for (auto& v : c) v %= p;
    } else {
        for (size_t i = 0; i < a.size(); ++i) {
            u64 ai = a[i];
            if (!ai) continue;
            for (size_t j = 0; j < b.size(); ++j)
                c[i + j] = static_cast<u64>(((u128)ai * b[j] + c[i + j]) % p);
        }
    }
    return c;
}

void trim_raw(std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// in-place division by a monic divisor; quotient optionally captured.
// Lazy accumulation keeps the inner loop in plain u64 for small moduli.
void divrem_by_monic_raw(std::vector<u64>& r, const std::vector<u64>& b, u64 p,
                         std::vector<u64>* quot) {
    long db = static_cast<long>(b.size()) - 1;
    long dr = static_cast<long>(r.size()) - 1;
    if (db < 0) fail(Errc::ZeroPolynomial, "division by zero polynomial");
    if (quot) quot->assign(dr >= db ? static_cast<size_t>(dr - db) + 1 : 0, 0);
    if (dr < db) { trim_raw(r); return; }
    if (db == 0) {
        if (quot) {
            *quot = r;
            for (auto& v : *quot) v %= p;
        }
        r.clear();
        return;
    }
    bool lazy = p < kLazyMaxP && r.size() <= kLazyMaxLen;
    for (long k = dr - db; k >= 0; --k) {
        u64 t = r[static_cast<size_t>(k + db)] % p;
        if (quot) (*quot)[static_cast<size_t>(k)] = t;
        if (t) {
            u64 nt = p - t;
            u64* dst = r.data() + k;
            if (lazy) {
                for (long j = 0; j < db; ++j) dst[j] += nt * b[static_cast<size_t>(j)];
            } else {
                for (long j = 0; j < db; ++j)
                    dst[j] = static_cast<u64>(((u128)nt * b[static_cast<size_t>(j)] + dst[j]) % p);
            }
        }
        r[static_cast<size_t>(k + db)] = 0;
    }
    r.resize(static_cast<size_t>(db));
    for (auto& v : r) v %= p;
    trim_raw(r);
}

// deterministic generator for equal-degree splitting trials
struct SplitGen {
    u64 state;
    explicit SplitGen(const FpPoly& f) {
        u64 h = 0x9e3779b97f4a7c15ull ^ f.modulus();
        for (u64 c : f.coeffs()) h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        state = h ? h : 1;
    }
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    FpPoly random_poly(u64 p, long deg_below) {
        std::vector<u64> c(static_cast<size_t>(deg_below));
        for (auto& v : c) v = next() % p;
        return FpPoly(p, std::move(c));
    }
};

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_s(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
    // primality is checked once per modulus, not per arithmetic result
    static thread_local u64 validated = 0;
    if (p_ != validated) {
        if (!is_prime_u64(p_)) fail(Errc::NotPrime, "modulus must be a prime");
        validated = p_;
    }
    for (auto& v : c_) v %= p_;
    trim();
}

void FpPoly::trim() { trim_raw(c_); }

FpPoly::u64 FpPoly::leading() const {
    if (c_.empty()) fail(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

FpPoly FpPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    u64 inv = invmod(leading(), p_);
    std::vector<u64> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = mulmod_s(c_[i], inv, p_);
    return FpPoly(p_, std::move(c));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    if (a.p_ != b.p_) fail(Errc::ModulusMismatch, "mixed moduli");
    std::vector<FpPoly::u64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        FpPoly::u64 s = (i < a.c_.size() ? a.c_[i] : 0) + (i < b.c_.size() ? b.c_[i] : 0);
        c[i] = s >= a.p_ ? s - a.p_ : s;
    }
    return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    if (a.p_ != b.p_) fail(Errc::ModulusMismatch, "mixed moduli");
    std::vector<FpPoly::u64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        FpPoly::u64 av = i < a.c_.size() ? a.c_[i] : 0;
        FpPoly::u64 bv = i < b.c_.size() ? b.c_[i] : 0;
        c[i] = av >= bv ? av - bv : av + a.p_ - bv;
    }
    return FpPoly(a.p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.p_ != b.p_) fail(Errc::ModulusMismatch, "mixed moduli");
    return FpPoly(a.p_, mul_raw(a.c_, b.c_, a.p_));
}

bool FpPoly::less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c_ < b.c_;
}

std::string FpPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        u64 c = coeff(k);
        if (!c) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0 || c != 1) os << c;
        if (k > 0) {
            if (c != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

FpPoly reduce_mod(const IntPoly& f, std::uint64_t prime) {
    if (!is_prime_u64(prime)) fail(Errc::NotPrime, "modulus must be a prime");
    std::vector<u64> c(f.coeffs().size());
    BigInt bp(prime);
    for (size_t i = 0; i < c.size(); ++i) {
        BigInt r = f.coeffs()[i] % bp;
        if (r < 0) r += bp;
        c[i] = static_cast<u64>(r);
    }
    return FpPoly(prime, std::move(c));
}

std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus()) fail(Errc::ModulusMismatch, "mixed moduli");
    if (b.is_zero()) fail(Errc::ZeroPolynomial, "division by zero polynomial");
    u64 p = a.modulus();
    FpPoly bm = b.monic();
    std::vector<u64> r = a.coeffs();
    std::vector<u64> q;
    divrem_by_monic_raw(r, bm.coeffs(), p, &q);
    if (!b.is_monic()) {
        u64 inv = invmod(b.leading(), p);
        for (auto& v : q) v = mulmod_s(v, inv, p);
    }
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly rem(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus()) fail(Errc::ModulusMismatch, "mixed moduli");
    if (b.is_zero()) fail(Errc::ZeroPolynomial, "remainder by zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<u64> r = a.coeffs();
    divrem_by_monic_raw(r, b.monic().coeffs(), a.modulus(), nullptr);
    return FpPoly(a.modulus(), std::move(r));
}

FpPoly gcd_mod(FpPoly a, FpPoly b) {
    if (a.modulus() != b.modulus()) fail(Errc::ModulusMismatch, "mixed moduli");
    while (!b.is_zero()) {
        FpPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f) {
    std::vector<u64> c = mul_raw(a.coeffs(), b.coeffs(), f.modulus());
    divrem_by_monic_raw(c, f.monic().coeffs(), f.modulus(), nullptr);
    return FpPoly(f.modulus(), std::move(c));
}

FpPoly powmod(const FpPoly& base, const BigInt& e, const FpPoly& f) {
    if (e < 0) fail(Errc::BadInput, "negative exponent");
    FpPoly result = FpPoly::constant(f.modulus(), 1);
    FpPoly acc = rem(base, f);
    BigInt n = e;
    while (n > 0) {
        if (bit_test(n, 0)) result = mulmod(result, acc, f);
        n >>= 1;
        if (n > 0) acc = mulmod(acc, acc, f);
    }
    return result;
}

FpPoly fp_derivative(const FpPoly& f) {
    if (f.degree() < 1) return FpPoly::zero(f.modulus());
    std::vector<u64> c(static_cast<size_t>(f.degree()), 0);
    for (long k = 1; k <= f.degree(); ++k)
        c[static_cast<size_t>(k - 1)] =
            mulmod_s(f.coeff(k), static_cast<u64>(k) % f.modulus(), f.modulus());
    return FpPoly(f.modulus(), std::move(c));
}

namespace {

// p-th root of g(X) = h(X^p); over F_p this is coefficient extraction
FpPoly pth_root(const FpPoly& g) {
    u64 p = g.modulus();
    std::vector<u64> c(static_cast<size_t>(g.degree() / static_cast<long>(p)) + 1);
    for (size_t k = 0; k < c.size(); ++k) c[k] = g.coeff(static_cast<long>(k * p));
    return FpPoly(p, std::move(c));
}

} // namespace

FpPoly squarefree_part(const FpPoly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "squarefree part of zero polynomial");
    FpPoly g = f.monic();
    if (g.degree() < 1) return g;
    FpPoly d = fp_derivative(g);
    if (d.is_zero()) return squarefree_part(pth_root(g));
    FpPoly c = gcd_mod(g, d);
    if (c.degree() == 0) return g;
    // w carries each factor whose multiplicity is prime to p, once
    FpPoly w = divrem(g, c).first;
    // peel those factors out of c; what is left is a p-th power
    FpPoly z = c;
    for (;;) {
        FpPoly t = gcd_mod(z, w);
        if (t.degree() == 0) break;
        z = divrem(z, t).first;
    }
    if (z.degree() > 0) return (w * squarefree_part(pth_root(z))).monic();
    return w.monic();
}

namespace {

// X^p on F_p[X]/(f) is F_p-linear; with its matrix (column j = X^{jp} mod f)
// each Frobenius step becomes one matrix-vector product.
struct FrobeniusMatrix {
    long n;
    u64 p;
    std::vector<std::vector<u64>> cols;

    FrobeniusMatrix(const FpPoly& f, const FpPoly& xp) : n(f.degree()), p(f.modulus()) {
        cols.resize(static_cast<size_t>(n));
        FpPoly cur = FpPoly::constant(p, 1);
        for (long j = 0; j < n; ++j) {
            auto& col = cols[static_cast<size_t>(j)];
            col.assign(static_cast<size_t>(n), 0);
            for (long i = 0; i <= cur.degree(); ++i) col[static_cast<size_t>(i)] = cur.coeff(i);
            if (j + 1 < n) cur = mulmod(cur, xp, f);
        }
    }

    FpPoly apply(const FpPoly& t) const {
        std::vector<u64> out(static_cast<size_t>(n), 0);
        bool lazy = p < kLazyMaxP && static_cast<size_t>(n) <= kLazyMaxLen;
        for (long i = 0; i <= t.degree(); ++i) {
            u64 ti = t.coeff(i);
            if (!ti) continue;
            const u64* col = cols[static_cast<size_t>(i)].data();
            u64* dst = out.data();
            if (lazy) {
                for (long j = 0; j < n; ++j) dst[j] += ti * col[j];
            } else {
                for (long j = 0; j < n; ++j)
                    dst[j] = static_cast<u64>(((u128)ti * col[j] + dst[j]) % p);
            }
        }
        if (lazy)
            for (auto& v : out) v %= p;
        return FpPoly(p, std::move(out));
    }
};

// distinct-degree split of monic squarefree f:
// (product of the irreducible factors of degree d, d) for each occupied d
std::vector<std::pair<FpPoly, long>> ddf(const FpPoly& f) {
    u64 p = f.modulus();
    std::vector<std::pair<FpPoly, long>> out;
    FpPoly fstar = f;
    FpPoly x = FpPoly::x(p);
    FpPoly t = powmod(x, BigInt(p), f);
    std::unique_ptr<FrobeniusMatrix> frob;
    if (f.degree() >= kMatrixMinDeg && f.degree() <= kMatrixMaxDeg)
        frob = std::make_unique<FrobeniusMatrix>(f, t);
    long d = 1;
    while (fstar.degree() >= 2 * d) {
        FpPoly probe = rem(t - x, fstar);
        FpPoly g = gcd_mod(probe, fstar);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            fstar = divrem(fstar, g).first;
        }
        if (fstar.degree() < 2 * (d + 1)) break;
        t = frob ? frob->apply(t) : powmod(t, BigInt(p), f);
        ++d;
    }
    if (fstar.degree() > 0) out.emplace_back(fstar, fstar.degree());
    return out;
}

void edf(const FpPoly& h, long d, SplitGen& gen, std::vector<FpPoly>& out) {
    u64 p = h.modulus();
    if (h.degree() == d) {
        out.push_back(h.monic());
        return;
    }
    for (;;) {
        FpPoly u = gen.random_poly(p, h.degree());
        if (u.degree() < 1) continue;
        FpPoly w;
        if (p == 2) {
            // trace map of F_{2^d} over F_2
            FpPoly acc = rem(u, h);
            FpPoly s = acc;
            for (long i = 1; i < d; ++i) {
                acc = mulmod(acc, acc, h);
                s = s + acc;
            }
            w = s;
        } else {
            BigInt e = (pow(BigInt(p), static_cast<unsigned>(d)) - 1) / 2;
            w = powmod(u, e, h) - FpPoly::constant(p, 1);
        }
        FpPoly split = gcd_mod(w, h);
        if (split.degree() > 0 && split.degree() < h.degree()) {
            edf(split, d, gen, out);
            edf(divrem(h, split).first, d, gen, out);
            return;
        }
    }
}

} // namespace

FpFactorization factor_mod(const FpPoly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "factorization of zero polynomial");
    FpFactorization res;
    res.unit = f.leading();
    if (f.degree() == 0) return res;
    SplitGen gen(f);
    FpPoly work = f.monic();
    unsigned xmult = 0;
    while (work.coeff(0) == 0 && work.degree() > 0) {
        std::vector<u64> c(work.coeffs().begin() + 1, work.coeffs().end());
        work = FpPoly(f.modulus(), std::move(c));
        ++xmult;
    }
    if (xmult) res.factors.emplace_back(FpPoly::x(f.modulus()), xmult);
    std::vector<FpPoly> irreducibles;
    if (work.degree() > 0) {
        for (auto& [block, d] : ddf(squarefree_part(work))) {
            if (block.degree() == d)
                irreducibles.push_back(block.monic());
            else
                edf(block, d, gen, irreducibles);
        }
    }
    for (auto& q : irreducibles) {
        unsigned mult = 0;
        for (;;) {
            auto [quot, rest] = divrem(work, q);
            if (!rest.is_zero()) break;
            work = quot;
            ++mult;
        }
        res.factors.emplace_back(q, mult);
    }
    if (work.degree() != 0)
        fail(Errc::InternalInconsistency, "factor_mod: incomplete factorization");
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return FpPoly::less(a.first, b.first); });
    return res;
}

bool is_self_reciprocal(const FpPoly& g) {
    if (g.is_zero() || g.coeff(0) == 0) return false;
    u64 p = g.modulus();
    u64 inv0 = invmod(g.coeff(0), p);
    long d = g.degree();
    for (long k = 0; k <= d; ++k)
        if (g.coeff(k) != mulmod_s(inv0, g.coeff(d - k), p)) return false;
    return true;
}

std::vector<FpPoly> symmetric_irreducible_factors(const FpPoly& f, bool include_linear) {
    if (f.is_zero() || f.coeff(0) == 0)
        fail(Errc::ZeroConstantTerm, "input must not vanish at 0");
    std::vector<FpPoly> out;
    for (const auto& [q, mult] : factor_mod(f).factors) {
        (void)mult;
        if (q.degree() == 1 && !include_linear) continue;
        if (is_self_reciprocal(q)) out.push_back(q);
    }
    return out;
}

std::vector<FpPoly> common_symmetric_factors(const IntPoly& f, const IntPoly& g,
                                             std::uint64_t prime) {
    FpPoly fr = reduce_mod(f, prime);
    FpPoly gr = reduce_mod(g, prime);
    if (fr.is_zero() || gr.is_zero()) return {};
    FpPoly h = gcd_mod(fr, gr);
    if (h.degree() < 1) return {};
    // Self-reciprocal irreducible factors carry a simple self-dual module.
    // Common linear factors arrive in reciprocal pairs X-c, X-1/c (the
    // common root set of two symmetric polynomials is closed under
    // inversion); such a pair counts exactly when -1 lies in <c>, i.e. when
    // the root has even multiplicative order. Reciprocal pairs of higher
    // degree never count.
    u64 odd_part = prime - 1;
    while (odd_part % 2 == 0) odd_part /= 2;
    std::vector<FpPoly> out;
    for (const auto& [q, mult] : factor_mod(squarefree_part(h)).factors) {
        (void)mult;
        if (q.coeff(0) == 0) continue;
        if (is_self_reciprocal(q)) {
            out.push_back(q);
        } else if (q.degree() == 1) {
            u64 root = (prime - q.coeff(0)) % prime;
            if (powmod_u(root, odd_part, prime) != 1) out.push_back(q);
        }
    }
    return out;
}

bool has_common_symmetric_factor(const IntPoly& f, const IntPoly& g, std::uint64_t prime) {
    return !common_symmetric_factors(f, g, prime).empty();
}

bool subgroup_contains_minus_one(std::uint64_t m, std::uint64_t p) {
    if (m < 3 || m % 2 == 0) fail(Errc::BadInput, "m must be odd and >= 3");
    if (!is_prime_u64(p)) fail(Errc::BadInput, "p must be prime");
    if (std::gcd(m, p) != 1) fail(Errc::BadInput, "p must not divide m");
    if (m >= (1ull << 32)) fail(Errc::BadInput, "modulus too large");
    u64 base = p % m;
    u64 cur = base;
    while (cur != 1) {
        if (cur == m - 1) return true;
        cur = cur * base % m;
    }
    return false;
}

int legendre(const BigInt& a, const BigInt& p) {
    if (p < 3 || p % 2 == 0 || !is_probable_prime(p))
        fail(Errc::NotOddPrime, "p must be an odd prime");
    BigInt r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    BigInt e = powm(r, (p - 1) / 2, p);
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    fail(Errc::InternalInconsistency, "Euler criterion failed");
}

} // namespace lisom
