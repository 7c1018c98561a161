#include "lisom/intpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lisom {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotOddPrime: return "NotOddPrime";
        case Errc::ModulusMismatch: return "ModulusMismatch";
        case Errc::BadInput: return "BadInput";
        case Errc::NotSymmetric: return "NotSymmetric";
        case Errc::BoundaryRoot: return "BoundaryRoot";
        case Errc::ResultantZero: return "ResultantZero";
        case Errc::UnresolvedCofactor: return "UnresolvedCofactor";
        case Errc::DomainMismatch: return "DomainMismatch";
        case Errc::Infeasible: return "Infeasible";
        case Errc::NotCyclotomic: return "NotCyclotomic";
        case Errc::NotSquareFree: return "NotSquareFree";
        case Errc::NotUnramified: return "NotUnramified";
        case Errc::BadSpec: return "BadSpec";
        case Errc::ParseError: return "ParseError";
        case Errc::ValidationError: return "ValidationError";
        case Errc::InternalInconsistency: return "InternalInconsistency";
    }
    return "Error";
}

BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) fail(Errc::BadInput, "isqrt of negative number");
    if (n == 0) return 0;
    // Newton iteration on x -> (x + n/x)/2, seeded above the root
    BigInt x = BigInt(1) << (static_cast<unsigned>(msb(n)) / 2 + 1);
    for (;;) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    return x;
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = isqrt_floor(n);
    return r * r == n;
}

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        BigInt x = powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = (x * x) % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Rational::Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) fail(Errc::BadInput, "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    BigInt g = gcd(abs(num), den);
    if (g > 1) { num /= g; den /= g; }
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) fail(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

BigInt IntPoly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return 0;
    return c_[static_cast<size_t>(k)];
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::shifted(long k) const {
    if (is_zero() || k == 0) return k >= 0 ? *this : IntPoly();
    if (k < 0) fail(Errc::BadInput, "negative shift");
    std::vector<BigInt> c(static_cast<size_t>(k), BigInt(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const BigInt& s) const {
    if (s == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const BigInt& c = coeff(k);
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (k == 0 || a != 1) os << a.str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

BigInt eval(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly reciprocal(const IntPoly& p) {
    if (p.is_zero() || p.coeff(0) == 0)
        fail(Errc::ZeroConstantTerm, "reciprocal requires p(0) != 0");
    std::vector<BigInt> c(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(c));
}

bool is_symmetric(const IntPoly& p) {
    if (p.is_zero() || p.degree() % 2 != 0 || p.coeff(0) == 0) return false;
    return reciprocal(p) == p;
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return IntPoly();
    std::vector<BigInt> c(static_cast<size_t>(p.degree()));
    for (long k = 1; k <= p.degree(); ++k) c[static_cast<size_t>(k - 1)] = p.coeff(k) * k;
    return IntPoly(std::move(c));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) fail(Errc::ZeroPolynomial, "division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) fail(Errc::BadInput, "inexact polynomial division");
    std::vector<BigInt> rem = a.coeffs();
    std::vector<BigInt> quot(static_cast<size_t>(a.degree() - b.degree()) + 1);
    const BigInt& lead = b.leading();
    for (long k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt& top = rem[static_cast<size_t>(k + b.degree())];
        if (top % lead != 0) fail(Errc::BadInput, "inexact polynomial division");
        BigInt q = top / lead;
        if (q != 0) {
            for (long j = 0; j <= b.degree(); ++j)
                rem[static_cast<size_t>(k + j)] -= q * b.coeff(j);
        }
        quot[static_cast<size_t>(k)] = std::move(q);
    }
    for (const auto& v : rem)
        if (v != 0) fail(Errc::BadInput, "inexact polynomial division");
    return IntPoly(std::move(quot));
}

DivRem divrem_monic(const IntPoly& a, const IntPoly& b) {
    if (!b.is_monic()) fail(Errc::BadInput, "divrem_monic requires monic divisor");
    if (a.degree() < b.degree()) return {IntPoly(), a};
    std::vector<BigInt> rem = a.coeffs();
    std::vector<BigInt> quot(static_cast<size_t>(a.degree() - b.degree()) + 1);
    for (long k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt q = rem[static_cast<size_t>(k + b.degree())];
        if (q != 0) {
            for (long j = 0; j <= b.degree(); ++j)
                rem[static_cast<size_t>(k + j)] -= q * b.coeff(j);
        }
        quot[static_cast<size_t>(k)] = std::move(q);
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& v : p.coeffs()) {
        g = gcd(g, abs(v));
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt c = content(p);
    if (p.leading() < 0) c = -c;
    if (c == 1) return p;
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) out.push_back(v / c);
    return IntPoly(std::move(out));
}

namespace {

// pseudo-remainder: exactly lc(b)^(deg a - deg b + 1) * a mod b, also when
// intermediate leading terms cancel early
IntPoly prem(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r = a.coeffs();
    long db = b.degree();
    const BigInt& lb = b.leading();
    long dr = a.degree();
    long scale_left = dr - db + 1;
    while (dr >= db) {
        BigInt top = r[static_cast<size_t>(dr)];
        for (long j = 0; j <= dr; ++j) r[static_cast<size_t>(j)] *= lb;
        for (long j = 0; j <= db; ++j)
            r[static_cast<size_t>(dr - db + j)] -= top * b.coeff(j);
        --scale_left;
        while (dr >= 0 && r[static_cast<size_t>(dr)] == 0) --dr;
    }
    r.resize(static_cast<size_t>(dr + 1));
    IntPoly out(std::move(r));
    if (scale_left > 0 && !out.is_zero())
        out = out.scaled(pow(lb, static_cast<unsigned>(scale_left)));
    return out;
}

} // namespace

IntPoly gcd_primitive(IntPoly a, IntPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt resultant_prs(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) fail(Errc::ZeroPolynomial, "resultant of zero polynomial");
    // subresultant PRS (Collins); sign bookkeeping per Brown-Traub
    IntPoly a = p, b = q;
    bool swapped = false;
    if (a.degree() < b.degree()) { std::swap(a, b); swapped = true; }
    int sign = 1;
    if (swapped && (p.degree() % 2) && (q.degree() % 2)) sign = -1;
    if (b.degree() == 0) {
        BigInt r = pow(b.leading(), static_cast<unsigned>(a.degree()));
        return sign * r;
    }
    BigInt g = 1, h = 1, res_acc = 1;
    for (;;) {
        long d = a.degree() - b.degree();
        if ((a.degree() % 2) && (b.degree() % 2)) sign = -sign;
        IntPoly r = prem(a, b);
        if (r.is_zero()) {
            if (b.degree() > 0) return 0;
            fail(Errc::InternalInconsistency, "unreachable PRS state");
        }
        a = b;
        // divide r by g*h^d
        BigInt divisor = g * pow(h, static_cast<unsigned>(d));
        std::vector<BigInt> rc = r.coeffs();
        for (auto& v : rc) v /= divisor;
        b = IntPoly(std::move(rc));
        g = a.leading();
        // h = g^d * h^(1-d)
        if (d == 0) {
            // h unchanged
        } else if (d == 1) {
            h = g;
        } else {
            BigInt gn = pow(g, static_cast<unsigned>(d));
            BigInt hd = pow(h, static_cast<unsigned>(d - 1));
            h = gn / hd;
        }
        if (b.degree() == 0) {
            BigInt lead = b.leading();
            // res = lead^(deg a) / h^(deg a - 1)
            BigInt num = pow(lead, static_cast<unsigned>(a.degree()));
            BigInt den = pow(h, static_cast<unsigned>(a.degree() - 1));
            return sign * (num / den);
        }
    }
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod_u64(u64 a, u64 m) { return powmod_u64(a % m, m - 2, m); }

bool is_prime_u64_mr(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// resultant over F_p by the Euclidean algorithm, O(deg^2)
u64 resultant_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
    auto deg = [](const std::vector<u64>& v) { return static_cast<long>(v.size()) - 1; };
    auto trim = [](std::vector<u64>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    u64 res = 1;
    if (deg(a) < deg(b)) {
        if ((deg(a) % 2) && (deg(b) % 2)) res = p - 1;
        std::swap(a, b);
    }
    while (true) {
        if (deg(b) == 0) {
            res = mulmod_u64(res, powmod_u64(b[0], static_cast<u64>(deg(a)), p), p);
            return res;
        }
        long da = deg(a), db = deg(b);
        // a mod b
        u64 inv_lb = invmod_u64(b.back(), p);
        for (long k = da - db; k >= 0; --k) {
            u64 t = mulmod_u64(a[static_cast<size_t>(k + db)], inv_lb, p);
            if (t == 0) continue;
            for (long j = 0; j <= db; ++j) {
                u64& av = a[static_cast<size_t>(k + j)];
                av = (av + p - mulmod_u64(t, b[static_cast<size_t>(j)], p)) % p;
            }
        }
        trim(a);
        if (a.empty()) return 0;
        long dr = deg(a);
        // Res(a,b) = lc(b)^(da-dr) * (-1)^(da*db) * Res(b, a mod b)
        res = mulmod_u64(res, powmod_u64(b.back(), static_cast<u64>(da - dr), p), p);
        if ((da % 2) && (db % 2)) res = p == 2 ? res : p - res;
        std::swap(a, b);
    }
}

std::vector<u64> reduce_coeffs_u64(const IntPoly& f, u64 p) {
    std::vector<u64> out(f.coeffs().size());
    BigInt bp(p);
    for (size_t i = 0; i < out.size(); ++i) {
        BigInt r = f.coeffs()[i] % bp;
        if (r < 0) r += bp;
        out[i] = static_cast<u64>(r);
    }
    return out;
}

double log2_norm2(const IntPoly& f) {
    // log2 of the 2-norm, via the exact sum of squares
    BigInt s = 0;
    for (const auto& v : f.coeffs()) s += v * v;
    if (s == 0) return 0.0;
    long bits = static_cast<long>(msb(s));
    return 0.5 * static_cast<double>(bits + 1);
}

} // namespace

BigInt resultant_crt(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) fail(Errc::ZeroPolynomial, "resultant of zero polynomial");
    if (p.degree() == 0) return pow(p.leading(), static_cast<unsigned>(q.degree()));
    if (q.degree() == 0) return pow(q.leading(), static_cast<unsigned>(p.degree()));
    // Hadamard-style bound: |Res| <= ||p||^deg(q) * ||q||^deg(p)
    double bound_bits = log2_norm2(p) * static_cast<double>(q.degree()) +
                        log2_norm2(q) * static_cast<double>(p.degree()) + 2.0;
    std::vector<u64> primes;
    double have = 0.0;
    u64 cand = (1ull << 62) - 57;
    while (have <= bound_bits + 1) {
        while (!is_prime_u64_mr(cand)) --cand;
        // avoid primes dividing the leading coefficients (degree must not drop)
        if (p.leading() % cand != 0 && q.leading() % cand != 0) {
            primes.push_back(cand);
            have += 62.0;
        }
        --cand;
    }
    BigInt modulus = 1, result = 0;
    for (u64 pr : primes) {
        u64 r = resultant_mod(reduce_coeffs_u64(p, pr), reduce_coeffs_u64(q, pr), pr);
        if (modulus == 1) {
            result = r;
            modulus = pr;
            continue;
        }
        // CRT lift
        BigInt pm(pr);
        BigInt diff = (BigInt(r) - result) % pm;
        if (diff < 0) diff += pm;
        BigInt minv = powm(modulus % pm, pm - 2, pm);
        BigInt t = (diff * minv) % pm;
        result += modulus * t;
        modulus *= pm;
    }
    if (result * 2 > modulus) result -= modulus;
    return result;
}

BigInt resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) fail(Errc::ZeroPolynomial, "resultant of zero polynomial");
    // PRS wins on small dense inputs; CRT on anything sizeable
    if (p.degree() + q.degree() <= 48) return resultant_prs(p, q);
    return resultant_crt(p, q);
}

unsigned long euler_phi(unsigned long m) {
    unsigned long r = m;
    for (unsigned long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            r -= r / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

IntPoly cyclotomic(unsigned m) {
    if (m == 0) fail(Errc::BadInput, "cyclotomic(0)");
    static std::map<unsigned, IntPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    unsigned rad = 1;
    {
        unsigned rest = m;
        for (unsigned p = 2; p * p <= rest; ++p) {
            if (rest % p == 0) {
                rad *= p;
                while (rest % p == 0) rest /= p;
            }
        }
        rad *= rest > 1 ? rest : 1;
    }
    IntPoly acc;
    if (rad != m) {
        // Phi_m(X) = Phi_rad(X^{m/rad})
        IntPoly base = cyclotomic(rad);
        unsigned stretch = m / rad;
        std::vector<BigInt> c(static_cast<size_t>(base.degree()) * stretch + 1);
        for (long k = 0; k <= base.degree(); ++k)
            c[static_cast<size_t>(k) * stretch] = base.coeff(k);
        acc = IntPoly(std::move(c));
    } else {
        // X^m - 1 divided by Phi_d for the proper divisors d
        std::vector<BigInt> xm(m + 1);
        xm[0] = -1;
        xm[m] = 1;
        acc = IntPoly(std::move(xm));
        for (unsigned d = 1; d < m; ++d) {
            if (m % d == 0) acc = divide_exact(acc, cyclotomic(d));
        }
    }
    cache.emplace(m, acc);
    return acc;
}

bool squarefree_check(const IntPoly& p) {
    if (p.is_zero()) fail(Errc::ZeroPolynomial, "squarefree_check of zero polynomial");
    if (p.degree() == 0) return true;
    return gcd_primitive(p, derivative(p)).degree() == 0;
}

std::optional<unsigned> identify_cyclotomic(const IntPoly& p) {
    long d = p.degree();
    if (d < 1 || !p.is_monic()) return std::nullopt;
    // phi(m) = d forces m <= d^2 for d >= 2; in this domain m/phi(m) < 6
    unsigned long limit = d == 1 ? 2 : 6ul * static_cast<unsigned long>(d) + 1;
    for (unsigned long m = 1; m <= limit; ++m) {
        if (euler_phi(m) != static_cast<unsigned long>(d)) continue;
        if (cyclotomic(static_cast<unsigned>(m)) == p) return static_cast<unsigned>(m);
    }
    return std::nullopt;
}

} // namespace lisom
