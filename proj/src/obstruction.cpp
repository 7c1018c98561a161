#include "lisom/obstruction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lisom {

namespace {

// canonical factor order: degree, then conductor for cyclotomic pairs,
// then plain coefficient comparison (cyclotomic-tagged factors first)
bool factor_less(const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    if (a.conductor && b.conductor) return *a.conductor < *b.conductor;
    if (a.conductor != b.conductor) return a.conductor.has_value();
    return a.poly.coeffs() < b.poly.coeffs();
}

// one-prime probe: a constant gcd mod p certifies coprimality over Q
bool coprime_probe(const IntPoly& a, const IntPoly& b) {
    static const std::uint64_t probes[] = {4611686018427387847ull, 4611686018427387817ull,
                                           4611686018427387787ull};
    for (std::uint64_t p : probes) {
        if (a.leading() % p == 0 || b.leading() % p == 0) continue;
        if (gcd_mod(reduce_mod(a, p), reduce_mod(b, p)).degree() == 0) return true;
    }
    // no probe certified it; settle exactly
    return gcd_primitive(a, b).degree() == 0;
}

bool squarefree_probe(const IntPoly& a) {
    static const std::uint64_t probes[] = {4611686018427387847ull, 4611686018427387817ull,
                                           4611686018427387787ull};
    for (std::uint64_t p : probes) {
        if (a.leading() % p == 0) continue;
        FpPoly ar = reduce_mod(a, p);
        if (gcd_mod(ar, fp_derivative(ar)).degree() == 0) return true;
    }
    return squarefree_check(a);
}

} // namespace

FactoredCharPoly FactoredCharPoly::from_factors(std::vector<Factor> factors) {
    if (factors.empty()) fail(Errc::ValidationError, "empty factor list");
    for (auto& f : factors) {
        if (f.multiplicity < 1) fail(Errc::ValidationError, "multiplicity must be >= 1");
        if (f.poly.is_zero() || !f.poly.is_monic())
            fail(Errc::ValidationError, "factor must be monic: " + f.poly.to_string());
        if (f.poly.degree() < 2 || f.poly.degree() % 2 != 0)
            fail(Errc::ValidationError,
                 "factor must have even degree >= 2: " + f.poly.to_string());
        if (!is_symmetric(f.poly))
            fail(Errc::ValidationError, "factor is not symmetric: " + f.poly.to_string());
        if (!f.conductor && f.poly.degree() <= 2000) f.conductor = identify_cyclotomic(f.poly);
        if (f.conductor) {
            if (f.poly.degree() > 2000 || cyclotomic(*f.conductor) == f.poly)
                f.irreducibility_verified = true;
            else
                fail(Errc::ValidationError, "conductor tag does not match the polynomial");
        }
        if (!f.conductor && !squarefree_probe(f.poly))
            fail(Errc::ValidationError, "factor is not squarefree: " + f.poly.to_string());
    }
    std::sort(factors.begin(), factors.end(), factor_less);
    for (size_t i = 0; i + 1 < factors.size(); ++i) {
        if (factors[i].poly == factors[i + 1].poly)
            fail(Errc::ValidationError, "repeated factor: " + factors[i].poly.to_string());
    }
    for (size_t i = 0; i < factors.size(); ++i) {
        for (size_t j = i + 1; j < factors.size(); ++j) {
            if (factors[i].conductor && factors[j].conductor) continue; // distinct cyclotomics
            if (!coprime_probe(factors[i].poly, factors[j].poly))
                fail(Errc::ValidationError, "factors share a rational factor");
        }
    }
    FactoredCharPoly out;
    out.factors_ = std::move(factors);
    return out;
}

long FactoredCharPoly::degree() const {
    long d = 0;
    for (const auto& f : factors_) d += f.poly.degree() * static_cast<long>(f.multiplicity);
    return d;
}

Trust FactoredCharPoly::trust() const {
    for (const auto& f : factors_)
        if (!f.irreducibility_verified) return Trust::Asserted;
    return Trust::Verified;
}

bool FactoredCharPoly::all_cyclotomic() const {
    for (const auto& f : factors_)
        if (!f.conductor) return false;
    return true;
}

BigInt FactoredCharPoly::value_at(const BigInt& x) const {
    BigInt acc = 1;
    for (const auto& f : factors_) acc *= pow(eval(f.poly, x), f.multiplicity);
    return acc;
}

std::string FactoredCharPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors_) {
        if (!first) os << " * ";
        first = false;
        if (f.conductor)
            os << "Phi(" << *f.conductor << ")";
        else
            os << "(" << f.poly.to_string() << ")";
        if (f.multiplicity > 1) os << "^" << f.multiplicity;
    }
    return os.str();
}

ParityVector operator+(const ParityVector& a, const ParityVector& b) {
    if (a.size() != b.size()) fail(Errc::DomainMismatch, "parity vectors of different size");
    ParityVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.set(i, a.get(i) ^ b.get(i));
    return out;
}

int eval_character(const ParityVector& c, const ParityVector& a) {
    if (c.size() != a.size()) fail(Errc::DomainMismatch, "parity vectors of different size");
    int acc = 0;
    for (size_t i = 0; i < c.size(); ++i) acc ^= (c.get(i) & a.get(i));
    return acc;
}

namespace {

BigInt rho_step(const BigInt& x, const BigInt& c, const BigInt& n) { return (x * x + c) % n; }

// Brent's cycle variant; returns a nontrivial factor or nullopt on budget
std::optional<BigInt> pollard_rho(const BigInt& n, std::uint64_t budget) {
    for (unsigned c = 1; c <= 8; ++c) {
        BigInt y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
        std::uint64_t spent = 0;
        const unsigned batch = 128;
        while (g == 1 && spent < budget) {
            x = y;
            for (BigInt i = 0; i < r; ++i) y = rho_step(y, BigInt(c), n);
            BigInt k = 0;
            while (k < r && g == 1 && spent < budget) {
                ys = y;
                BigInt limit = r - k;
                if (limit > batch) limit = batch;
                for (BigInt i = 0; i < limit; ++i) {
                    y = rho_step(y, BigInt(c), n);
                    q = q * abs(x - y) % n;
                    ++spent;
                }
                g = gcd(q, n);
                k += batch;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack
            g = 1;
            while (g == 1) {
                ys = rho_step(ys, BigInt(c), n);
                g = gcd(abs(x - ys), n);
            }
        }
        if (g > 1 && g < n) return g;
    }
    return std::nullopt;
}

void factor_into(const BigInt& n, const FactorLimits& lim, std::vector<BigInt>& primes,
                 std::optional<BigInt>& unresolved) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    std::optional<BigInt> d = pollard_rho(n, lim.rho_rounds);
    if (!d) {
        if (unresolved)
            *unresolved *= n;
        else
            unresolved = n;
        return;
    }
    factor_into(*d, lim, primes, unresolved);
    factor_into(n / *d, lim, primes, unresolved);
}

PrimeSet factor_abs(BigInt n, const FactorLimits& lim) {
    PrimeSet out;
    n = abs(n);
    if (n <= 1) return out;
    for (BigInt d = 2; d * d <= n && d <= lim.trial_limit; d == 2 ? d = 3 : d += 2) {
        if (n % d == 0) {
            out.primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) {
        std::vector<BigInt> rest;
        factor_into(n, lim, rest, out.unresolved_cofactor);
        out.primes.insert(out.primes.end(), rest.begin(), rest.end());
    }
    std::sort(out.primes.begin(), out.primes.end());
    out.primes.erase(std::unique(out.primes.begin(), out.primes.end()), out.primes.end());
    return out;
}

// Res(Phi_m, Phi_n) for m < n: p^{phi(m)} when n/m is a power of the prime p,
// and 1 otherwise (Apostol's closed form).
std::optional<BigInt> cyclotomic_resultant_prime(unsigned m, unsigned n) {
    if (m > n) std::swap(m, n);
    if (m == n) fail(Errc::ResultantZero, "equal cyclotomic factors");
    if (n % m != 0) return std::nullopt;
    unsigned q = n / m;
    for (unsigned p = 2; static_cast<unsigned long>(p) * p <= q; ++p) {
        if (q % p == 0) {
            unsigned r = q;
            while (r % p == 0) r /= p;
            if (r != 1) return std::nullopt;
            return BigInt(p);
        }
    }
    return BigInt(q); // q itself prime
}

} // namespace

PrimeSet candidate_primes(const Factor& f, const Factor& g, const FactorLimits& lim) {
    if (f.conductor && g.conductor) {
        if (*f.conductor == *g.conductor) fail(Errc::ResultantZero, "identical factors");
        PrimeSet out;
        auto p = cyclotomic_resultant_prime(*f.conductor, *g.conductor);
        if (p) out.primes.push_back(*p);
        return out;
    }
    return candidate_primes(f.poly, g.poly, lim);
}

PrimeSet candidate_primes(const IntPoly& f, const IntPoly& g, const FactorLimits& lim) {
    BigInt res = resultant(f, g);
    if (res == 0) fail(Errc::ResultantZero, "polynomials share a rational factor");
    return factor_abs(res, lim);
}

namespace {

VSet v_set_from(const PrimeSet& cand, const IntPoly& fp, const IntPoly& gp) {
    VSet out;
    out.unresolved_cofactor = cand.unresolved_cofactor;
    for (const BigInt& p : cand.primes) {
        if (p >= BigInt(1) << 62) {
            // modulus beyond word range cannot be tested; treat as unresolved
            if (out.unresolved_cofactor)
                *out.unresolved_cofactor *= p;
            else
                out.unresolved_cofactor = p;
            continue;
        }
        auto common = common_symmetric_factors(fp, gp, static_cast<std::uint64_t>(p));
        if (!common.empty()) {
            VSetWitness w;
            w.prime = p;
            for (const auto& q : common) w.common_factors.push_back(q.to_string());
            out.witnesses.push_back(std::move(w));
        }
    }
    return out;
}

} // namespace

VSet v_set(const Factor& f, const Factor& g, const FactorLimits& lim) {
    return v_set_from(candidate_primes(f, g, lim), f.poly, g.poly);
}

VSet v_set(const IntPoly& f, const IntPoly& g, const FactorLimits& lim) {
    return v_set_from(candidate_primes(f, g, lim), f, g);
}

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

ShGroup group_from_partition(size_t n, UnionFind& uf) {
    ShGroup out;
    std::map<size_t, std::vector<size_t>> by_root;
    for (size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
    for (auto& [root, members] : by_root) {
        (void)root;
        out.classes.push_back(members);
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (size_t k = 1; k < out.classes.size(); ++k) {
        ParityVector c(n);
        for (size_t i : out.classes[k]) c.set(i, 1);
        out.basis.push_back(c);
    }
    return out;
}

} // namespace

ShGroup sh_group(const FactoredCharPoly& F, const FactorLimits& lim) {
    size_t n = F.count();
    UnionFind uf(n);
    std::vector<ShEdge> edges;
    bool unresolved = false;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            VSet v = v_set(F.factor(i), F.factor(j), lim);
            if (v.unresolved_cofactor) unresolved = true;
            if (!v.empty()) {
                uf.unite(i, j);
                edges.push_back({i, j, std::move(v.witnesses)});
            }
        }
    }
    ShGroup out = group_from_partition(n, uf);
    out.edges = std::move(edges);
    out.unresolved = unresolved;
    return out;
}

ShGroup sh_rational_bounded(const FactoredCharPoly& F, std::uint64_t prime_bound) {
    size_t n = F.count();
    // V_i: the infinite place when f_i has a unit-circle root pair, plus the
    // primes p <= bound where f_i mod p has a symmetric irreducible factor
    std::vector<bool> at_infinity(n);
    std::vector<std::vector<std::uint64_t>> finite(n);
    for (size_t i = 0; i < n; ++i) {
        const Factor& f = F.factor(i);
        at_infinity[i] = unit_circle_pairs(f.poly, f.conductor) > 0;
        for (std::uint64_t p = 2; p <= prime_bound; ++p) {
            if (!is_prime_u64(p)) continue;
            if (!symmetric_irreducible_factors(reduce_mod(f.poly, p)).empty())
                finite[i].push_back(p);
        }
    }
    UnionFind uf(n);
    std::vector<ShEdge> edges;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            std::vector<VSetWitness> hits;
            if (at_infinity[i] && at_infinity[j]) hits.push_back({BigInt(0), {"infinite place"}});
            std::vector<std::uint64_t> common;
            std::set_intersection(finite[i].begin(), finite[i].end(), finite[j].begin(),
                                  finite[j].end(), std::back_inserter(common));
            for (std::uint64_t p : common) hits.push_back({BigInt(p), {}});
            if (!hits.empty()) {
                uf.unite(i, j);
                edges.push_back({i, j, std::move(hits)});
            }
        }
    }
    ShGroup out = group_from_partition(n, uf);
    out.edges = std::move(edges);
    out.upper_bound_only = true;
    return out;
}

} // namespace lisom
