#include "lisom/decision.hpp"

#include <algorithm>

namespace lisom {

long m_of(const FactoredCharPoly& F) {
    long total = 0;
    for (const auto& f : F.factors())
        total += static_cast<long>(f.multiplicity) * m_of_factor(f.poly, f.conductor);
    return total;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Realizable: return "realizable";
        case Verdict::NotRealizable: return "not_realizable";
        case Verdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

C1Report check_c1(const FactoredCharPoly& F) {
    C1Report rep;
    rep.at_one = F.value_at(BigInt(1));
    rep.at_minus_one = F.value_at(BigInt(-1));
    long n = F.degree() / 2;
    rep.signed_product = rep.at_one * rep.at_minus_one;
    if (n % 2) rep.signed_product = -rep.signed_product;
    rep.pass = is_perfect_square(abs(rep.at_one)) && is_perfect_square(abs(rep.at_minus_one)) &&
               is_perfect_square(rep.signed_product);
    return rep;
}

C2Report check_c2(const FactoredCharPoly& F, SignatureTarget t) {
    C2Report rep;
    rep.deg = F.degree();
    rep.m = m_of(F);
    rep.sum_ok = t.r >= 0 && t.s >= 0 && t.r + t.s == rep.deg;
    rep.mod8_ok = ((t.r - t.s) % 8) == 0;
    rep.r_bound_ok = t.r >= rep.m;
    rep.s_bound_ok = t.s >= rep.m;
    rep.parity_ok = (t.r - rep.m) % 2 == 0 && (t.s - rep.m) % 2 == 0;
    rep.pass = rep.sum_ok && rep.mod8_ok && rep.r_bound_ok && rep.s_bound_ok && rep.parity_ok;
    return rep;
}

std::vector<ParityVector> real_local_data(const FactoredCharPoly& F, SignatureTarget t) {
    C2Report c2 = check_c2(F, t);
    if (!c2.pass) fail(Errc::BadInput, "real local data requires a passing C2");
    size_t n = F.count();
    if (n > 24) fail(Errc::BadInput, "too many factors");
    std::vector<long> caps(n);
    for (size_t i = 0; i < n; ++i) {
        const Factor& f = F.factor(i);
        caps[i] = static_cast<long>(f.multiplicity) * unit_circle_pairs(f.poly, f.conductor);
    }
    long target = (t.s - c2.m) / 2; // number of negative hermitian pairs
    std::vector<ParityVector> out;
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        long min_sum = 0, max_sum = 0;
        bool ok = true;
        for (size_t i = 0; i < n; ++i) {
            long b = (mask >> i) & 1;
            if (b > caps[i]) { ok = false; break; }
            min_sum += b;
            max_sum += caps[i] - ((caps[i] - b) % 2);
        }
        if (!ok) continue;
        if (target < min_sum || target > max_sum) continue;
        if ((target - min_sum) % 2 != 0) continue;
        ParityVector a(n);
        for (size_t i = 0; i < n; ++i) a.set(i, (mask >> i) & 1);
        out.push_back(std::move(a));
    }
    if (out.empty()) fail(Errc::Infeasible, "no real-place data despite a passing C2");
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<unsigned> prime_divisors(unsigned m) {
    std::vector<unsigned> out;
    for (unsigned p = 2; static_cast<unsigned long>(p) * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

bool ramified_conductor(unsigned m) {
    // prime-power conductor, up to Q(zeta_{2n}) = Q(zeta_n) for odd n
    unsigned mm = (m % 4 == 2) ? m / 2 : m;
    return prime_divisors(mm).size() <= 1;
}

} // namespace

Epsilon epsilon_cyclotomic(const FactoredCharPoly& F) {
    if (!F.all_cyclotomic())
        fail(Errc::NotCyclotomic, "epsilon needs every factor to be cyclotomic");
    size_t n = F.count();
    Epsilon eps;
    eps.total = ParityVector(n);
    std::vector<unsigned> all_primes;
    for (const auto& f : F.factors()) {
        if (*f.conductor < 3) fail(Errc::ValidationError, "conductor below 3");
        if (ramified_conductor(*f.conductor)) eps.ramified_conductors.push_back(*f.conductor);
        for (unsigned p : prime_divisors(*f.conductor))
            if (p % 4 == 3) all_primes.push_back(p);
    }
    std::sort(all_primes.begin(), all_primes.end());
    all_primes.erase(std::unique(all_primes.begin(), all_primes.end()), all_primes.end());
    for (unsigned p : all_primes) {
        ParityVector vec(n);
        bool nonzero = false;
        for (size_t i = 0; i < n; ++i) {
            const Factor& f = F.factor(i);
            if (*f.conductor % p != 0) continue;
            if (!symmetric_irreducible_factors(reduce_mod(f.poly, p)).empty()) {
                vec.set(i, 1);
                nonzero = true;
            }
        }
        if (nonzero) {
            eps.total = eps.total + vec;
            eps.per_prime.emplace_back(BigInt(p), std::move(vec));
        }
    }
    return eps;
}

namespace {

int parity_sum(const ParityVector& v) {
    int s = 0;
    for (size_t i = 0; i < v.size(); ++i) s ^= v.get(i);
    return s;
}

// Sum over all places of the component sums must vanish (reciprocity); the
// real-place sum is constant over C(V''), so this is checkable up front.
// A mixed-parity C(V'') is an engine bug and throws; a parity clash between
// the finite and real data means the mechanical epsilon misses a finite
// place, and the caller has to decline rather than guess.
bool reciprocity_holds(const Epsilon& eps, const std::vector<ParityVector>& real_data) {
    if (real_data.empty()) return true;
    int real_sum = parity_sum(real_data.front());
    for (const auto& a : real_data) {
        if (parity_sum(a) != real_sum)
            fail(Errc::InternalInconsistency, "real-place data with mixed total parity");
    }
    return (parity_sum(eps.total) ^ real_sum) == 0;
}

constexpr const char* kReciprocityReason =
    "epsilon local data does not balance the real place; conductor family "
    "outside the validated cyclotomic range";

bool kills_basis(const ShGroup& sh, const ParityVector& x) {
    for (const auto& c : sh.basis)
        if (eval_character(c, x) != 0) return false;
    return true;
}

} // namespace

DecisionReport decide_lattice(const FactoredCharPoly& F, SignatureTarget t,
                              const FactorLimits& lim) {
    DecisionReport rep;
    rep.trust = F.trust();
    rep.c1 = check_c1(F);
    rep.c2 = check_c2(F, t);
    if (!rep.c1.pass || !rep.c2.pass) {
        rep.verdict = Verdict::NotRealizable;
        rep.rule = "local_conditions";
        return rep;
    }
    rep.sh = sh_group(F, lim);
    if (rep.sh->unresolved) {
        rep.verdict = Verdict::Undetermined;
        rep.rule = "undetermined";
        rep.undetermined_reason = "unresolved resultant cofactor";
        return rep;
    }
    rep.real_data = real_local_data(F, t);
    if (rep.sh->rank() == 0) {
        rep.verdict = Verdict::Realizable;
        rep.rule = "sh_trivial";
        rep.witness = rep.real_data.front();
        return rep;
    }
    if (F.all_cyclotomic()) {
        rep.epsilon = epsilon_cyclotomic(F);
        if (reciprocity_holds(*rep.epsilon, rep.real_data)) {
            rep.rule = "epsilon_test";
            for (const auto& a : rep.real_data) {
                if (kills_basis(*rep.sh, rep.epsilon->total + a)) {
                    rep.verdict = Verdict::Realizable;
                    rep.witness = a;
                    return rep;
                }
            }
            rep.verdict = Verdict::NotRealizable;
            return rep;
        }
        if (F.count() == 2 && t.s != rep.c2.m && t.r != rep.c2.m) {
            rep.verdict = Verdict::Realizable;
            rep.rule = "two_factor_nonmaximal";
            return rep;
        }
        rep.verdict = Verdict::Undetermined;
        rep.rule = "undetermined";
        rep.undetermined_reason = kReciprocityReason;
        return rep;
    }
    if (F.count() == 2 && t.s != rep.c2.m && t.r != rep.c2.m) {
        rep.verdict = Verdict::Realizable;
        rep.rule = "two_factor_nonmaximal";
        return rep;
    }
    rep.verdict = Verdict::Undetermined;
    rep.rule = "undetermined";
    rep.undetermined_reason = "epsilon requires non-cyclotomic local data";
    return rep;
}

DecisionReport decide_milnor(const FactoredCharPoly& F, SignatureTarget t,
                             const MilnorProfile& profile, const FactorLimits& lim) {
    size_t n = F.count();
    if (profile.neg_pairs.size() != n)
        fail(Errc::BadInput, "profile must assign a count to every factor");
    DecisionReport rep;
    rep.trust = F.trust();
    rep.c1 = check_c1(F);
    rep.c2 = check_c2(F, t);
    long pair_sum = 0;
    ParityVector a_tau(n);
    for (size_t i = 0; i < n; ++i) {
        const Factor& f = F.factor(i);
        long cap = static_cast<long>(f.multiplicity) * unit_circle_pairs(f.poly, f.conductor);
        long v = profile.neg_pairs[i];
        if (v < 0 || v > cap) fail(Errc::BadInput, "profile entry out of range");
        pair_sum += v;
        a_tau.set(i, v % 2);
    }
    if (2 * pair_sum + rep.c2.m != t.s)
        fail(Errc::BadInput, "profile does not induce the target signature");
    if (!rep.c1.pass || !rep.c2.pass) {
        rep.verdict = Verdict::NotRealizable;
        rep.rule = "local_conditions";
        return rep;
    }
    rep.sh = sh_group(F, lim);
    if (rep.sh->unresolved) {
        rep.verdict = Verdict::Undetermined;
        rep.rule = "undetermined";
        rep.undetermined_reason = "unresolved resultant cofactor";
        return rep;
    }
    rep.real_data.push_back(a_tau);
    if (rep.sh->rank() == 0) {
        rep.verdict = Verdict::Realizable;
        rep.rule = "milnor_sh_trivial";
        rep.witness = a_tau;
        return rep;
    }
    if (F.all_cyclotomic()) {
        rep.epsilon = epsilon_cyclotomic(F);
        if (reciprocity_holds(*rep.epsilon, rep.real_data)) {
            rep.rule = "milnor_epsilon_test";
            if (kills_basis(*rep.sh, rep.epsilon->total + a_tau)) {
                rep.verdict = Verdict::Realizable;
                rep.witness = a_tau;
            } else {
                rep.verdict = Verdict::NotRealizable;
            }
            return rep;
        }
        rep.verdict = Verdict::Undetermined;
        rep.rule = "undetermined";
        rep.undetermined_reason = kReciprocityReason;
        return rep;
    }
    rep.verdict = Verdict::Undetermined;
    rep.rule = "undetermined";
    rep.undetermined_reason = "epsilon requires non-cyclotomic local data";
    return rep;
}

} // namespace lisom
