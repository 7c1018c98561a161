#include "lisom/knots.hpp"

#include <algorithm>
#include <numeric>

namespace lisom {

TorusKnotSpec::TorusKnotSpec(unsigned u_, unsigned v_) : u(u_), v(v_) {
    if (u < 3 || v < 3 || u % 2 == 0 || v % 2 == 0)
        fail(Errc::BadSpec, "torus knot parameters must be odd and > 1");
    if (std::gcd(u, v) != 1) fail(Errc::BadSpec, "torus knot parameters must be coprime");
}

namespace {

std::vector<unsigned> divisors_above_one(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

} // namespace

FactoredCharPoly torus_alexander(const TorusKnotSpec& spec) {
    std::vector<Factor> factors;
    for (unsigned a : divisors_above_one(spec.u)) {
        for (unsigned b : divisors_above_one(spec.v)) {
            Factor f;
            f.conductor = a * b;
            f.poly = cyclotomic(a * b);
            f.multiplicity = 1;
            f.irreducibility_verified = true;
            factors.push_back(std::move(f));
        }
    }
    return FactoredCharPoly::from_factors(std::move(factors));
}

bool is_unramified(const IntPoly& d) {
    if (d.is_zero() || !d.is_monic()) return false;
    if (eval(d, BigInt(1)) != 1) return false;
    BigInt at = eval(d, BigInt(-1));
    return at == 1 || at == -1;
}

bool is_unramified_product(const FactoredCharPoly& F) {
    BigInt one = F.value_at(BigInt(1));
    if (one != 1) return false;
    BigInt minus = F.value_at(BigInt(-1));
    return minus == 1 || minus == -1;
}

namespace {

void knot_gate(const FactoredCharPoly& F) {
    for (const auto& f : F.factors())
        if (f.multiplicity != 1)
            fail(Errc::NotSquareFree, "Alexander polynomial must be squarefree");
    if (!is_unramified_product(F))
        fail(Errc::NotUnramified, "Alexander polynomial must be unramified");
}

} // namespace

DecisionReport knot_milnor_realizable(const FactoredCharPoly& F, SignatureTarget t,
                                      const MilnorProfile& profile, const FactorLimits& lim) {
    knot_gate(F);
    return decide_milnor(F, t, profile, lim);
}

KnotIndexReport realizable_indices(const FactoredCharPoly& F, const FactorLimits& lim) {
    knot_gate(F);
    KnotIndexReport report;
    report.deg = F.degree();
    size_t nf = F.count();
    if (nf > 24) fail(Errc::BadInput, "too many factors");
    long n = report.deg / 2;
    long m = m_of(F);
    std::vector<long> caps(nf);
    for (size_t i = 0; i < nf; ++i) {
        const Factor& f = F.factor(i);
        caps[i] = static_cast<long>(f.multiplicity) * unit_circle_pairs(f.poly, f.conductor);
    }
    C1Report c1 = check_c1(F);
    ShGroup sh = sh_group(F, lim);
    std::optional<Epsilon> eps;
    bool epsilon_available = false;
    if (sh.rank() > 0 && !sh.unresolved && F.all_cyclotomic()) {
        eps = epsilon_cyclotomic(F);
        epsilon_available = true;
    }
    long top = report.deg - (report.deg % 8); // largest multiple of 8 in range
    for (long iota = -top; iota <= top; iota += 8) {
        KnotIndexEntry entry;
        entry.iota = iota;
        SignatureTarget t{n + iota / 2, n - iota / 2};
        C2Report c2 = check_c2(F, t);
        if (!c1.pass || !c2.pass) {
            entry.verdict = Verdict::NotRealizable;
            entry.reason = "local conditions fail";
            report.entries.push_back(std::move(entry));
            continue;
        }
        if (sh.unresolved) {
            entry.verdict = Verdict::Undetermined;
            entry.reason = "unresolved resultant cofactor";
            report.entries.push_back(std::move(entry));
            continue;
        }
        if (sh.rank() > 0 && !epsilon_available) {
            entry.verdict = Verdict::Undetermined;
            entry.reason = "epsilon requires non-cyclotomic local data";
            report.entries.push_back(std::move(entry));
            continue;
        }
        if (epsilon_available) {
            int eps_sum = 0;
            for (size_t i = 0; i < nf; ++i) eps_sum ^= eps->total.get(i);
            if (eps_sum != ((t.s - m) / 2) % 2) {
                // the mechanical epsilon misses a finite place here; decline
                entry.verdict = Verdict::Undetermined;
                entry.reason = "epsilon local data does not balance the real place";
                report.entries.push_back(std::move(entry));
                continue;
            }
        }
        // search by parity class: epsilon_tau depends only on the counts
        // mod 2, the index only on their sum
        long target = (t.s - m) / 2;
        bool found = false;
        for (size_t mask = 0; mask < (size_t(1) << nf) && !found; ++mask) {
            long min_sum = 0, max_sum = 0;
            bool ok = true;
            for (size_t i = 0; i < nf; ++i) {
                long b = (mask >> i) & 1;
                if (b > caps[i]) { ok = false; break; }
                min_sum += b;
                max_sum += caps[i] - ((caps[i] - b) % 2);
            }
            if (!ok || target < min_sum || target > max_sum) continue;
            if ((target - min_sum) % 2 != 0) continue;
            if (sh.rank() > 0) {
                ParityVector a(nf);
                for (size_t i = 0; i < nf; ++i) a.set(i, (mask >> i) & 1);
                ParityVector x = eps->total + a;
                bool killed = true;
                for (const auto& c : sh.basis)
                    if (eval_character(c, x) != 0) { killed = false; break; }
                if (!killed) continue;
            }
            // build a concrete witness profile in this parity class
            MilnorProfile prof;
            prof.neg_pairs.assign(nf, 0);
            long need = target;
            for (size_t i = 0; i < nf; ++i) {
                long b = (mask >> i) & 1;
                prof.neg_pairs[i] = b;
                need -= b;
            }
            for (size_t i = 0; i < nf && need > 0; ++i) {
                long room = caps[i] - ((caps[i] - prof.neg_pairs[i]) % 2) - prof.neg_pairs[i];
                long add = std::min(need, room);
                add -= add % 2;
                prof.neg_pairs[i] += add;
                need -= add;
            }
            if (need != 0) fail(Errc::InternalInconsistency, "witness construction failed");
            entry.witness = std::move(prof);
            found = true;
        }
        entry.verdict = found ? Verdict::Realizable : Verdict::NotRealizable;
        if (found) report.realizable.push_back(iota);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

ShGroup three_torus_sh(unsigned p, unsigned p1, unsigned p2, const FactorLimits& lim) {
    for (unsigned q : {p, p1, p2}) {
        if (!is_prime_u64(q) || q % 4 != 3)
            fail(Errc::BadSpec, "parameters must be primes = 3 mod 4");
    }
    if (p == p1 || p == p2 || p1 == p2) fail(Errc::BadSpec, "parameters must be distinct");
    return sh_group(torus_alexander(TorusKnotSpec(p, p1 * p2)), lim);
}

} // namespace lisom
