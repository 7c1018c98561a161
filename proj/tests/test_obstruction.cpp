#include <doctest.h>

#include <algorithm>

#include "lisom/obstruction.hpp"

using namespace lisom;

namespace {

IntPoly salem10() { return IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }
IntPoly salem12() { return IntPoly{1, -1, 1, -1, 0, 0, -1, 0, 0, -1, 1, -1, 1}; }

Factor phi(unsigned m, unsigned mult = 1) {
    Factor f;
    f.poly = cyclotomic(m);
    f.conductor = m;
    f.multiplicity = mult;
    f.irreducibility_verified = true;
    return f;
}

Factor plain(const IntPoly& p, unsigned mult = 1) {
    Factor f;
    f.poly = p;
    f.multiplicity = mult;
    return f;
}

} // namespace

TEST_CASE("factored charpoly validation") {
    CHECK_THROWS_AS(FactoredCharPoly::from_factors({plain(IntPoly{-1, 1})}), Error); // linear
    CHECK_THROWS_AS(FactoredCharPoly::from_factors({plain(IntPoly{1, 2, 3})}), Error); // asym
    CHECK_THROWS_AS(FactoredCharPoly::from_factors({phi(7), phi(7)}), Error); // repeated
    IntPoly sq = cyclotomic(3) * cyclotomic(3);
    CHECK_THROWS_AS(FactoredCharPoly::from_factors({plain(sq)}), Error); // not squarefree
    FactoredCharPoly ok = FactoredCharPoly::from_factors({phi(14, 2), phi(7, 2)});
    CHECK(ok.degree() == 24);
    CHECK(ok.trust() == Trust::Verified);
    // canonical order sorts Phi_7 before Phi_14 (same degree, lex)
    CHECK(ok.factor(0).conductor == 7u);
    CHECK(ok.factor(1).conductor == 14u);
}

TEST_CASE("asserted factors are recognized as cyclotomic when they match") {
    FactoredCharPoly F = FactoredCharPoly::from_factors({plain(cyclotomic(21))});
    CHECK(F.factor(0).conductor == 21u);
    CHECK(F.trust() == Trust::Verified);
    FactoredCharPoly G = FactoredCharPoly::from_factors({plain(salem10())});
    CHECK_FALSE(G.factor(0).conductor.has_value());
    CHECK(G.trust() == Trust::Asserted);
}

TEST_CASE("candidate primes from the paper resultants") {
    auto ps = candidate_primes(plain(salem10()), phi(14));
    REQUIRE(ps.primes.size() == 1);
    CHECK(ps.primes[0] == 13);
    CHECK_FALSE(ps.unresolved_cofactor.has_value());
    auto ps2 = candidate_primes(plain(salem12()), phi(14));
    REQUIRE(ps2.primes.size() == 1);
    CHECK(ps2.primes[0] == 7);
}

TEST_CASE("cyclotomic candidate primes use the closed form") {
    // Res(Phi_m, Phi_{m p^e}) = p^{phi(m)}, so the only candidate is p
    auto ps = candidate_primes(phi(21), phi(147));
    REQUIRE(ps.primes.size() == 1);
    CHECK(ps.primes[0] == 7);
    // coprime conductor ratio: resultant 1
    CHECK(candidate_primes(phi(21), phi(55)).primes.empty());
    // cross-check the closed form against the generic resultant path
    for (unsigned m : {3u, 5u, 7u, 9u, 15u, 21u}) {
        for (unsigned n : {6u, 9u, 12u, 14u, 21u, 35u, 45u, 63u}) {
            if (m == n) continue;
            auto fast = candidate_primes(phi(m), phi(n));
            auto slow = candidate_primes(cyclotomic(m), cyclotomic(n));
            CHECK(fast.primes == slow.primes);
        }
    }
}

TEST_CASE("v_set matches the paper examples") {
    auto v1 = v_set(plain(salem10()), phi(14));
    REQUIRE(v1.witnesses.size() == 1);
    CHECK(v1.witnesses[0].prime == 13);
    auto v2 = v_set(plain(salem12()), phi(14));
    REQUIRE(v2.witnesses.size() == 1);
    CHECK(v2.witnesses[0].prime == 7);
    auto v3 = v_set(plain(salem12()), phi(12));
    REQUIRE(v3.witnesses.size() == 1);
    CHECK(v3.witnesses[0].prime == 13);
    // Phi_14, Phi_12 are coprime with resultant 1
    CHECK(v_set(phi(14), phi(12)).empty());
}

TEST_CASE("v_set of the cyclotomic pq family follows the Legendre symbol") {
    // (p, q) = (3, 7): (3/7) = -1, V empty
    CHECK(v_set(phi(21), phi(147)).empty());
    // (p, q) = (11, 7): (11/7) = 1, V = {7}
    auto v = v_set(phi(77), phi(539)); // 539 = 7^2 * 11
    REQUIRE(v.witnesses.size() == 1);
    CHECK(v.witnesses[0].prime == 7);
}

TEST_CASE("sh group of the paper examples") {
    FactoredCharPoly s10 = FactoredCharPoly::from_factors({plain(salem10()), phi(14, 2)});
    CHECK(sh_group(s10).rank() == 0);
    FactoredCharPoly s12 =
        FactoredCharPoly::from_factors({plain(salem12()), phi(14), phi(12)});
    ShGroup g12 = sh_group(s12);
    CHECK(g12.rank() == 0);
    CHECK(g12.edges.size() == 2);
    FactoredCharPoly intro7 = FactoredCharPoly::from_factors({phi(7, 2), phi(14, 2)});
    CHECK(sh_group(intro7).rank() == 1);
    FactoredCharPoly intro3 = FactoredCharPoly::from_factors({phi(3, 2), phi(6, 2)});
    CHECK(sh_group(intro3).rank() == 0);
}

TEST_CASE("sh partition does not depend on the input order") {
    FactoredCharPoly a =
        FactoredCharPoly::from_factors({plain(salem12()), phi(14), phi(12)});
    FactoredCharPoly b =
        FactoredCharPoly::from_factors({phi(12), plain(salem12()), phi(14)});
    ShGroup ga = sh_group(a), gb = sh_group(b);
    CHECK(ga.classes == gb.classes);
    CHECK(ga.rank() == gb.rank());
}

TEST_CASE("every edge witness divides the resultant and shares a symmetric factor") {
    FactoredCharPoly F =
        FactoredCharPoly::from_factors({plain(salem12()), phi(14), phi(12)});
    ShGroup g = sh_group(F);
    for (const auto& e : g.edges) {
        BigInt res = resultant(F.factor(e.i).poly, F.factor(e.j).poly);
        for (const auto& w : e.witnesses) {
            CHECK(res % w.prime == 0);
            CHECK(has_common_symmetric_factor(F.factor(e.i).poly, F.factor(e.j).poly,
                                              static_cast<std::uint64_t>(w.prime)));
            CHECK_FALSE(w.common_factors.empty());
        }
    }
}

TEST_CASE("sh basis is class-constant and independent") {
    FactoredCharPoly F = FactoredCharPoly::from_factors({phi(77), phi(847), phi(9317)});
    ShGroup g = sh_group(F);
    CHECK(g.rank() == 2); // (11/7) = 1: all classes separate
    CHECK(g.basis.size() == g.rank());
    for (const auto& c : g.basis) {
        for (const auto& cls : g.classes) {
            int v = c.get(cls.front());
            for (size_t i : cls) CHECK(c.get(i) == v);
        }
    }
    // independence: each basis vector is the indicator of a distinct class
    std::vector<ParityVector> seen;
    for (const auto& c : g.basis) {
        CHECK(std::find(seen.begin(), seen.end(), c) == seen.end());
        seen.push_back(c);
    }
}

TEST_CASE("starved factoring budgets degrade to an unresolved flag") {
    FactorLimits starved{2, 0}; // trial division to 2, no rho iterations
    VSet v = v_set(plain(salem10()), phi(14), starved);
    CHECK(v.witnesses.empty());
    REQUIRE(v.unresolved_cofactor.has_value());
    CHECK(*v.unresolved_cofactor == 169);
    FactoredCharPoly F = FactoredCharPoly::from_factors({plain(salem10()), phi(14, 2)});
    CHECK(sh_group(F, starved).unresolved);
}

TEST_CASE("gcd mod l is constant off the resultant support") {
    // coprime monic p, q: any prime not dividing Res(p,q) leaves them coprime
    IntPoly p = salem10();
    IntPoly q = cyclotomic(14); // Res = 169
    for (std::uint64_t l : {3ull, 5ull, 7ull, 11ull, 17ull, 101ull})
        CHECK(gcd_mod(reduce_mod(p, l), reduce_mod(q, l)).degree() == 0);
    CHECK(gcd_mod(reduce_mod(p, 13), reduce_mod(q, 13)).degree() > 0);
}

TEST_CASE("eval_character") {
    ParityVector c(2), a(2);
    c.set(0, 1);
    a.set(0, 1);
    a.set(1, 1);
    CHECK(eval_character(c, a) == 1);
    CHECK(eval_character(ParityVector(2), a) == 0);
    ParityVector c11(2);
    c11.set(0, 1);
    c11.set(1, 1);
    CHECK(eval_character(c11, a) == 0);
    CHECK_THROWS_AS(eval_character(ParityVector(2), ParityVector(3)), Error);
}

TEST_CASE("identical factors are a resultant-zero error") {
    CHECK_THROWS_AS(candidate_primes(salem10(), salem10()), Error);
    CHECK_THROWS_AS(candidate_primes(phi(14), phi(14)), Error);
}

TEST_CASE("rational group can vanish while the integral group does not") {
    // Salem 6: f1 and Phi_12 are coprime, so the integral group has rank 1;
    // rationally both factors meet the infinite place and the group dies.
    Factor salem6;
    salem6.poly = IntPoly{1, -3, -1, 5, -1, -3, 1};
    FactoredCharPoly F = FactoredCharPoly::from_factors({salem6, phi(12)});
    CHECK(sh_group(F).rank() == 1);
    CHECK(sh_rational_bounded(F, 100).rank() == 0);
}

TEST_CASE("bounded rational group refines the integral merges") {
    // every sh_group edge with witness <= bound is also merged rationally
    FactoredCharPoly F =
        FactoredCharPoly::from_factors({plain(salem12()), phi(14), phi(12)});
    ShGroup integral = sh_group(F);
    ShGroup rational = sh_rational_bounded(F, 1000);
    CHECK(rational.upper_bound_only);
    auto cls_of = [](const ShGroup& g, size_t i) {
        for (size_t k = 0; k < g.classes.size(); ++k)
            for (size_t x : g.classes[k])
                if (x == i) return k;
        return size_t(-1);
    };
    for (const auto& e : integral.edges)
        CHECK(cls_of(rational, e.i) == cls_of(rational, e.j));
    // all-cyclotomic products always collapse to rank 0 via the infinite place
    FactoredCharPoly cyc = FactoredCharPoly::from_factors({phi(21), phi(147)});
    CHECK(sh_rational_bounded(cyc, 50).rank() == 0);
    // single factor
    CHECK(sh_rational_bounded(FactoredCharPoly::from_factors({phi(21)}), 50).rank() == 0);
}
