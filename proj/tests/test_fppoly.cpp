#include <doctest.h>

#include "lisom/fppoly.hpp"

using namespace lisom;

namespace {

IntPoly salem10() { return IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }
IntPoly salem12() { return IntPoly{1, -1, 1, -1, 0, 0, -1, 0, 0, -1, 1, -1, 1}; }

} // namespace

TEST_CASE("reduce_mod") {
    CHECK(reduce_mod(cyclotomic(14), 13) == FpPoly(13, {1, 12, 1, 12, 1, 12, 1}));
    CHECK(reduce_mod(IntPoly{-14, 1}, 7) == FpPoly(7, {0, 1}));
    CHECK_THROWS_AS(reduce_mod(IntPoly{1, 1}, 15), Error);
    // Phi_{2m} = Phi_m mod 2 for odd m >= 3
    for (unsigned m = 3; m <= 99; m += 2)
        CHECK(reduce_mod(cyclotomic(2 * m), 2) == reduce_mod(cyclotomic(m), 2));
}

TEST_CASE("gcd_mod") {
    FpPoly f = reduce_mod(salem10(), 13);
    CHECK(gcd_mod(f, FpPoly::zero(13)) == f.monic());
    // 13 divides Res(f1, Phi_14), so the gcd mod 13 is nonconstant
    CHECK(gcd_mod(f, reduce_mod(cyclotomic(14), 13)).degree() > 0);
    // coprime pair
    CHECK(gcd_mod(reduce_mod(cyclotomic(12), 7), reduce_mod(salem12(), 7)).degree() == 0);
    CHECK_THROWS_AS(gcd_mod(FpPoly(5, {1, 1}), FpPoly(7, {1, 1})), Error);
}

TEST_CASE("factor_mod basics") {
    // X^2 mod 5
    FpFactorization fx = factor_mod(FpPoly(5, {0, 0, 1}));
    REQUIRE(fx.factors.size() == 1);
    CHECK(fx.factors[0].first == FpPoly::x(5));
    CHECK(fx.factors[0].second == 2);

    // Salem 10 mod 13 contains the symmetric quadratic X^2 + 7X + 1
    FpFactorization f1 = factor_mod(reduce_mod(salem10(), 13));
    bool has = false;
    for (const auto& [q, m] : f1.factors)
        if (q == FpPoly(13, {1, 7, 1})) has = true;
    CHECK(has);

    // Salem 12 mod 13 contains X + 2 and X + 7
    FpFactorization f2 = factor_mod(reduce_mod(salem12(), 13));
    bool has2 = false, has7 = false;
    for (const auto& [q, m] : f2.factors) {
        if (q == FpPoly(13, {2, 1})) has2 = true;
        if (q == FpPoly(13, {7, 1})) has7 = true;
    }
    CHECK(has2);
    CHECK(has7);
}

TEST_CASE("factor_mod is deterministic") {
    FpPoly f = reduce_mod(cyclotomic(35) * cyclotomic(15), 11);
    FpFactorization a = factor_mod(f);
    FpFactorization b = factor_mod(f);
    REQUIRE(a.factors.size() == b.factors.size());
    for (size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].first == b.factors[i].first);
        CHECK(a.factors[i].second == b.factors[i].second);
    }
}

TEST_CASE("factor_mod in characteristic 2") {
    // Phi_3 Phi_5 mod 2: irreducible of degrees 2 and 4
    FpPoly f = reduce_mod(cyclotomic(3) * cyclotomic(5), 2);
    FpFactorization fac = factor_mod(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first.degree() == 2);
    CHECK(fac.factors[1].first.degree() == 4);
    // a 2-power multiplicity exercises the char-2 squarefree split
    FpPoly g = reduce_mod(cyclotomic(3) * cyclotomic(3), 2);
    FpFactorization gfac = factor_mod(g);
    REQUIRE(gfac.factors.size() == 1);
    CHECK(gfac.factors[0].second == 2);
    // equal-degree splitting with several factors mod 2
    FpPoly h = reduce_mod(cyclotomic(7) * cyclotomic(9), 2);
    FpFactorization hfac = factor_mod(h);
    FpPoly prod = FpPoly::constant(2, hfac.unit);
    for (const auto& [q, m] : hfac.factors)
        for (unsigned k = 0; k < m; ++k) prod = prod * q;
    CHECK(prod == h);
}

TEST_CASE("factor_mod with multiplicities divisible by the characteristic") {
    // (x+1)^9 mod 3
    FpPoly a = FpPoly(3, {1, 1});
    FpPoly acc = FpPoly::constant(3, 1);
    for (int i = 0; i < 9; ++i) acc = acc * a;
    FpFactorization fac = factor_mod(acc);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == a);
    CHECK(fac.factors[0].second == 9);
    // (x+1)^3 (x+2)^2 mod 3 mixes p-divisible and coprime multiplicities
    FpPoly b = FpPoly(3, {2, 1});
    FpPoly mixed = a * a * a * b * b;
    FpFactorization mf = factor_mod(mixed);
    REQUIRE(mf.factors.size() == 2);
    CHECK(mf.factors[0].second == 9 - 6); // (x+1)^3
    CHECK(mf.factors[1].second == 2);     // (x+2)^2
}

TEST_CASE("symmetric_irreducible_factors") {
    // Salem 10 and Phi_14 share X^2 + 7X + 1 mod 13
    auto s = symmetric_irreducible_factors(reduce_mod(salem10() * cyclotomic(14), 13));
    bool has = false;
    for (const auto& q : s)
        if (q == FpPoly(13, {1, 7, 1})) has = true;
    CHECK(has);
    // non-palindromic irreducible quadratic has none
    CHECK(symmetric_irreducible_factors(FpPoly(7, {1, 1, 3})).empty());
    // the include_linear flag controls X +- 1
    FpPoly lin = reduce_mod(cyclotomic(7), 7); // (X-1)^6 mod 7
    CHECK(symmetric_irreducible_factors(lin, true).size() == 1);
    CHECK(symmetric_irreducible_factors(lin, false).empty());
    CHECK_THROWS_AS(symmetric_irreducible_factors(FpPoly(5, {0, 1})), Error);
}

TEST_CASE("has_common_symmetric_factor on the paper pairs") {
    CHECK(has_common_symmetric_factor(salem12(), cyclotomic(14), 7)); // via X + 1
    CHECK(has_common_symmetric_factor(salem10(), cyclotomic(14), 13));
    CHECK_FALSE(has_common_symmetric_factor(salem12(), cyclotomic(12), 7));
    // even-order reciprocal pair X+2, X+7 counts ...
    auto pair13 = common_symmetric_factors(salem12(), cyclotomic(12), 13);
    REQUIRE(pair13.size() == 2);
    CHECK(pair13[0] == FpPoly(13, {2, 1}));
    CHECK(pair13[1] == FpPoly(13, {7, 1}));
    // ... while the odd-order pair X-2, X-4 of Phi_3 mod 7 does not
    CHECK_FALSE(has_common_symmetric_factor(cyclotomic(21), cyclotomic(147), 7));
}

TEST_CASE("no common symmetric factor off the resultant support") {
    IntPoly f = salem10();
    IntPoly g = cyclotomic(14);
    // Res = 169 = 13^2; any prime other than 13 must fail
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 17ull, 19ull})
        CHECK_FALSE(has_common_symmetric_factor(f, g, p));
}

TEST_CASE("subgroup_contains_minus_one") {
    CHECK(subgroup_contains_minus_one(7, 13)); // 13 = -1 mod 7
    CHECK_FALSE(subgroup_contains_minus_one(7, 2));
    CHECK(subgroup_contains_minus_one(7, 3));
    CHECK_THROWS_AS(subgroup_contains_minus_one(6, 5), Error);
    CHECK_THROWS_AS(subgroup_contains_minus_one(9, 3), Error);
    // for prime m = 3 mod 4 this matches the Legendre criterion
    for (std::uint64_t m : {7ull, 11ull, 19ull, 23ull}) {
        for (std::uint64_t p : {3ull, 5ull, 13ull, 17ull, 29ull}) {
            if (p == m) continue;
            CHECK(subgroup_contains_minus_one(m, p) == (legendre(BigInt(p), BigInt(m)) == -1));
        }
    }
}

TEST_CASE("legendre") {
    CHECK(legendre(BigInt(3), BigInt(7)) == -1);
    CHECK(legendre(BigInt(0), BigInt(7)) == 0);
    CHECK(legendre(BigInt(11), BigInt(7)) == 1);
    CHECK_THROWS_AS(legendre(BigInt(2), BigInt(9)), Error);
    // against brute-force squares enumeration
    for (long p : {3, 7, 11, 13, 19, 23}) {
        std::vector<bool> is_square(static_cast<size_t>(p), false);
        for (long x = 0; x < p; ++x) is_square[static_cast<size_t>(x * x % p)] = true;
        for (long a = 0; a < p; ++a) {
            int expect = a == 0 ? 0 : (is_square[static_cast<size_t>(a)] ? 1 : -1);
            CHECK(legendre(BigInt(a), BigInt(p)) == expect);
        }
    }
}

TEST_CASE("factor_mod reconstructs random inputs") {
    std::uint64_t state = 0xfeedULL;
    auto next = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull}) {
        for (int trial = 0; trial < 25; ++trial) {
            long deg = 1 + static_cast<long>(next() % 30);
            std::vector<std::uint64_t> c(static_cast<size_t>(deg) + 1);
            for (auto& v : c) v = next() % p;
            c.back() = 1 + next() % (p - 1);
            FpPoly f(p, std::move(c));
            if (f.degree() < 1) continue;
            FpFactorization fac = factor_mod(f);
            FpPoly prod = FpPoly::constant(p, fac.unit);
            for (const auto& [q, mult] : fac.factors) {
                CHECK(q.is_monic());
                for (unsigned k = 0; k < mult; ++k) prod = prod * q;
            }
            CHECK(prod == f);
        }
    }
}
