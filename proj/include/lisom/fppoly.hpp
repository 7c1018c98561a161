#ifndef LISOM_FPPOLY_HPP
#define LISOM_FPPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lisom/intpoly.hpp"

namespace lisom {

bool is_prime_u64(std::uint64_t n);

/// Dense polynomial over F_p, p a word-sized prime. Coefficients reduced,
/// ascending degree, no trailing zeros.
class FpPoly {
public:
    using u64 = std::uint64_t;

    FpPoly() : p_(2) {}
    FpPoly(u64 p, std::vector<u64> coeffs);
    static FpPoly zero(u64 p) { return FpPoly(p, {}); }
    static FpPoly constant(u64 p, u64 c) { return FpPoly(p, {c}); }
    static FpPoly x(u64 p) { return FpPoly(p, {0, 1}); }

    u64 modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    u64 coeff(long k) const {
        return (k < 0 || k >= static_cast<long>(c_.size())) ? 0 : c_[static_cast<size_t>(k)];
    }
    const std::vector<u64>& coeffs() const { return c_; }
    u64 leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    FpPoly monic() const;

    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);

    // total order: degree, then coefficients from the constant term up
    static bool less(const FpPoly& a, const FpPoly& b);

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    u64 p_;
    std::vector<u64> c_;
};

FpPoly reduce_mod(const IntPoly& f, std::uint64_t prime);

std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b);
FpPoly rem(const FpPoly& a, const FpPoly& b);
FpPoly gcd_mod(FpPoly a, FpPoly b);

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f);
FpPoly powmod(const FpPoly& base, const BigInt& e, const FpPoly& f);

FpPoly fp_derivative(const FpPoly& f);
FpPoly squarefree_part(const FpPoly& f);

struct FpFactorization {
    std::uint64_t unit;
    std::vector<std::pair<FpPoly, unsigned>> factors; // monic irreducible, multiplicity
};

/// Complete factorization into monic irreducibles. Deterministic: the
/// equal-degree splitting draws trial elements from a generator seeded by
/// (p, coefficients), and the output is sorted by degree then
/// lexicographically.
FpFactorization factor_mod(const FpPoly& f);

/// Monic irreducible factor is self-reciprocal when it equals
/// g(0)^{-1} X^{deg g} g(1/X).
bool is_self_reciprocal(const FpPoly& g);

/// The distinct monic irreducible self-reciprocal factors of f.
/// X + 1 and X - 1 are kept when include_linear is set (the default).
std::vector<FpPoly> symmetric_irreducible_factors(const FpPoly& f, bool include_linear = true);

/// The common monic irreducible self-reciprocal factors of f and g mod p
/// (linear ones included).
std::vector<FpPoly> common_symmetric_factors(const IntPoly& f, const IntPoly& g,
                                             std::uint64_t prime);
bool has_common_symmetric_factor(const IntPoly& f, const IntPoly& g, std::uint64_t prime);

/// -1 in the subgroup of (Z/mZ)^x generated by p; m odd >= 3, p odd prime,
/// gcd(p, m) = 1.
bool subgroup_contains_minus_one(std::uint64_t m, std::uint64_t p);

/// Legendre symbol (a/p) in {-1, 0, +1} for odd prime p.
int legendre(const BigInt& a, const BigInt& p);

} // namespace lisom

#endif
