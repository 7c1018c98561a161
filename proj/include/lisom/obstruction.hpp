#ifndef LISOM_OBSTRUCTION_HPP
#define LISOM_OBSTRUCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lisom/fppoly.hpp"
#include "lisom/intpoly.hpp"
#include "lisom/realroots.hpp"

namespace lisom {

enum class Trust { Verified, Asserted };

struct Factor {
    IntPoly poly;
    unsigned multiplicity = 1;
    // conductor m when the factor is known to be the cyclotomic Phi_m
    std::optional<unsigned> conductor;
    bool irreducibility_verified = false;
};

/// F = prod f_i^{n_i} with f_i distinct monic symmetric squarefree
/// polynomials of even degree >= 2. Factors are kept in a canonical order
/// (degree, then coefficients), so indices are stable for a given input set.
class FactoredCharPoly {
public:
    static FactoredCharPoly from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    size_t count() const { return factors_.size(); }
    const Factor& factor(size_t i) const { return factors_[i]; }
    long degree() const;
    Trust trust() const;
    bool all_cyclotomic() const;

    BigInt value_at(const BigInt& x) const; // product of f_i(x)^{n_i}

    std::string to_string() const;

private:
    FactoredCharPoly() = default;
    std::vector<Factor> factors_;
};

/// Element of C(I): a map from factor indices to Z/2.
class ParityVector {
public:
    ParityVector() = default;
    explicit ParityVector(size_t n) : bits_(n, 0) {}
    explicit ParityVector(std::vector<uint8_t> bits) : bits_(std::move(bits)) {}

    size_t size() const { return bits_.size(); }
    int get(size_t i) const { return bits_[i]; }
    void set(size_t i, int v) { bits_[i] = static_cast<uint8_t>(v & 1); }
    const std::vector<uint8_t>& bits() const { return bits_; }

    friend ParityVector operator+(const ParityVector& a, const ParityVector& b);
    friend bool operator==(const ParityVector& a, const ParityVector& b) {
        return a.bits_ == b.bits_;
    }
    friend bool operator<(const ParityVector& a, const ParityVector& b) {
        return a.bits_ < b.bits_;
    }

private:
    std::vector<uint8_t> bits_;
};

/// sum_i c(i) a(i) mod 2
int eval_character(const ParityVector& c, const ParityVector& a);

struct FactorLimits {
    std::uint64_t trial_limit = 1'000'000;
    std::uint64_t rho_rounds = 1'000'000;
};

struct PrimeSet {
    std::vector<BigInt> primes;
    std::optional<BigInt> unresolved_cofactor;
};

/// Distinct prime divisors of |Res(f, g)| for coprime monic f, g. A pair of
/// known cyclotomic conductors short-circuits through the closed form of the
/// cyclotomic resultant; anything the factoring budget cannot resolve is
/// reported as an unresolved cofactor.
PrimeSet candidate_primes(const Factor& f, const Factor& g, const FactorLimits& lim = {});
PrimeSet candidate_primes(const IntPoly& f, const IntPoly& g, const FactorLimits& lim = {});

struct VSetWitness {
    BigInt prime;
    std::vector<std::string> common_factors;
};

struct VSet {
    std::vector<VSetWitness> witnesses; // primes in V_{f,g} with the factors found
    std::optional<BigInt> unresolved_cofactor;
    bool empty() const { return witnesses.empty(); }
};

/// V_{f,g}: primes where f and g share an irreducible self-reciprocal factor
/// mod p (linear factors X+-1 included).
VSet v_set(const Factor& f, const Factor& g, const FactorLimits& lim = {});
VSet v_set(const IntPoly& f, const IntPoly& g, const FactorLimits& lim = {});

struct ShEdge {
    size_t i, j;
    std::vector<VSetWitness> witnesses;
};

struct ShGroup {
    std::vector<std::vector<size_t>> classes; // partition of 0..n-1, sorted
    std::vector<ParityVector> basis;          // indicators of classes 1..k-1
    std::vector<ShEdge> edges;
    bool unresolved = false;       // some V_{i,j} could not be certified
    bool upper_bound_only = false; // set by the bounded rational variant
    size_t rank() const { return classes.empty() ? 0 : classes.size() - 1; }
};

ShGroup sh_group(const FactoredCharPoly& F, const FactorLimits& lim = {});

/// Bounded approximation of the rational obstruction group: V_i is read off
/// the infinite place plus symmetric factors mod p for p <= prime_bound.
/// Missing witnesses beyond the bound can only merge classes further, so the
/// true group is a quotient of the reported one.
ShGroup sh_rational_bounded(const FactoredCharPoly& F, std::uint64_t prime_bound = 1000);

} // namespace lisom

#endif
