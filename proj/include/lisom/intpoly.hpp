#ifndef LISOM_INTPOLY_HPP
#define LISOM_INTPOLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "lisom/bigint.hpp"

namespace lisom {

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// The zero polynomial is the empty coefficient sequence; otherwise the
/// leading coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(BigInt c);
    static IntPoly x();

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const BigInt& leading() const;
    BigInt coeff(long k) const;
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    IntPoly shifted(long k) const; // multiply by X^k
    IntPoly scaled(const BigInt& c) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<BigInt> c_;
};

BigInt eval(const IntPoly& p, const BigInt& x);

// X^{deg p} * p(1/X); requires p(0) != 0
IntPoly reciprocal(const IntPoly& p);

// nonzero, even degree, and equal to its reciprocal
bool is_symmetric(const IntPoly& p);

IntPoly derivative(const IntPoly& p);

// Exact division; throws BadInput if the division leaves a remainder.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Quotient and remainder over Q for monic b (exact over Z when b is monic).
struct DivRem {
    IntPoly quot;
    IntPoly rem;
};
DivRem divrem_monic(const IntPoly& a, const IntPoly& b);

BigInt content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

// gcd over Q, returned primitive with positive leading coefficient
IntPoly gcd_primitive(IntPoly a, IntPoly b);

// Res(p, q), exact. Subresultant PRS for small operands, CRT over word
// primes for large ones; both paths are exact and agree.
BigInt resultant(const IntPoly& p, const IntPoly& q);
BigInt resultant_prs(const IntPoly& p, const IntPoly& q);
BigInt resultant_crt(const IntPoly& p, const IntPoly& q);

// m-th cyclotomic polynomial
IntPoly cyclotomic(unsigned m);

// true iff gcd(p, p') over Q is constant
bool squarefree_check(const IntPoly& p);

// If p equals some cyclotomic polynomial, return its conductor.
std::optional<unsigned> identify_cyclotomic(const IntPoly& p);

unsigned long euler_phi(unsigned long m);

} // namespace lisom

#endif
