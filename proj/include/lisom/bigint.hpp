#ifndef LISOM_BIGINT_HPP
#define LISOM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "lisom/errors.hpp"

namespace lisom {

using BigInt = boost::multiprecision::cpp_int;

BigInt isqrt_floor(const BigInt& n);
bool is_perfect_square(const BigInt& n);

// Miller-Rabin, deterministic below 3.3e24, strong pseudoprime test above.
bool is_probable_prime(const BigInt& n);

// Reduced fraction, denominator > 0. Only what exact Sturm evaluation needs.
struct Rational {
    BigInt num;
    BigInt den;

    Rational() : num(0), den(1) {}
    Rational(BigInt n) : num(std::move(n)), den(1) {}
    Rational(BigInt n, BigInt d);

    static Rational of(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
};

} // namespace lisom

#endif
