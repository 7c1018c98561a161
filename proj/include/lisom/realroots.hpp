#ifndef LISOM_REALROOTS_HPP
#define LISOM_REALROOTS_HPP

#include <optional>
#include <vector>

#include "lisom/intpoly.hpp"

namespace lisom {

/// g with f(x) = x^n g(x + 1/x) for symmetric f of degree 2n. Roots of f on
/// the unit circle correspond to roots of g in [-2, 2].
struct TracePoly {
    IntPoly g;
    IntPoly source;
};

TracePoly trace_polynomial(const IntPoly& f);

/// Sturm chain of the squarefree part, integer coefficients, signs preserved.
struct SturmChain {
    std::vector<IntPoly> seq;

    static SturmChain build(const IntPoly& g);
    int variations_at(const Rational& t) const;
};

/// Number of distinct real roots of g in (a, b].
long sturm_count_interval(const IntPoly& g, const Rational& a, const Rational& b);

/// Number of roots z of f with |z| > 1, counted with multiplicity
/// (f squarefree symmetric; each factor may carry a known cyclotomic
/// conductor, in which case the count is zero).
long m_of_factor(const IntPoly& f, std::optional<unsigned> conductor = std::nullopt);

/// Number of conjugate root pairs of f on the unit circle,
/// i.e. deg(f)/2 - m_of_factor(f).
long unit_circle_pairs(const IntPoly& f, std::optional<unsigned> conductor = std::nullopt);

} // namespace lisom

#endif
