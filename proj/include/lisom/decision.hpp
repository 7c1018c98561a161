#ifndef LISOM_DECISION_HPP
#define LISOM_DECISION_HPP

#include <optional>
#include <string>
#include <vector>

#include "lisom/obstruction.hpp"

namespace lisom {

struct SignatureTarget {
    long r = 0;
    long s = 0;
};

/// Total of sum n_i * m(f_i) over the factors.
long m_of(const FactoredCharPoly& F);

struct C1Report {
    BigInt at_one;        // F(1)
    BigInt at_minus_one;  // F(-1)
    BigInt signed_product; // (-1)^n F(1) F(-1)
    bool pass = false;
};

struct C2Report {
    long m = 0;
    long deg = 0;
    bool sum_ok = false;
    bool mod8_ok = false;
    bool r_bound_ok = false;
    bool s_bound_ok = false;
    bool parity_ok = false;
    bool pass = false;
};

C1Report check_c1(const FactoredCharPoly& F);
C2Report check_c2(const FactoredCharPoly& F, SignatureTarget t);

/// The set C(V'') of real-place parity vectors compatible with the target
/// signature: parities of the vectors (sigma_i), 0 <= sigma_i <= n_i k_i,
/// sum 2 sigma_i = s - m(F). Requires a passing C2; an empty set raises
/// Infeasible.
std::vector<ParityVector> real_local_data(const FactoredCharPoly& F, SignatureTarget t);

/// Finite-place local data of a cyclotomic product. a^p(i) = 1 iff p | m_i,
/// p = 3 mod 4, and Phi_{m_i} mod p has a self-reciprocal irreducible factor
/// (linear ones included).
struct Epsilon {
    std::vector<std::pair<BigInt, ParityVector>> per_prime; // nonzero vectors only
    ParityVector total;
    // conductors of the form l^k or 2 l^k, where the quadratic extension
    // E/F ramifies at a finite place; recorded for audit
    std::vector<unsigned> ramified_conductors;
};

Epsilon epsilon_cyclotomic(const FactoredCharPoly& F);

/// Per-factor count of negative-definite hermitian eigen-pairs.
struct MilnorProfile {
    std::vector<long> neg_pairs;
};

enum class Verdict { Realizable, NotRealizable, Undetermined };

const char* verdict_name(Verdict v); // lowercase, for reports

struct DecisionReport {
    Verdict verdict = Verdict::Undetermined;
    std::string rule;
    C1Report c1;
    C2Report c2;
    std::optional<ShGroup> sh;
    std::optional<Epsilon> epsilon;
    std::vector<ParityVector> real_data;
    std::optional<ParityVector> witness;
    std::string undetermined_reason;
    Trust trust = Trust::Asserted;
};

/// Rule chain, first match wins:
///   R1 failing C1 or C2 is fatal;
///   R2 a trivial obstruction group realizes every admissible signature;
///   R3 cyclotomic products: realizable iff some a in C(V'') kills
///      epsilon + epsilon_a on the whole character basis;
///   R4 two factors at a non-maximal signature are always realizable;
///   R5 otherwise undetermined.
DecisionReport decide_lattice(const FactoredCharPoly& F, SignatureTarget t,
                              const FactorLimits& lim = {});

/// Same gate, but the real-place datum is pinned by the Milnor profile
/// instead of quantifying over C(V'').
DecisionReport decide_milnor(const FactoredCharPoly& F, SignatureTarget t,
                             const MilnorProfile& profile, const FactorLimits& lim = {});

} // namespace lisom

#endif
