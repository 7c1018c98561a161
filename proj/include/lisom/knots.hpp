#ifndef LISOM_KNOTS_HPP
#define LISOM_KNOTS_HPP

#include "lisom/decision.hpp"

namespace lisom {

/// (u,v)-torus knot parameters: odd coprime integers > 1.
struct TorusKnotSpec {
    unsigned u;
    unsigned v;
    TorusKnotSpec(unsigned u_, unsigned v_);
};

/// Alexander polynomial of the (u,v)-torus knot as a factored product:
/// the cyclotomics Phi_{ab} over divisor pairs a | u, b | v with a, b > 1.
FactoredCharPoly torus_alexander(const TorusKnotSpec& spec);

/// Monic with d(1) = 1 and d(-1) = +-1.
bool is_unramified(const IntPoly& d);

/// Same check through the factored form, without expanding the product.
bool is_unramified_product(const FactoredCharPoly& F);

/// Milnor-index realizability for a knot with Alexander polynomial F:
/// squarefree unramified F delegated to the lattice Milnor engine.
DecisionReport knot_milnor_realizable(const FactoredCharPoly& F, SignatureTarget t,
                                      const MilnorProfile& profile,
                                      const FactorLimits& lim = {});

struct KnotIndexEntry {
    long iota = 0;
    Verdict verdict = Verdict::Undetermined;
    std::optional<MilnorProfile> witness;
    std::string reason;
};

struct KnotIndexReport {
    long deg = 0;
    std::vector<KnotIndexEntry> entries; // every iota = 0 mod 8 with |iota| <= deg
    std::vector<long> realizable;
};

/// For each candidate index iota (multiples of 8 up to the degree), search
/// the Milnor profiles through their parity classes and report a witness
/// when one exists.
KnotIndexReport realizable_indices(const FactoredCharPoly& F, const FactorLimits& lim = {});

/// Sh group of Delta_{p, p1 p2} for distinct primes p, p1, p2 = 3 mod 4.
ShGroup three_torus_sh(unsigned p, unsigned p1, unsigned p2, const FactorLimits& lim = {});

} // namespace lisom

#endif
