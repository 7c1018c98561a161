#ifndef LISOM_TESTS_COMPANION_ORACLE_HPP
#define LISOM_TESTS_COMPANION_ORACLE_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "lisom/intpoly.hpp"

namespace lisom::testsupport {

// Independent floating-point oracle for m(f): companion-matrix eigenvalues,
// counting |z| > 1 + 1e-6. Returns -1 when any modulus lands in the
// ambiguity band just above 1, so callers can skip the sample.
inline long companion_m_oracle(const IntPoly& f) {
    long n = f.degree();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (long i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    double lead = static_cast<double>(f.leading());
    for (long i = 0; i < n; ++i)
        companion(i, n - 1) = -static_cast<double>(f.coeff(i)) / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    long count = 0;
    for (long i = 0; i < n; ++i) {
        double mag = std::abs(solver.eigenvalues()[i]);
        if (mag > 1.0 + 1e-9 && mag < 1.0 + 1e-4) return -1;
        if (mag > 1.0 + 1e-6) ++count;
    }
    return count;
}

} // namespace lisom::testsupport

#endif
