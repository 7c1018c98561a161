#ifndef LISOM_ERRORS_HPP
#define LISOM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lisom {

enum class Errc {
    ZeroPolynomial,
    ZeroConstantTerm,
    NotPrime,
    NotOddPrime,
    ModulusMismatch,
    BadInput,
    NotSymmetric,
    BoundaryRoot,
    ResultantZero,
    UnresolvedCofactor,
    DomainMismatch,
    Infeasible,
    NotCyclotomic,
    NotSquareFree,
    NotUnramified,
    BadSpec,
    ParseError,
    ValidationError,
    InternalInconsistency,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Error(Errc code, const std::string& what, std::size_t offset)
        : std::runtime_error(std::string(errc_name(code)) + " at offset " +
                             std::to_string(offset) + ": " + what),
          code_(code), offset_(offset) {}

    Errc code() const { return code_; }
    std::size_t offset() const { return offset_; }

private:
    Errc code_;
    std::size_t offset_ = 0;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace lisom

#endif
