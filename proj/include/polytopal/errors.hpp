/*
 * Exception types shared across the library.  Validation results are data
 * (vectors of violations), these are for genuinely broken invocations.
 */

#ifndef POLYTOPAL_ERRORS_HPP
#define POLYTOPAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polytopal {

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct NotClosed : std::runtime_error {
    explicit NotClosed(const std::string& what) : std::runtime_error(what) {}
};

struct WrongArity : std::invalid_argument {
    explicit WrongArity(const std::string& what) : std::invalid_argument(what) {}
};

struct TargetVertexUnknown : std::invalid_argument {
    explicit TargetVertexUnknown(const std::string& what) : std::invalid_argument(what) {}
};

/// The chain-map induction found inconsistent facet coefficients.  Signals a
/// non-polytopal input or an implementation bug; never expected on validated maps.
struct InductionBroken : std::runtime_error {
    explicit InductionBroken(const std::string& what) : std::runtime_error(what) {}
};

struct Mismatch : std::invalid_argument {
    explicit Mismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAHomotopy : std::invalid_argument {
    explicit NotAHomotopy(const std::string& what) : std::invalid_argument(what) {}
};

struct WitnessNotFound : std::runtime_error {
    explicit WitnessNotFound(const std::string& what) : std::runtime_error(what) {}
};

struct TieBreakNonEquivariant : std::runtime_error {
    explicit TieBreakNonEquivariant(const std::string& what) : std::runtime_error(what) {}
};

struct OrbitNotFree : std::runtime_error {
    explicit OrbitNotFree(const std::string& what) : std::runtime_error(what) {}
};

/// The mod-p functional system has no solution.  Would contradict the
/// existence result the construction relies on; treated as a hard error.
struct Inconsistent : std::runtime_error {
    explicit Inconsistent(const std::string& what) : std::runtime_error(what) {}
};

struct PairingMismatch : std::runtime_error {
    explicit PairingMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polytopal

#endif
