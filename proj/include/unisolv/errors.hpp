#pragma once

#include <stdexcept>
#include <string>

namespace unisolv {

/// Shape or variable-count mismatch between operands.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A linear system that was required to be invertible is not.
struct SingularMatrixError : std::domain_error {
  explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

/// Degenerate simplex or otherwise invalid geometric input.
struct GeometryError : std::domain_error {
  explicit GeometryError(const std::string& what) : std::domain_error(what) {}
};

/// Parameter choice hits a pole of a closed-form expression.
struct PoleError : std::domain_error {
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// A caller-side contract was violated (e.g. non-holomorphic input).
struct ContractError : std::invalid_argument {
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal consistency check that must never fail did fail.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace unisolv
