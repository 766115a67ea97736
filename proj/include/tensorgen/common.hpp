#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tensorgen {

using i64 = std::int64_t;

// Bad arguments at an API boundary (composite modulus, index out of range,
// oracle size bound exceeded, ...).
struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A matrix inversion was requested for a matrix with zero determinant.
struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

// A condition that is supposed to be unreachable fired; indicates a bug,
// not a user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

inline void expect(bool cond, const std::string& msg) {
  if (!cond) throw InvalidInputError(msg);
}

inline void require(bool cond, const char* msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace detail

}  // namespace tensorgen
