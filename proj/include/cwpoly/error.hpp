#pragma once

#include <stdexcept>
#include <string>

namespace cwpoly {

enum class ErrorKind {
  invalid_input,        // malformed document or unreadable number
  non_convex,           // input polygon is not convex
  degenerate_diagonal,  // some P_i == P_{i+n}
  not_parallel,         // an edge is not parallel to the direction it must follow
  length_mismatch,      // paired lists of different size
  identity_failure,     // an exact identity that must hold did not
};

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cwpoly
