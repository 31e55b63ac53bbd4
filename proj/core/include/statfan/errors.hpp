#ifndef STATFAN_ERRORS_HPP
#define STATFAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace statfan {

/// Malformed textual input (designs, models, monomials, polynomials).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration exceeded its configured search cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace statfan

#endif
