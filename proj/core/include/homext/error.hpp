#ifndef HOMEXT_ERROR_HPP
#define HOMEXT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace homext {

/// Contract violations, malformed documents, unusable parameters.
/// Axiom failures of otherwise well-formed inputs are reported through
/// ValidationReport values instead, never through this type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homext

#endif
