#ifndef LGMF_ERRORS_HPP
#define LGMF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lgmf {

/// Invalid input to a mathematical operation (non-potential, bad label, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in incompatible rings.
class RingMismatch : public DomainError {
 public:
  explicit RingMismatch(const std::string& what) : DomainError("ring mismatch: " + what) {}
};

/// Malformed polynomial or file text.
class ParseError : public DomainError {
 public:
  explicit ParseError(const std::string& what) : DomainError("parse error: " + what) {}
};

/// A truncated computation did not stabilize; the caller must raise the cutoff.
class CutoffError : public DomainError {
 public:
  explicit CutoffError(const std::string& what) : DomainError(what + "; increase cutoff") {}
};

}  // namespace lgmf

#endif  // LGMF_ERRORS_HPP
