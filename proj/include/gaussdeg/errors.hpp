#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gaussdeg {

// Every throwing operation in the library uses one of the four kinds below,
// so callers (the CLI in particular) can map failures to stable machine
// readable records without string-matching messages.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Argument outside an operation's stated domain.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

// Request is well-formed but exceeds a stated budget (enumeration size,
// series order, ...).
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error("ResourceError", what) {}
};

// The locus is outside the range where any implemented formula applies.
class UnsupportedLocus : public Error {
 public:
  explicit UnsupportedLocus(const std::string& what)
      : Error("UnsupportedLocus", what) {}
};

// An internal cross-check failed; indicates a bug, never a bad input.
class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& what)
      : Error("IntegrityError", what) {}
};

}  // namespace gaussdeg
