#pragma once

#include <stdexcept>
#include <string>

namespace ghc {

/// Element or tuple not valid for the group realization it is used with.
class InvalidElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap (ball size, basis size) would be exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(std::string cap, std::size_t limit)
      : std::runtime_error("resource cap '" + cap + "' exceeded (limit " + std::to_string(limit) + ")"),
        cap_(std::move(cap)) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

/// Operation not available for this group kind (e.g. reduced norm on a free group).
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Precondition on degrees, arities or parameters violated.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ghc
