#pragma once

#include <stdexcept>
#include <string>

namespace exlab {

// Numeric domain violation: no root, |r(k)| >= 1, table overrun and the like.
// The CLI maps this to exit code 3.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed or incomplete experiment configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace exlab
