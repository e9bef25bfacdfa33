#pragma once

#include <stdexcept>
#include <string>

namespace quasicount {

/// Input outside an operation's domain (bad n, divisor that does not divide,
/// inadmissible signature, ...). The CLI maps this to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// n exceeds the brute-force oracle bound.
class OracleBoundError : public DomainError {
 public:
  explicit OracleBoundError(const std::string& what) : DomainError(what) {}
};

/// An internal invariant broke: a T-value or genus came out non-integral,
/// or two counting routes disagreed. The CLI maps this to exit code 2.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace quasicount
