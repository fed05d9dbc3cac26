#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropmc {

// Base class for runtime failures reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Some superficial degree of divergence vanished where it is used as a divisor.
// `where` names the offending sector or subgraph.
class NonGenericDimension : public Error {
 public:
  NonGenericDimension(const std::string& what, std::string where)
      : Error(what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// A (loops, legs) pair with no graphs, or one outside the tabulated range.
class InvalidSector : public Error {
 public:
  using Error::Error;
};

// Malformed, truncated or mismatched serialized data.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Numerical evaluation failed (singular pivot, disconnected graph, ...).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// A recurrence produced a value that contradicts a proven invariant.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

// A parallel run lost a worker; `completed` samples were accumulated before it.
class PartialResult : public Error {
 public:
  PartialResult(const std::string& what, std::uint64_t completed)
      : Error(what), completed_(completed) {}
  std::uint64_t completed() const noexcept { return completed_; }

 private:
  std::uint64_t completed_;
};

}  // namespace tropmc
