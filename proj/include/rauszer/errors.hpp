#ifndef RAUSZER_ERRORS_HPP
#define RAUSZER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rauszer {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input: parse failures, range errors,
// missing fields or operation tables, capacity overruns.
struct InputError : Error {
  using Error::Error;
};

struct CapacityError : InputError {
  using InputError::InputError;
};

// A relation offered in validate mode is not a preorder; carries the
// witness pair that breaks reflexivity or transitivity.
struct NotPreorderError : InputError {
  std::size_t x, y;
  NotPreorderError(const std::string& what, std::size_t x_, std::size_t y_)
      : InputError(what), x(x_), y(y_) {}
};

// An operation-table document violates a lattice law; names the law and
// the first offending tuple.
struct LatticeLawError : InputError {
  std::string law;
  std::vector<int> tuple;
  LatticeLawError(const std::string& what, std::string law_, std::vector<int> tuple_)
      : InputError(what), law(std::move(law_)), tuple(std::move(tuple_)) {}
};

// A caller broke a stated precondition (non-open argument, not a filter,
// missing involution, ...). Distinct from InputError so the CLI can map
// both to the structural-error exit code while tests tell them apart.
struct PreconditionError : Error {
  using Error::Error;
};

// A state the underlying theorems rule out. Reaching one of these means
// a bug somewhere upstream, not bad user input.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace rauszer

#endif
