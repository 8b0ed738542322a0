#pragma once

#include <stdexcept>
#include <string>

namespace lcy {

// Error taxonomy mirrors the CLI exit codes: parse (2), precondition (3),
// budget (4).  Anything else escaping a module is a bug.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

struct BudgetError : Error {
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

}  // namespace lcy
