#ifndef EBC_ERRORS_HPP
#define EBC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ebc {

// Exit-code taxonomy used by the CLI: 0 success, 2 parse, 3 budget,
// 4 verification failure, 5 I/O.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& m) : std::runtime_error(m) {}
};

struct VerifyError : std::runtime_error {
  explicit VerifyError(const std::string& m) : std::runtime_error(m) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace ebc

#endif
