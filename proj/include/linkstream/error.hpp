#pragma once

#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace linkstream {

/// Recoverable input or parameter error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {
[[noreturn]] inline void contract_failure(const char* expr, const char* file, int line) {
  std::fprintf(stderr, "%s:%d: contract violated: %s\n", file, line, expr);
  std::abort();
}
}  // namespace detail

}  // namespace linkstream

// Precondition checks that stay on in release builds.
#define LINKSTREAM_EXPECTS(cond)                                                  \
  do {                                                                            \
    if (!(cond)) ::linkstream::detail::contract_failure(#cond, __FILE__, __LINE__); \
  } while (0)
