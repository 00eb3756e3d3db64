#ifndef FAIRTEAM_ERRORS_HPP
#define FAIRTEAM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fairteam {

// Precondition violations on in-memory inputs (empty team, bad params, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A ratio or statistic that has no value for the given input.
class UndefinedValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// No candidate in the pool possesses any skill the project requires.
class InfeasibleProject : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent data file. `line` is 1-based; 0 means the error
// is not tied to a single line.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(Format(source, line, what)), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  static std::string Format(const std::string& source, std::size_t line,
                            const std::string& what) {
    if (line == 0) return source + ": " + what;
    return source + ":" + std::to_string(line) + ": " + what;
  }

  std::size_t line_;
};

}  // namespace fairteam

#endif  // FAIRTEAM_ERRORS_HPP
