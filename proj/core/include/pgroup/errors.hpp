#ifndef PGROUP_ERRORS_HPP
#define PGROUP_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pgroup {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed presentation file. Carries the source position of the offending
/// token (1-based line and column; 0 means "not applicable").
class ParseError : public Error {
public:
  ParseError(std::string source, std::size_t line, std::size_t column,
             const std::string& message)
      : Error(format(source, line, column, message)),
        source_(std::move(source)), line_(line), column_(column) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format(const std::string& source, std::size_t line,
                            std::size_t column, const std::string& message) {
    std::string s = source.empty() ? "<input>" : source;
    s += ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    return s;
  }

  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

/// Precondition violation on otherwise well-formed data (abelian input where a
/// non-abelian group is required, prime mismatch, non-normal subgroup, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A configured enumeration budget was exceeded. The caller sees an explicit
/// refusal instead of a silently truncated count.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(const std::string& what, std::uint64_t required,
                 std::uint64_t budget)
      : Error(what + " (requires " + std::to_string(required) + ", budget " +
              std::to_string(budget) + ")"),
        required_(required), budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace pgroup

#endif  // PGROUP_ERRORS_HPP
