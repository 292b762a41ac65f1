#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bour {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments: registry mismatch, unknown variable, excluded index m.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, std::string token, const std::string& what)
      : InputError("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                   " near '" + token + "': " + what),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

/// Division by zero or a quotient that is not exact in the polynomial ring.
class DivisionError : public Error {
 public:
  using Error::Error;
};

/// Progress counters of an elimination run, reported when a budget trips.
struct EliminationStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_pending = 0;
  std::size_t basis_size = 0;
  unsigned max_degree = 0;
  std::size_t primes_used = 0;
  double elapsed_seconds = 0.0;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, EliminationStats stats)
      : Error(what + " (pairs processed " + std::to_string(stats.pairs_processed) +
              ", pending " + std::to_string(stats.pairs_pending) + ", max degree " +
              std::to_string(stats.max_degree) + ")"),
        stats_(stats) {}

  const EliminationStats& stats() const noexcept { return stats_; }

 private:
  EliminationStats stats_;
};

/// The elimination ideal needs more than one generator; carries them as text.
class NonPrincipalError : public Error {
 public:
  explicit NonPrincipalError(std::vector<std::string> generators)
      : Error(describe(generators)), generators_(std::move(generators)) {}

  const std::vector<std::string>& generators() const noexcept { return generators_; }

 private:
  static std::string describe(const std::vector<std::string>& gens) {
    std::string s = "elimination ideal is not principal; generators:";
    for (const auto& g : gens) s += "\n  " + g;
    return s;
  }
  std::vector<std::string> generators_;
};

}  // namespace bour
