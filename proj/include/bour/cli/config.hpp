#pragma once

#include <filesystem>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "bour/elimination/implicitize.hpp"

namespace bour::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2, kBudgetExceeded = 3 };

struct RunConfig {
  std::string command;
  std::string m = "3";  ///< integer, p/q or real depending on the command
  double alpha = 0.0;
  double r0 = 0.0, r1 = 1.0;
  double theta0 = 0.0, theta1 = 2.0 * std::numbers::pi;
  std::size_t nr = 50, ntheta = 100;
  bool paper_domain = false;
  elim::ImplicitMethod method = elim::ImplicitMethod::groebner;
  double budget_seconds = 0.0;  ///< 0 = unlimited
  std::size_t max_pairs = 0;    ///< 0 = unlimited
  bool allow_long = false;
  bool exact_rationals = false;  ///< Buchberger over Q instead of multi-modular
  std::filesystem::path output;
  std::vector<long> m_list{2, 3, 4, 5, 6};
  std::string mode = "profile";
  std::string suite = "implicitize";
  std::size_t repeat = 1;
  bool inject_quadric_fault = false;

  /// Applies --paper-domain and checks ranges.
  void validate() {
    if (paper_domain) {
      r0 = -1.0;
      r1 = 1.0;
      theta0 = 0.0;
      theta1 = std::numbers::pi;
    }
    if (nr < 2 || ntheta < 2) throw InputError("grid must be at least 2 x 2");
    if (!(r1 > r0)) throw InputError("need r0 < r1");
    if (budget_seconds < 0) throw InputError("budget must be non-negative");
    if (repeat == 0) throw InputError("repeat must be positive");
  }

  elim::ImplicitOptions implicit_options() const {
    elim::ImplicitOptions o;
    o.method = method;
    o.modular = !exact_rationals;
    o.budget.max_seconds = budget_seconds;
    o.budget.max_pairs = max_pairs;
    return o;
  }
};

/// Named checks with pass/fail status and a short witness.
class VerifyReport {
 public:
  struct Check {
    std::string name;
    bool passed;
    std::string witness;
  };

  void add(std::string name, bool passed, std::string witness = {}) {
    checks_.push_back({std::move(name), passed, std::move(witness)});
  }

  bool all_passed() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  int exit_code() const { return all_passed() ? kOk : kCheckFailed; }

  void print(std::ostream& os) const {
    std::size_t failed = 0;
    for (const auto& c : checks_) {
      os << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.witness.empty()) os << "  [" << c.witness << "]";
      os << "\n";
      failed += !c.passed;
    }
    os << checks_.size() - failed << "/" << checks_.size() << " checks passed\n";
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace bour::cli
