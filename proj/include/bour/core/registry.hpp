#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bour/core/error.hpp"

namespace bour {

inline constexpr std::size_t kMaxVariables = 10;

/// Ordered list of variable names shared by every polynomial built over it.
/// The position of a name is its rank in lex/grevlex orders (first = largest).
class VariableRegistry {
 public:
  VariableRegistry() : names_(std::make_shared<const std::vector<std::string>>()) {}

  explicit VariableRegistry(std::vector<std::string> names) {
    if (names.size() > kMaxVariables)
      throw InputError("registry holds at most " + std::to_string(kMaxVariables) + " variables");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!is_identifier(names[i])) throw InputError("invalid variable name '" + names[i] + "'");
      if (names[i] == "i") throw InputError("'i' is reserved for the imaginary unit");
      for (std::size_t j = 0; j < i; ++j)
        if (names[j] == names[i]) throw InputError("duplicate variable '" + names[i] + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  VariableRegistry(std::initializer_list<std::string> names)
      : VariableRegistry(std::vector<std::string>(names)) {}

  std::size_t size() const noexcept { return names_->size(); }
  std::span<const std::string> names() const noexcept { return *names_; }
  const std::string& name(std::size_t index) const { return names_->at(index); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_->begin());
  }

  std::size_t require(std::string_view name) const {
    if (auto idx = index_of(name)) return *idx;
    throw InputError("unknown variable '" + std::string(name) + "'");
  }

  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  /// Name not yet in the registry, starting from `stem` and appending digits.
  std::string fresh_name(const std::string& stem) const {
    if (!contains(stem)) return stem;
    for (int k = 1;; ++k) {
      std::string candidate = stem + std::to_string(k);
      if (!contains(candidate)) return candidate;
    }
  }

  VariableRegistry with_appended(const std::string& name) const {
    std::vector<std::string> names(*names_);
    names.push_back(name);
    return VariableRegistry(std::move(names));
  }

  std::string joined(std::string_view sep = ",") const {
    std::string s;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) s += sep;
      s += (*names_)[i];
    }
    return s;
  }

  friend bool operator==(const VariableRegistry& a, const VariableRegistry& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

  static bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace bour
