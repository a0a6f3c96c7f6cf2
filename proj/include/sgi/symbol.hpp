#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace sgi {

/// A named indeterminate: a model parameter, a declared constant or the
/// Laplace variable. Identity is the name.
class Symbol {
 public:
  /// Throws std::invalid_argument unless `name` starts with a letter and
  /// continues with letters, digits or underscores.
  explicit Symbol(std::string name);

  const std::string& name() const noexcept { return name_; }

  static bool is_valid_name(std::string_view name) noexcept;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    return a.name_.compare(b.name_) <=> 0;
  }

 private:
  std::string name_;
};

}  // namespace sgi
