#include "sgi/symbol.hpp"

#include <cctype>
#include <stdexcept>

namespace sgi {

Symbol::Symbol(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw std::invalid_argument("invalid symbol name '" + name_ + "'");
  }
}

bool Symbol::is_valid_name(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace sgi
