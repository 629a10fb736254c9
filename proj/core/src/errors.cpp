#include "argkb/errors.hpp"

namespace argkb {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(message),
      line_(line),
      column_(column) {}

CapExceeded::CapExceeded(const std::string& cap, std::size_t limit)
    : Error("resource cap exceeded: " + cap + " > " + std::to_string(limit)),
      cap_(cap),
      limit_(limit) {}

}  // namespace argkb
