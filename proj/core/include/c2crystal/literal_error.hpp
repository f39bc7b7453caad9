#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace c2crystal {

/// Thrown by the literal parsers. `position()` is the byte offset of the
/// first token that could not be accepted.
class LiteralError : public std::invalid_argument {
 public:
  LiteralError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace c2crystal
