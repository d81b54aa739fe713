#include "qlat/errors.hpp"

namespace qlat {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

}  // namespace qlat
