#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace b3 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector lengths disagree.
struct DimensionError : Error {
  using Error::Error;
};

// Generator or column index outside the valid range.
struct RangeError : Error {
  using Error::Error;
};

// Elements from groups of different rank were mixed.
struct ContextError : Error {
  using Error::Error;
};

// Substitution hit a generator without an image.
struct UndefinedGeneratorError : Error {
  using Error::Error;
};

// Input needs more generators than the engine cap allows.
struct CapacityError : Error {
  using Error::Error;
};

// Structurally invalid planar diagram.
struct DiagramError : Error {
  using Error::Error;
};

// Malformed input text; offset is the byte position of the offending token.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (offset " + std::to_string(position) + ")"), offset(position) {}

  std::size_t offset;
};

}  // namespace b3
