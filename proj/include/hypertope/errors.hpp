#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypertope {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relator/word text that does not match the expression grammar.
// `position` is a 0-based byte offset into the input string.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct UnknownGeneratorError : ParseError {
  UnknownGeneratorError(const std::string& symbol, std::size_t position)
      : ParseError("unknown generator '" + symbol + "'", position),
        symbol(symbol) {}
  std::string symbol;
};

struct FamilyParamError : Error {
  using Error::Error;
};

// Coset enumeration tried to define more cosets than the configured bound.
struct CapacityExceeded : Error {
  explicit CapacityExceeded(std::size_t capacity)
      : Error("coset capacity exceeded (" + std::to_string(capacity) +
              " cosets defined without closing)"),
        capacity(capacity) {}
  std::size_t capacity;
};

// An operation that needs the full element table refused to build one
// larger than the configured ceiling.
struct ElementCeilingExceeded : Error {
  explicit ElementCeilingExceeded(std::size_t ceiling)
      : Error("element table would exceed the ceiling of " +
              std::to_string(ceiling) + " elements"),
        ceiling(ceiling) {}
  std::size_t ceiling;
};

struct NotA2GroupError : Error {
  using Error::Error;
};

// quotient_criterion: the generator map does not kill every relator.
struct NotAHomomorphismError : Error {
  using Error::Error;
};

// Subgroup operation mixing subgroups of different parent groups.
struct ParentMismatchError : Error {
  ParentMismatchError() : Error("subgroups belong to different parent groups") {}
};

}  // namespace hypertope
