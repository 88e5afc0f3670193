#pragma once

#include <stdexcept>
#include <string>

namespace ringline {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Construction requested in a ring whose characteristic forbids it
// (typically: 2 is not invertible but a 1/2 is needed).
struct CharacteristicError : Error {
    explicit CharacteristicError(const std::string& what) : Error(what) {}
};

// Malformed textual input (ring spec, element literal, structure file).
// `offset` is a byte offset into the offending text when known, -1 otherwise.
struct ParseError : Error {
    ParseError(const std::string& what, long offset_ = -1)
        : Error(offset_ >= 0 ? what + " (byte " + std::to_string(offset_) + ")" : what),
          offset(offset_) {}
    long offset;
};

}  // namespace ringline
