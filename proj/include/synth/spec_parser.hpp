#pragma once

#include <stdexcept>
#include <string>

#include "synth/spec.hpp"

namespace synth {

// Parse/validation failure with source position. Used by both the spec and
// rules parsers.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + message),
          line(line),
          col(col) {}

    int line;
    int col;
};

// Parses the on-disk spec format:
//
//   function gemv(m: int, n: int, alpha: float, a: float*, x: float*,
//                 beta: float, y: float*) -> void
//   relations:
//       size(x, n)
//       size(y, m)
//       output(y)
//
// Repeated relation lines with the same name merge into one relation (a
// relation is a named set of tuples); tuples of one relation must share
// arity. '#' starts a comment. Throws ParseError on malformed input,
// unknown type names, or a bare atom that names no declared parameter.
FunctionSpec parse_spec(const std::string& text);

}  // namespace synth
