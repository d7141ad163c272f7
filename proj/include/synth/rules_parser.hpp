#pragma once

#include <string>

#include "synth/query.hpp"

namespace synth {

// Parses a rule library:
//
//   # general iteration over a sized array
//   rule loop(N, T, X):
//       size(X, N), type(N, int), type(X, T), pointer(T)
//
// Head kinds are loop/zip_loop/store/affine_access with fixed arities.
// Validation: every head variable must occur in a positive body literal,
// wildcards only in negative literals, and negative literals require a
// positive conjunct binding their variables. Throws ParseError.
RuleLibrary parse_rules(const std::string& text);

}  // namespace synth
