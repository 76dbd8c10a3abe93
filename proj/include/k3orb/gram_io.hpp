#pragma once

#include <string>
#include <string_view>

#include "k3orb/lattice.hpp"

namespace k3orb {

// Reads a lattice from the JSON shape {"gram": [[...], ...]} with integer
// entries. Syntax errors throw GramParseError with 1-based line/column;
// semantic errors (non-square, non-symmetric, non-integer entries) throw
// GramParseError positioned by entry path in the message.
GramLattice parse_gram_json(std::string_view text);

GramLattice read_gram_file(const std::string& path);

}  // namespace k3orb
