#pragma once

#include <string>
#include <string_view>

#include "hypercode/bitmatrix.hpp"
#include "hypercode/hypergraph.hpp"

namespace hypercode {

// Matrix text: "<rows> <cols>" then one line of '0'/'1' characters per row.
std::string format_matrix(const BitMatrix& m);
BitMatrix parse_matrix(std::string_view text);

// Hypergraph text: "<vertices> <edges>" then one line per edge holding its
// ascending 0-based vertex indices separated by spaces. Blank lines and lines
// starting with '#' are skipped.
std::string format_hypergraph(const Hypergraph& h);
Hypergraph parse_hypergraph(std::string_view text);

}  // namespace hypercode
