#pragma once

#include <string>
#include <string_view>

#include "polyop/family.hpp"

namespace polyop {

// Text format:
//   n <int>
//   faces | facets
//   one set per line, ascending vertices separated by spaces, "-" for the empty set
// A `facets` block is closed downward on load.
Family parse_family_text(std::string_view text);
Family parse_family_json(std::string_view text);
// Picks JSON when the first non-blank character is '{'.
Family parse_family(std::string_view text);

enum class TextKeyword { faces, facets };
std::string to_text(const Family& f, TextKeyword keyword = TextKeyword::faces);
std::string to_json(const Family& f);

// Pairs: total block, a line "---", sub block. JSON: {"total": ..., "sub": ...}.
RelativePair parse_pair(std::string_view text);
std::string to_text(const RelativePair& p);
std::string to_json(const RelativePair& p);

}  // namespace polyop
