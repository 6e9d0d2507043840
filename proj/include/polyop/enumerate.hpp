#pragma once

#include <vector>

#include "polyop/family.hpp"

namespace polyop {

constexpr int kEnumerationLimit = 5;

// All complexes on [n] in canonical order, including the void and trivial ones.
// Throws a resource error for n > 5. The returned reference stays valid.
const std::vector<Complex>& enumerate_complexes(int n);

// All valid relative pairs on [n].
std::vector<RelativePair> enumerate_pairs(int n);

}  // namespace polyop
