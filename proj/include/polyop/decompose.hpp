#pragma once

#include <optional>

#include "polyop/base_operads.hpp"
#include "polyop/family.hpp"

namespace polyop {

struct Decomposition {
    Complex outer;
    int slot = 1;
    Complex inner;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

constexpr int kDecomposeLimit = 6;

struct DecomposeOptions {
    int bound = kDecomposeLimit;
    int workers = 1;
};

// Searches for x = compose(outer, slot, inner, variant) with neither factor the unit.
// Returns the first witness ordered by outer arity, slot, outer, inner; nullopt if none exists.
// Throws a resource error if x.ambient() exceeds the bound (at most 6).
std::optional<Decomposition> decompose(const Complex& x, Variant variant, const DecomposeOptions& options = {});

}  // namespace polyop
