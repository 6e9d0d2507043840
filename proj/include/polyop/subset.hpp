#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace polyop {

// Vertex i of [n] is bit i-1.
using Mask = std::uint32_t;

constexpr int kHardAmbientLimit = 30;

int ambient_cap();
// Throws a domain error outside [0, kHardAmbientLimit].
void set_ambient_cap(int cap);
// Throws a resource error when n exceeds the configured cap.
void check_ambient(int n);

namespace bits {

constexpr Mask full(int n) { return n <= 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u)); }
constexpr Mask single(int i) { return 1u << (i - 1); }
constexpr bool has(Mask m, int i) { return (m >> (i - 1)) & 1u; }
constexpr int size(Mask m) { return std::popcount(m); }

// Positions below k stay, the block J (on [m]) lands at k..k+m-1,
// positions above k move up by m-1. Bit k of I is discarded.
constexpr Mask insert_block(Mask I, int k, Mask J, int m) {
    Mask low = I & full(k - 1);
    Mask high = (k >= 32) ? 0u : (I >> k);
    return low | (J << (k - 1)) | (high << (k - 1 + m));
}

// Canonical order: cardinality, then numeric value.
constexpr bool canonical_less(Mask a, Mask b) {
    int sa = size(a), sb = size(b);
    return sa != sb ? sa < sb : a < b;
}

constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

std::vector<int> elements(Mask m);
Mask from_elements(const std::vector<int>& xs);

}  // namespace bits

class Subset {
public:
    Subset() = default;
    // Throws a domain error if some member lies outside [n].
    Subset(int ambient, Mask members);
    static Subset of(int ambient, const std::vector<int>& members);

    int ambient() const { return ambient_; }
    Mask mask() const { return members_; }
    bool contains(int i) const { return i >= 1 && i <= ambient_ && bits::has(members_, i); }
    int size() const { return bits::size(members_); }
    bool empty() const { return members_ == 0; }
    std::vector<int> elements() const { return bits::elements(members_); }
    std::string to_string() const;

    friend bool operator==(const Subset&, const Subset&) = default;

private:
    int ambient_ = 0;
    Mask members_ = 0;
};

}  // namespace polyop
