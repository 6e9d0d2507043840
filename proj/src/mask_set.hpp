#pragma once

#include <unordered_set>
#include <vector>

#include "polyop/subset.hpp"

namespace polyop::detail {

// Membership set over P([n]); a flat bitmap for small n.
class MaskSet {
public:
    explicit MaskSet(int n) : flat_(n <= 20) {
        if (flat_)
            bitmap_.assign(std::size_t(1) << n, false);
    }
    // Returns true if m was newly inserted.
    bool insert(Mask m) {
        if (flat_) {
            if (bitmap_[m])
                return false;
            bitmap_[m] = true;
            items_.push_back(m);
            return true;
        }
        if (!hashed_.insert(m).second)
            return false;
        items_.push_back(m);
        return true;
    }
    bool contains(Mask m) const { return flat_ ? bool(bitmap_[m]) : hashed_.count(m) > 0; }
    std::vector<Mask>& items() { return items_; }

private:
    bool flat_;
    std::vector<bool> bitmap_;
    std::unordered_set<Mask> hashed_;
    std::vector<Mask> items_;
};

}  // namespace polyop::detail
