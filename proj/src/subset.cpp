#include "polyop/subset.hpp"

#include <atomic>

#include "polyop/error.hpp"

namespace polyop {

namespace {
std::atomic<int> g_cap{24};
}

int ambient_cap() { return g_cap.load(std::memory_order_relaxed); }

void set_ambient_cap(int cap) {
    if (cap < 0 || cap > kHardAmbientLimit)
        fail(ErrorKind::domain, "ambient cap must lie in [0, " + std::to_string(kHardAmbientLimit) + "]");
    g_cap.store(cap, std::memory_order_relaxed);
}

void check_ambient(int n) {
    if (n < 0)
        fail(ErrorKind::domain, "negative ambient size");
    if (n > ambient_cap())
        fail(ErrorKind::resource,
             "ambient size " + std::to_string(n) + " exceeds the cap " + std::to_string(ambient_cap()));
}

namespace bits {

std::vector<int> elements(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

Mask from_elements(const std::vector<int>& xs) {
    Mask m = 0;
    for (int x : xs) {
        if (x < 1 || x > kHardAmbientLimit)
            fail(ErrorKind::domain, "vertex " + std::to_string(x) + " out of range");
        m |= single(x);
    }
    return m;
}

}  // namespace bits

Subset::Subset(int ambient, Mask members) : ambient_(ambient), members_(members) {
    check_ambient(ambient);
    if (members & ~bits::full(ambient))
        fail(ErrorKind::domain, "subset member outside [" + std::to_string(ambient) + "]");
}

Subset Subset::of(int ambient, const std::vector<int>& members) {
    return Subset(ambient, bits::from_elements(members));
}

std::string Subset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int x : elements()) {
        if (!first)
            s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + "}";
}

}  // namespace polyop
