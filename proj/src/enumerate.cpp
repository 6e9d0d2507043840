#include "polyop/enumerate.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "polyop/error.hpp"
#include "polyop/families.hpp"

namespace polyop {

namespace {

std::vector<Complex> extend(const std::vector<Complex>& below, int n) {
    // A complex on [n] is its deletion A of vertex n plus the cone over a link B with B inside A.
    std::vector<Complex> out;
    for (const auto& a : below) {
        for (const auto& b : below) {
            if (!is_subcomplex(b, a))
                continue;
            std::vector<Mask> sets(a.faces().sets());
            for (Mask s : b)
                sets.push_back(s | bits::single(n));
            out.push_back(trust_complex(Family(n, std::move(sets))));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const std::vector<Complex>& enumerate_complexes(int n) {
    if (n < 0)
        fail(ErrorKind::domain, "negative ambient");
    if (n > kEnumerationLimit)
        fail(ErrorKind::resource, "complex enumeration is limited to n <= " + std::to_string(kEnumerationLimit));
    static std::once_flag once;
    static std::array<std::vector<Complex>, kEnumerationLimit + 1> table;
    std::call_once(once, [] {
        table[0] = {Complex(0), trust_complex(Family(0, {0}))};
        for (int i = 1; i <= kEnumerationLimit; ++i)
            table[i] = extend(table[i - 1], i);
    });
    return table[n];
}

std::vector<RelativePair> enumerate_pairs(int n) {
    std::vector<RelativePair> out;
    const auto& all = enumerate_complexes(n);
    for (const auto& k : all)
        for (const auto& l : all)
            if (is_subcomplex(l, k))
                out.emplace_back(k, l);
    return out;
}

}  // namespace polyop
