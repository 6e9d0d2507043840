#include "polyop/family.hpp"

#include <algorithm>

#include "mask_set.hpp"
#include "polyop/error.hpp"
#include "polyop/families.hpp"

namespace polyop {

Family::Family(int ambient, std::vector<Mask> sets) : ambient_(ambient), sets_(std::move(sets)) {
    check_ambient(ambient);
    const Mask full = bits::full(ambient);
    for (Mask m : sets_)
        if (m & ~full)
            fail(ErrorKind::domain, "set outside [" + std::to_string(ambient) + "]");
    std::sort(sets_.begin(), sets_.end(), bits::canonical_less);
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

Family Family::of(int ambient, const std::vector<std::vector<int>>& sets) {
    std::vector<Mask> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets)
        masks.push_back(bits::from_elements(s));
    return Family(ambient, std::move(masks));
}

Family Family::power_set(int n) {
    check_ambient(n);
    std::vector<Mask> all(std::size_t(1) << n);
    for (std::size_t m = 0; m < all.size(); ++m)
        all[m] = Mask(m);
    return Family(n, std::move(all));
}

bool Family::contains(Mask m) const { return std::binary_search(sets_.begin(), sets_.end(), m, bits::canonical_less); }

std::string Family::to_string() const {
    std::string s = "{";
    bool first = true;
    for (Mask m : sets_) {
        if (!first)
            s += ",";
        first = false;
        s += m == 0 ? std::string("-") : Subset(ambient_, m).to_string();
    }
    return s + "}/" + std::to_string(ambient_);
}

std::strong_ordering operator<=>(const Family& a, const Family& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0)
        return c;
    if (auto c = a.sets_.size() <=> b.sets_.size(); c != 0)
        return c;
    for (std::size_t i = 0; i < a.sets_.size(); ++i) {
        Mask x = a.sets_[i], y = b.sets_[i];
        if (x == y)
            continue;
        return bits::canonical_less(x, y) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool is_downward_closed(const Family& f) {
    for (Mask s : f) {
        for (Mask rest = s; rest; rest &= rest - 1) {
            Mask bit = rest & (~rest + 1);
            if (!f.contains(s & ~bit))
                return false;
        }
    }
    return true;
}

bool is_upward_closed(const Family& f) {
    const Mask full = bits::full(f.ambient());
    for (Mask s : f) {
        for (Mask rest = full & ~s; rest; rest &= rest - 1) {
            Mask bit = rest & (~rest + 1);
            if (!f.contains(s | bit))
                return false;
        }
    }
    return true;
}

Complex::Complex(Family f) : faces_(std::move(f)) {
    if (!is_downward_closed(faces_))
        fail(ErrorKind::domain, "family is not downward closed");
}

Complex Complex::generated_by(int ambient, const std::vector<std::vector<int>>& sets) {
    return down_closure(Family::of(ambient, sets));
}

Mask Complex::vertices() const {
    Mask v = 0;
    for (Mask s : faces_)
        v |= s;
    return v;
}

Complex trust_complex(Family f) { return Complex(std::move(f), Complex::Trusted{}); }

RelativePair::RelativePair(Complex t, Complex s) : total(std::move(t)), sub(std::move(s)) {
    if (total.ambient() != sub.ambient())
        fail(ErrorKind::domain, "relative pair components have different ambients");
    for (Mask m : sub)
        if (!total.contains(m))
            fail(ErrorKind::domain, "sub complex is not contained in total complex");
}

}  // namespace polyop
