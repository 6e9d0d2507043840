#include "polyop/families.hpp"

#include <algorithm>

#include "mask_set.hpp"
#include "polyop/error.hpp"

namespace polyop {

namespace {

Family grow(const Family& f, bool downward) {
    const int n = f.ambient();
    const Mask full = bits::full(n);
    detail::MaskSet seen(n);
    std::vector<Mask> stack;
    for (Mask s : f)
        if (seen.insert(s))
            stack.push_back(s);
    while (!stack.empty()) {
        Mask s = stack.back();
        stack.pop_back();
        Mask candidates = downward ? s : (full & ~s);
        for (Mask rest = candidates; rest; rest &= rest - 1) {
            Mask bit = rest & (~rest + 1);
            Mask t = downward ? (s & ~bit) : (s | bit);
            if (seen.insert(t))
                stack.push_back(t);
        }
    }
    return Family(n, std::move(seen.items()));
}

bool strictly_inside(Mask a, Mask b) { return a != b && bits::subset_of(a, b); }

}  // namespace

Family closure(const Family& f, ClosureMode mode) {
    switch (mode) {
    case ClosureMode::down:
        return grow(f, true);
    case ClosureMode::reduced_down: {
        if (f.empty() || f.contains(0))
            fail(ErrorKind::domain, "reduced closure needs a nonempty family without the empty set");
        Family d = grow(f, true);
        std::vector<Mask> sets(d.sets().begin() + 1, d.sets().end());
        return Family(f.ambient(), std::move(sets));
    }
    case ClosureMode::up:
        return grow(f, false);
    }
    fail(ErrorKind::internal, "unknown closure mode");
}

Complex down_closure(const Family& f) { return trust_complex(closure(f, ClosureMode::down)); }

Family complement(const Family& f, ComplementMode mode) {
    const int n = f.ambient();
    const Mask full = bits::full(n);
    std::vector<Mask> out;
    if (mode == ComplementMode::pointwise) {
        out.reserve(f.size());
        for (Mask s : f)
            out.push_back(full & ~s);
        return Family(n, std::move(out));
    }
    const std::uint64_t total = std::uint64_t(1) << n;
    out.reserve(total - f.size());
    for (std::uint64_t m = 0; m < total; ++m)
        if (!f.contains(Mask(m)))
            out.push_back(Mask(m));
    return Family(n, std::move(out));
}

Family complement_derived(const Family& f, int level) {
    if (level == 1)
        return complement(f, ComplementMode::faces);
    if (level == 2)
        return complement(f, ComplementMode::pointwise);
    fail(ErrorKind::domain, "derived complement level must be 1 or 2 for families");
}

Subset complement(const Subset& s) { return Subset(s.ambient(), bits::full(s.ambient()) & ~s.mask()); }

Family extremals(const Family& f, ExtremalMode mode) {
    std::vector<Mask> out;
    const auto& sets = f.sets();
    const bool maximal = mode == ExtremalMode::maximal;
    if (maximal && is_downward_closed(f)) {
        const Mask full = bits::full(f.ambient());
        for (Mask s : sets) {
            bool top = true;
            for (Mask rest = full & ~s; rest && top; rest &= rest - 1)
                top = !f.contains(s | (rest & (~rest + 1)));
            if (top)
                out.push_back(s);
        }
        return Family(f.ambient(), std::move(out));
    }
    for (Mask s : sets) {
        bool extreme = true;
        for (Mask t : sets) {
            if (maximal ? strictly_inside(s, t) : strictly_inside(t, s)) {
                extreme = false;
                break;
            }
        }
        if (extreme)
            out.push_back(s);
    }
    return Family(f.ambient(), std::move(out));
}

Family facets(const Complex& k) { return extremals(k.faces(), ExtremalMode::maximal); }

Family non_faces(const Family& f, NonFaceMode mode) {
    const int n = f.ambient();
    const Mask full = bits::full(n);
    std::vector<Mask> out;
    if (mode == NonFaceMode::mnf) {
        if (!is_downward_closed(f))
            fail(ErrorKind::domain, "minimal non-faces need a downward-closed family");
        if (f.empty())
            return Family(n, {0});
        for (Mask t : f) {
            for (Mask rest = full & ~t; rest; rest &= rest - 1) {
                Mask s = t | (rest & (~rest + 1));
                if (f.contains(s))
                    continue;
                bool minimal = true;
                for (Mask r = s; r && minimal; r &= r - 1)
                    minimal = f.contains(s & ~(r & (~r + 1)));
                if (minimal)
                    out.push_back(s);
            }
        }
        return Family(n, std::move(out));
    }
    if (!is_upward_closed(f))
        fail(ErrorKind::domain, "maximal non-members need an upward-closed family");
    if (f.empty())
        return Family(n, {full});
    for (Mask t : f) {
        for (Mask rest = t; rest; rest &= rest - 1) {
            Mask s = t & ~(rest & (~rest + 1));
            if (f.contains(s))
                continue;
            bool maximal = true;
            for (Mask r = full & ~s; r && maximal; r &= r - 1)
                maximal = f.contains(s | (r & (~r + 1)));
            if (maximal)
                out.push_back(s);
        }
    }
    return Family(n, std::move(out));
}

bool is_transversal(const Family& f) {
    const auto& sets = f.sets();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (bits::subset_of(sets[i], sets[j]))
                return false;
    return true;
}

Classification classify(const Family& f) {
    Classification c;
    c.simplicial = is_downward_closed(f);
    c.upward = is_upward_closed(f);
    c.transversal = is_transversal(f);
    c.reduced = !f.contains(0);
    return c;
}

std::optional<int> dimension(const Complex& k) {
    if (k.empty())
        return std::nullopt;
    return bits::size(k.faces().sets().back()) - 1;
}

bool is_pure(const Complex& k) {
    Family top = facets(k);
    for (Mask s : top)
        if (bits::size(s) != bits::size(top.sets().front()))
            return false;
    return true;
}

Family relabel(const Family& f, const Permutation& sigma) {
    if (sigma.size() != f.ambient())
        fail(ErrorKind::domain, "permutation size does not match the ambient");
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask s : f)
        out.push_back(sigma.apply(s));
    return Family(f.ambient(), std::move(out));
}

Complex relabel(const Complex& k, const Permutation& sigma) { return trust_complex(relabel(k.faces(), sigma)); }

Family join(const Family& a, const Family& b) {
    const int n = a.ambient();
    check_ambient(n + b.ambient());
    std::vector<Mask> out;
    out.reserve(a.size() * b.size());
    for (Mask s : a)
        for (Mask t : b)
            out.push_back(s | (t << n));
    return Family(n + b.ambient(), std::move(out));
}

Complex join(const Complex& a, const Complex& b) { return trust_complex(join(a.faces(), b.faces())); }

Complex slot_join(const Complex& a, int k, const Complex& b) {
    const int n = a.ambient(), m = b.ambient();
    if (k < 1 || k > n)
        fail(ErrorKind::domain, "slot out of range");
    if (a.contains(bits::single(k)))
        fail(ErrorKind::precondition, "slot join needs the slot to be a ghost vertex");
    check_ambient(n + m - 1);
    std::vector<Mask> out;
    out.reserve(a.size() * b.size());
    for (Mask s : a)
        for (Mask t : b)
            out.push_back(bits::insert_block(s, k, t, m));
    return trust_complex(Family(n + m - 1, std::move(out)));
}

Family shift(const Family& f, int offset, int new_ambient) {
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask s : f)
        out.push_back(s << offset);
    return Family(new_ambient, std::move(out));
}

Complex insert_ghost(const Complex& k, int p) {
    const int n = k.ambient();
    if (p < 1 || p > n + 1)
        fail(ErrorKind::domain, "ghost position out of range");
    std::vector<Mask> out;
    out.reserve(k.size());
    for (Mask s : k) {
        Mask low = s & bits::full(p - 1);
        Mask high = (s >> (p - 1)) << p;
        out.push_back(low | high);
    }
    return trust_complex(Family(n + 1, std::move(out)));
}

Complex complex_union(const Complex& a, const Complex& b) {
    if (a.ambient() != b.ambient())
        fail(ErrorKind::domain, "union of complexes on different ambients");
    std::vector<Mask> out(a.faces().sets());
    out.insert(out.end(), b.begin(), b.end());
    return trust_complex(Family(a.ambient(), std::move(out)));
}

Complex complex_intersection(const Complex& a, const Complex& b) {
    if (a.ambient() != b.ambient())
        fail(ErrorKind::domain, "intersection of complexes on different ambients");
    std::vector<Mask> out;
    for (Mask s : a)
        if (b.contains(s))
            out.push_back(s);
    return trust_complex(Family(a.ambient(), std::move(out)));
}

bool is_subcomplex(const Complex& sub, const Complex& k) {
    if (sub.ambient() != k.ambient())
        return false;
    return std::all_of(sub.begin(), sub.end(), [&](Mask s) { return k.contains(s); });
}

}  // namespace polyop
