#include "polyop/scpx.hpp"

#include "polyop/error.hpp"
#include "polyop/families.hpp"

namespace polyop {

namespace named {

Complex trivial(int n) { return trust_complex(Family(n, {0})); }

Complex discrete(int n) {
    std::vector<Mask> sets{0};
    for (int i = 1; i <= n; ++i)
        sets.push_back(bits::single(i));
    return trust_complex(Family(n, std::move(sets)));
}

Complex simplex(int n) { return trust_complex(Family::power_set(n)); }

Complex boundary_simplex(int n) {
    check_ambient(n);
    std::vector<Mask> sets;
    const Mask full = bits::full(n);
    for (Mask m = 0; m < full; ++m)
        sets.push_back(m);
    return trust_complex(Family(n, std::move(sets)));
}

Complex complete_pure(int n, int k) {
    check_ambient(n);
    if (k < 0 || k > n)
        fail(ErrorKind::domain, "face size out of range for a complete pure complex");
    std::vector<Mask> sets;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m)
        if (bits::size(Mask(m)) <= k)
            sets.push_back(Mask(m));
    return trust_complex(Family(n, std::move(sets)));
}

Complex point() { return simplex(1); }

Complex empty(int n) { return Complex(n); }

}  // namespace named

Complex unit_of(Variant variant) { return variant == Variant::subst ? named::point() : named::trivial(1); }

Complex substitute(const Complex& kc, int k, const Complex& l) {
    return trust_complex(hypergraph_compose(kc.faces(), k, l.faces(), Variant::subst));
}

Family compose_c_raw(const Family& kc, int k, const Family& l) { return hypergraph_compose(kc, k, l, Variant::comp); }

Complex compose_c(const Complex& kc, int k, const Complex& l) {
    return down_closure(compose_c_raw(kc.faces(), k, l.faces()));
}

Complex compose(const Complex& kc, int k, const Complex& l, Variant variant) {
    return variant == Variant::subst ? substitute(kc, k, l) : compose_c(kc, k, l);
}

Family facets_of_composition(const Complex& kc, int k, const Complex& l, Variant variant) {
    if (kc.empty() || l.empty() || kc.is_trivial() || l.is_trivial())
        fail(ErrorKind::precondition, "facet formula needs nonempty nontrivial complexes");
    const int n = kc.ambient(), m = l.ambient();
    if (k < 1 || k > n)
        fail(ErrorKind::domain, "slot out of range");
    check_ambient(n + m - 1);
    const Family outer = facets(kc), inner = facets(l);
    std::vector<Mask> out;
    for (Mask f : outer) {
        const bool in = bits::has(f, k);
        if (variant == Variant::subst && !in) {
            out.push_back(bits::insert_block(f, k, 0, m));
        } else if (variant == Variant::comp && in) {
            out.push_back(bits::insert_block(f, k, bits::full(m), m));
        } else {
            for (Mask g : inner)
                out.push_back(bits::insert_block(f, k, g, m));
        }
    }
    // Under comp a facet avoiding k can be absorbed by a facet through k.
    return extremals(Family(n + m - 1, std::move(out)), ExtremalMode::maximal);
}

Family transversal_compose(const Family& s, int k, const Family& t, TransversalMode mode, Variant variant) {
    if (!is_transversal(s) || !is_transversal(t))
        fail(ErrorKind::domain, "transversal composition needs transversal families");
    if (mode == TransversalMode::hat) {
        Complex c = compose(down_closure(s), k, down_closure(t), variant);
        return facets(c);
    }
    Family raw = hypergraph_compose(closure(s, ClosureMode::up), k, closure(t, ClosureMode::up), variant);
    return extremals(raw, ExtremalMode::minimal);
}

namespace {

void check_vertex(const Complex& kc, int i) {
    if (i < 1 || i > kc.ambient())
        fail(ErrorKind::domain, "vertex out of range");
    check_ambient(kc.ambient() + 1);
}

// Makes room for a new vertex i+1, keeping vertex i in place.
Mask open_after(Mask f, int i) { return (f & bits::full(i)) | ((f >> i) << (i + 1)); }

template <class Recipe>
Complex rebuild(const Complex& kc, int i, Recipe recipe) {
    check_vertex(kc, i);
    std::vector<Mask> out;
    for (Mask f : facets(kc))
        recipe(open_after(f, i), bits::has(f, i), out);
    return down_closure(Family(kc.ambient() + 1, std::move(out)));
}

}  // namespace

Complex dup_vertex(const Complex& kc, int i) {
    return rebuild(kc, i, [i](Mask f, bool in, std::vector<Mask>& out) {
        out.push_back(in ? (f | bits::single(i + 1)) : f);
    });
}

Complex para_vertex(const Complex& kc, int i) {
    return rebuild(kc, i, [i](Mask f, bool in, std::vector<Mask>& out) {
        out.push_back(f);
        if (in)
            out.push_back((f & ~bits::single(i)) | bits::single(i + 1));
    });
}

Complex universal_dup(const Complex& kc, int i) {
    return rebuild(kc, i, [i](Mask f, bool, std::vector<Mask>& out) {
        out.push_back(f | bits::single(i) | bits::single(i + 1));
    });
}

Complex wed_vertex(const Complex& kc, int i) {
    return rebuild(kc, i, [i](Mask f, bool in, std::vector<Mask>& out) {
        if (in) {
            out.push_back(f | bits::single(i + 1));
        } else {
            out.push_back(f | bits::single(i));
            out.push_back(f | bits::single(i + 1));
        }
    });
}

Complex disjoint_union(const Complex& kc, const Complex& l) {
    if (kc.empty() || l.empty())
        fail(ErrorKind::precondition, "disjoint union needs nonempty complexes");
    const int n = kc.ambient(), total = n + l.ambient();
    check_ambient(total);
    std::vector<Mask> out(kc.faces().sets());
    for (Mask s : l)
        out.push_back(s << n);
    return trust_complex(Family(total, std::move(out)));
}

}  // namespace polyop
