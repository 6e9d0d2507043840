#include "polyop/instances.hpp"

#include "polyop/enumerate.hpp"
#include "polyop/error.hpp"
#include "polyop/families.hpp"
#include "polyop/relscpx.hpp"

namespace polyop {

namespace {

std::vector<Subset> all_subsets(int n, bool nonempty) {
    std::vector<Subset> out;
    for (Mask m = nonempty ? 1 : 0; m <= bits::full(n); ++m)
        out.emplace_back(n, m);
    return out;
}

std::string show_family(const Family& f) { return f.to_string(); }
std::string show_complex(const Complex& c) { return c.to_string(); }

Family random_family(int n, std::mt19937_64& rng, bool nonempty) {
    const std::uint64_t total = std::uint64_t(1) << n;
    std::vector<Mask> sets;
    do {
        sets.clear();
        const int count = std::uniform_int_distribution<int>(0, 4)(rng);
        for (int i = 0; i < count; ++i)
            sets.push_back(Mask(std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng)));
    } while (nonempty && sets.empty());
    return Family(n, std::move(sets));
}

Complex random_complex(int n, std::mt19937_64& rng, bool nonempty) {
    return down_closure(random_family(n, rng, nonempty));
}

}  // namespace

OperadInstance<PermElement> perm_instance() {
    OperadInstance<PermElement> op;
    op.name = "perm";
    op.arity = [](const PermElement& x) { return x.arity; };
    op.enumerate = [](int n) {
        std::vector<PermElement> out;
        for (int i = 1; i <= n; ++i)
            out.emplace_back(n, i);
        return out;
    };
    op.unit = PermElement(1, 1);
    op.compose = perm_compose;
    op.act = [](const PermElement& x, const Permutation& s) { return PermElement(x.arity, s(x.value)); };
    op.show = [](const PermElement& x) { return std::to_string(x.value) + "/" + std::to_string(x.arity); };
    return op;
}

namespace {

OperadInstance<Subset> subset_instance(std::string name, int min_arity, bool nonempty) {
    OperadInstance<Subset> op;
    op.name = std::move(name);
    op.min_arity = min_arity;
    op.arity = [](const Subset& s) { return s.ambient(); };
    op.enumerate = [nonempty](int n) { return all_subsets(n, nonempty); };
    op.enumerate_limit = 20;
    op.act = [](const Subset& s, const Permutation& p) { return Subset(s.ambient(), p.apply(s.mask())); };
    op.show = [](const Subset& s) { return s.to_string() + "/" + std::to_string(s.ambient()); };
    if (nonempty)
        op.member = [](const Subset& s) { return !s.empty(); };
    return op;
}

}  // namespace

OperadInstance<Subset> power_perm_instance() {
    auto op = subset_instance("power-perm", 0, false);
    op.unit = Subset::of(1, {1});
    op.compose = power_perm_compose;
    return op;
}

OperadInstance<Subset> comtrias_instance() {
    auto op = subset_instance("comtrias", 1, true);
    op.unit = Subset::of(1, {1});
    op.compose = [](const Subset& a, int k, const Subset& b) { return subset_compose(a, k, b, Variant::subst); };
    return op;
}

OperadInstance<Subset> idemcom_instance(Variant variant) {
    auto op = subset_instance(variant == Variant::subst ? "idemcom" : "idemcom-c", 1, false);
    op.unit = variant == Variant::subst ? Subset::of(1, {1}) : Subset(1, 0);
    op.compose = [variant](const Subset& a, int k, const Subset& b) { return subset_compose(a, k, b, variant); };
    return op;
}

OperadInstance<Family> hypergraph_instance(Variant variant, bool reduced) {
    OperadInstance<Family> op;
    op.name = std::string("hypergraph-") + (variant == Variant::subst ? "subst" : "comp") + (reduced ? "-reduced" : "");
    op.arity = [](const Family& f) { return f.ambient(); };
    op.enumerate = [reduced](int n) {
        std::vector<Family> out;
        const std::uint64_t subsets = std::uint64_t(1) << n;
        for (std::uint64_t code = reduced ? 1 : 0; code < (std::uint64_t(1) << subsets); ++code) {
            std::vector<Mask> sets;
            for (std::uint64_t s = 0; s < subsets; ++s)
                if ((code >> s) & 1)
                    sets.push_back(Mask(s));
            out.emplace_back(n, std::move(sets));
        }
        return out;
    };
    op.enumerate_limit = 2;
    op.sample = [reduced](int n, std::mt19937_64& rng) { return random_family(n, rng, reduced); };
    op.unit = variant == Variant::subst ? Family(1, {1}) : Family(1, {0});
    op.compose = [variant](const Family& a, int k, const Family& b) { return hypergraph_compose(a, k, b, variant); };
    op.act = [](const Family& f, const Permutation& p) { return relabel(f, p); };
    if (reduced)
        op.member = [](const Family& f) { return !f.empty(); };
    op.show = show_family;
    return op;
}

OperadInstance<Complex> scpx_instance(Variant variant, bool nonempty) {
    OperadInstance<Complex> op;
    op.name = std::string("scpx-") + (variant == Variant::subst ? "subst" : "comp") + (nonempty ? "-nonempty" : "");
    op.arity = [](const Complex& c) { return c.ambient(); };
    op.enumerate = [nonempty](int n) {
        std::vector<Complex> out;
        for (const auto& c : enumerate_complexes(n))
            if (!nonempty || !c.empty())
                out.push_back(c);
        return out;
    };
    op.enumerate_limit = kEnumerationLimit;
    op.sample = [nonempty](int n, std::mt19937_64& rng) { return random_complex(n, rng, nonempty); };
    op.unit = unit_of(variant);
    op.compose = [variant](const Complex& a, int k, const Complex& b) { return compose(a, k, b, variant); };
    op.act = [](const Complex& c, const Permutation& p) { return relabel(c, p); };
    op.member = [nonempty](const Complex& c) { return is_downward_closed(c.faces()) && (!nonempty || !c.empty()); };
    op.show = show_complex;
    return op;
}

OperadInstance<Family> transversal_instance(TransversalMode mode, Variant variant) {
    OperadInstance<Family> op;
    op.name = std::string("transversal-") + (mode == TransversalMode::hat ? "hat-" : "check-") +
              (variant == Variant::subst ? "subst" : "comp");
    op.arity = [](const Family& f) { return f.ambient(); };
    op.enumerate = [](int n) {
        std::vector<Family> out;
        for (const auto& c : enumerate_complexes(n))
            out.push_back(facets(c));
        return out;
    };
    op.enumerate_limit = kEnumerationLimit;
    op.sample = [](int n, std::mt19937_64& rng) { return facets(random_complex(n, rng, false)); };
    op.unit = variant == Variant::subst ? Family(1, {1}) : Family(1, {0});
    op.compose = [mode, variant](const Family& a, int k, const Family& b) {
        return transversal_compose(a, k, b, mode, variant);
    };
    op.act = [](const Family& f, const Permutation& p) { return relabel(f, p); };
    op.member = is_transversal;
    op.show = show_family;
    return op;
}

OperadInstance<RelativePair> relscpx_instance() {
    OperadInstance<RelativePair> op;
    op.name = "relscpx";
    op.arity = [](const RelativePair& p) { return p.ambient(); };
    op.enumerate = enumerate_pairs;
    op.enumerate_limit = 3;
    op.sample = [](int n, std::mt19937_64& rng) {
        Complex total = random_complex(n, rng, false);
        std::vector<Mask> sub;
        for (Mask s : total)
            if (std::uniform_int_distribution<int>(0, 1)(rng))
                sub.push_back(s);
        return RelativePair(total, down_closure(Family(n, std::move(sub))));
    };
    op.unit = unit_pair();
    op.compose = join_compose;
    op.act = [](const RelativePair& p, const Permutation& s) {
        return RelativePair(relabel(p.total, s), relabel(p.sub, s));
    };
    op.show = [](const RelativePair& p) { return "(" + p.total.to_string() + " | " + p.sub.to_string() + ")"; };
    return op;
}

OperadInstance<Complex> named_suboperad_instance(NamedFamily family, Variant variant) {
    static const char* names[] = {"trivial", "discrete", "simplex", "boundary"};
    auto build = [family](int n) {
        switch (family) {
        case NamedFamily::trivial:
            return named::trivial(n);
        case NamedFamily::discrete:
            return named::discrete(n);
        case NamedFamily::simplex:
            return named::simplex(n);
        case NamedFamily::boundary:
            return named::boundary_simplex(n);
        }
        fail(ErrorKind::internal, "unknown named family");
    };
    OperadInstance<Complex> op;
    op.name = std::string(names[static_cast<int>(family)]) + (variant == Variant::subst ? "-subst" : "-comp");
    op.arity = [](const Complex& c) { return c.ambient(); };
    op.enumerate = [build](int n) { return std::vector<Complex>{build(n)}; };
    op.enumerate_limit = 12;
    const Complex one = build(1);
    if (one == unit_of(variant))
        op.unit = one;
    op.compose = [variant](const Complex& a, int k, const Complex& b) { return compose(a, k, b, variant); };
    op.act = [](const Complex& c, const Permutation& p) { return relabel(c, p); };
    op.member = [build](const Complex& c) { return c == build(c.ambient()); };
    op.show = show_complex;
    return op;
}

OperadInstance<Complex> broken_subst_instance() {
    auto op = scpx_instance(Variant::subst, false);
    op.name = "broken-subst";
    op.compose = [](const Complex& a, int k, const Complex& b) {
        const int m = b.ambient();
        std::vector<Mask> out;
        if (!b.empty())
            for (Mask i : a)
                if (!bits::has(i, k))
                    out.push_back(bits::insert_block(i, k, 0, m));
        return trust_complex(Family(a.ambient() + m - 1, std::move(out)));
    };
    return op;
}

OperadInstance<Complex> mirrored_subst_instance() {
    auto op = scpx_instance(Variant::subst, false);
    op.name = "mirrored-subst";
    op.compose = [](const Complex& a, int k, const Complex& b) {
        const int m = b.ambient();
        std::vector<Mask> out;
        if (!a.empty() && !b.empty())
            for (Mask i : a) {
                if (!bits::has(i, k)) {
                    out.push_back(bits::insert_block(i, k, 0, m));
                    continue;
                }
                for (Mask j : b) {
                    Mask r = 0;
                    for (int x : bits::elements(j))
                        r |= bits::single(m + 1 - x);
                    out.push_back(bits::insert_block(i, k, r, m));
                }
            }
        return trust_complex(Family(a.ambient() + m - 1, std::move(out)));
    };
    return op;
}

const std::vector<RegisteredOperad>& registered_operads() {
    static const std::vector<RegisteredOperad> list = {
        {"perm", "permutative operad", 4},
        {"power-perm", "full power set of Perm, empty set absorbing", 3},
        {"comtrias", "nonempty subsets under substitution", 3},
        {"idemcom", "all subsets under substitution", 3},
        {"idemcom-c", "all subsets under composition", 3},
        {"hypergraph-subst", "hypergraphs under substitution", 2},
        {"hypergraph-subst-reduced", "nonempty hypergraphs under substitution", 2},
        {"hypergraph-comp", "hypergraphs under composition", 2},
        {"hypergraph-comp-reduced", "nonempty hypergraphs under composition", 2},
        {"scpx-subst", "simplicial complexes under substitution", 3},
        {"scpx-subst-nonempty", "nonempty simplicial complexes under substitution", 3},
        {"scpx-comp", "simplicial complexes under composition", 3},
        {"scpx-comp-nonempty", "nonempty simplicial complexes under composition", 3},
        {"transversal-hat-subst", "facets transport of substitution", 3},
        {"transversal-check-subst", "minimal-sets transport of substitution", 3},
        {"transversal-hat-comp", "facets transport of composition", 3},
        {"transversal-check-comp", "minimal-sets transport of composition", 3},
        {"relscpx", "relative complexes under the join composition", 2},
        {"trivial-subst", "{empty set} in every arity, substitution", 4},
        {"discrete-subst", "discrete complexes, substitution", 4},
        {"simplex-subst", "full simplices, substitution", 4},
        {"trivial-comp", "{empty set} in every arity, composition", 4},
        {"simplex-comp", "full simplices, composition", 4},
        {"boundary-comp", "simplex boundaries, composition", 4},
        {"broken-subst", "substitution with the slot faces dropped (fails on purpose)", 2},
        {"mirrored-subst", "substitution inserting the inner complex reversed (fails on purpose)", 2},
    };
    return list;
}

LawReport run_registered(const std::string& name, int bound, const LawOptions& options) {
    if (name == "perm")
        return check_laws(perm_instance(), bound, options);
    if (name == "power-perm")
        return check_laws(power_perm_instance(), bound, options);
    if (name == "comtrias")
        return check_laws(comtrias_instance(), bound, options);
    if (name == "idemcom")
        return check_laws(idemcom_instance(Variant::subst), bound, options);
    if (name == "idemcom-c")
        return check_laws(idemcom_instance(Variant::comp), bound, options);
    for (Variant v : {Variant::subst, Variant::comp}) {
        const std::string tag = v == Variant::subst ? "subst" : "comp";
        if (name == "hypergraph-" + tag)
            return check_laws(hypergraph_instance(v, false), bound, options);
        if (name == "hypergraph-" + tag + "-reduced")
            return check_laws(hypergraph_instance(v, true), bound, options);
        if (name == "scpx-" + tag)
            return check_laws(scpx_instance(v, false), bound, options);
        if (name == "scpx-" + tag + "-nonempty")
            return check_laws(scpx_instance(v, true), bound, options);
        if (name == "transversal-hat-" + tag)
            return check_laws(transversal_instance(TransversalMode::hat, v), bound, options);
        if (name == "transversal-check-" + tag)
            return check_laws(transversal_instance(TransversalMode::check, v), bound, options);
    }
    if (name == "relscpx")
        return check_laws(relscpx_instance(), bound, options);
    if (name == "trivial-subst")
        return check_laws(named_suboperad_instance(NamedFamily::trivial, Variant::subst), bound, options);
    if (name == "discrete-subst")
        return check_laws(named_suboperad_instance(NamedFamily::discrete, Variant::subst), bound, options);
    if (name == "simplex-subst")
        return check_laws(named_suboperad_instance(NamedFamily::simplex, Variant::subst), bound, options);
    if (name == "trivial-comp")
        return check_laws(named_suboperad_instance(NamedFamily::trivial, Variant::comp), bound, options);
    if (name == "simplex-comp")
        return check_laws(named_suboperad_instance(NamedFamily::simplex, Variant::comp), bound, options);
    if (name == "boundary-comp")
        return check_laws(named_suboperad_instance(NamedFamily::boundary, Variant::comp), bound, options);
    if (name == "broken-subst")
        return check_laws(broken_subst_instance(), bound, options);
    if (name == "mirrored-subst")
        return check_laws(mirrored_subst_instance(), bound, options);
    fail(ErrorKind::domain, "unknown operad '" + name + "'");
}

}  // namespace polyop
