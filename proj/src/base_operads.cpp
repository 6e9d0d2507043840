#include "polyop/base_operads.hpp"

#include <algorithm>

#include "polyop/error.hpp"
#include "polyop/families.hpp"

namespace polyop {

namespace {

void check_slot(int k, int n) {
    if (k < 1 || k > n)
        fail(ErrorKind::domain, "slot " + std::to_string(k) + " outside [" + std::to_string(n) + "]");
}

Mask compose_mask(Mask i, int k, Mask j, int m, Variant variant) {
    const bool in = bits::has(i, k);
    if (variant == Variant::subst)
        return bits::insert_block(i, k, in ? j : 0u, m);
    return bits::insert_block(i, k, in ? bits::full(m) : j, m);
}

}  // namespace

PermElement::PermElement(int a, int v) : arity(a), value(v) {
    if (v < 1 || v > a)
        fail(ErrorKind::domain, "Perm element " + std::to_string(v) + " outside [" + std::to_string(a) + "]");
}

PermElement perm_compose(const PermElement& x, int k, const PermElement& y) {
    check_slot(k, x.arity);
    const int m = y.arity;
    int v = x.value;
    if (k < x.value)
        v = x.value + m - 1;
    else if (k == x.value)
        v = x.value + y.value - 1;
    return PermElement(x.arity + m - 1, v);
}

Subset subset_compose(const Subset& i, int k, const Subset& j, Variant variant) {
    check_slot(k, i.ambient());
    const int n = i.ambient() + j.ambient() - 1;
    check_ambient(n);
    return Subset(n, compose_mask(i.mask(), k, j.mask(), j.ambient(), variant));
}

Subset power_perm_compose(const Subset& i, int k, const Subset& j) {
    check_slot(k, i.ambient());
    const int n = i.ambient() + j.ambient() - 1;
    check_ambient(n);
    if (i.empty() || j.empty())
        return Subset(n, 0);
    return Subset(n, compose_mask(i.mask(), k, j.mask(), j.ambient(), Variant::subst));
}

Family hypergraph_compose(const Family& a, int k, const Family& b, Variant variant) {
    check_slot(k, a.ambient());
    const int m = b.ambient();
    const int n = a.ambient() + m - 1;
    check_ambient(n);
    std::vector<Mask> out;
    if (a.empty() || b.empty())
        return Family(n);
    out.reserve(a.size() * b.size());
    for (Mask i : a) {
        const bool in = bits::has(i, k);
        // These faces do not depend on the inner set.
        if ((variant == Variant::subst && !in) || (variant == Variant::comp && in)) {
            out.push_back(compose_mask(i, k, 0, m, variant));
            continue;
        }
        for (Mask j : b)
            out.push_back(bits::insert_block(i, k, j, m));
    }
    return Family(n, std::move(out));
}

Family double_power_perm_compose(const Family& a, int k, const Family& b) {
    check_slot(k, a.ambient());
    const int m = b.ambient();
    const int n = a.ambient() + m - 1;
    check_ambient(n);
    std::vector<Mask> out;
    for (Mask i : a)
        for (Mask j : b)
            out.push_back(i && j ? compose_mask(i, k, j, m, Variant::subst) : 0);
    return Family(n, std::move(out));
}

int PowerElement::arity() const {
    return payload.index() == 0 ? std::get<Subset>(payload).ambient() : std::get<Family>(payload).ambient();
}

PowerElement power_compose(const PowerElement& a, int k, const PowerElement& b, Variant variant) {
    if (a.level() != b.level())
        fail(ErrorKind::domain, "power levels differ");
    if (a.level() == 1)
        return {subset_compose(std::get<Subset>(a.payload), k, std::get<Subset>(b.payload), variant)};
    return {hypergraph_compose(std::get<Family>(a.payload), k, std::get<Family>(b.payload), variant)};
}

Subset monad_unit(const PermElement& x) { return Subset(x.arity, bits::single(x.value)); }

Family monad_unit(const Subset& x) { return Family(x.ambient(), {x.mask()}); }

Subset monad_mult(const Family& a) {
    Mask u = 0;
    for (Mask s : a)
        u |= s;
    return Subset(a.ambient(), u);
}

int PresentationReport::passed() const {
    return static_cast<int>(std::count_if(relations.begin(), relations.end(), [](const auto& r) { return r.holds; }));
}

namespace {

struct Term {
    Subset outer;
    int slot;
    Subset inner;
};

std::string show(const Term& t) {
    return t.outer.to_string() + " o" + std::to_string(t.slot) + " " + t.inner.to_string();
}

}  // namespace

PresentationReport comtrias_relations_check() {
    const Subset a = Subset::of(2, {1}), b = Subset::of(2, {2}), ab = Subset::of(2, {1, 2});
    auto eval = [](const Term& t) { return subset_compose(t.outer, t.slot, t.inner, Variant::subst); };
    auto t = [](Subset x, int k, Subset y) { return Term{x, k, y}; };

    // Each row lists terms that must all agree; consecutive pairs are the relations.
    struct Row {
        std::string label;
        std::vector<Term> terms;
    };
    const std::vector<Row> rows = {
        {"(■□□)", {t(a, 1, a), t(a, 2, a), t(a, 2, b), t(a, 2, ab)}},
        {"(□□■)", {t(b, 2, b), t(b, 1, a), t(b, 1, b), t(b, 1, ab)}},
        {"(□■□)", {t(a, 1, b), t(b, 2, a)}},
        {"(■□■)", {t(ab, 1, a), t(ab, 2, b)}},
        {"(□■■)", {t(ab, 1, b), t(b, 2, ab)}},
        {"(■■□)", {t(a, 1, ab), t(ab, 2, a)}},
        {"(■■■)", {t(ab, 1, ab), t(ab, 2, ab)}},
    };

    PresentationReport report;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i + 1 < row.terms.size(); ++i) {
            RelationCheck rc;
            rc.label = row.label + (row.terms.size() > 2 ? " #" + std::to_string(i + 1) : "");
            rc.lhs = show(row.terms[i]);
            rc.rhs = show(row.terms[i + 1]);
            rc.lhs_value = eval(row.terms[i]);
            rc.rhs_value = eval(row.terms[i + 1]);
            rc.holds = rc.lhs_value == rc.rhs_value;
            report.relations.push_back(rc);
        }
    }

    const Permutation swap = Permutation::transposition(2, 1, 2);
    auto act = [&](const Subset& s) { return Subset(2, swap.apply(s.mask())); };
    report.swap_action_holds = act(a) == b && act(b) == a && act(ab) == ab;
    return report;
}

PresentationReport power_perm_empty_relations_check() {
    const Subset empty0(0, 0);
    const std::vector<Subset> gens = {Subset::of(2, {1}), Subset::of(2, {2}), Subset::of(2, {1, 2})};
    PresentationReport report;
    auto add = [&](std::string label, std::string lhs, Subset l, std::string rhs, Subset r) {
        report.relations.push_back({std::move(label), std::move(lhs), std::move(rhs), l, r, l == r});
    };
    auto cut = [&](const Subset& g, int k) { return power_perm_compose(g, k, empty0); };
    for (const auto& i : gens)
        for (const auto& i2 : gens)
            add("I o1 e = I' o2 e", i.to_string() + " o1 e", cut(i, 1), i2.to_string() + " o2 e", cut(i2, 2));
    for (const auto& i : gens) {
        Subset c = cut(i, 1);
        add("(I o1 e) o1 (I o1 e) = I o1 e", "(" + i.to_string() + " o1 e)^2", power_perm_compose(c, 1, c),
            i.to_string() + " o1 e", c);
    }
    for (const auto& i : gens) {
        Subset c = cut(i, 1);
        for (const auto& j : gens)
            for (const auto& j1 : gens)
                for (const auto& j2 : gens) {
                    Subset left = power_perm_compose(c, 1, j);
                    Subset mid = power_perm_compose(j1, 1, c);
                    Subset right = power_perm_compose(j2, 2, c);
                    add("(I o1 e) o1 J = J' o1 (I o1 e)", "", left, "", mid);
                    add("J' o1 (I o1 e) = J'' o2 (I o1 e)", "", mid, "", right);
                }
    }
    report.swap_action_holds = true;
    return report;
}

}  // namespace polyop
