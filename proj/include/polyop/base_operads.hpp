#pragma once

#include <string>
#include <variant>
#include <vector>

#include "polyop/family.hpp"

namespace polyop {

enum class Variant { subst, comp };

struct PermElement {
    int arity = 1;
    int value = 1;
    PermElement() = default;
    // Throws a domain error unless 1 <= value <= arity.
    PermElement(int arity, int value);
    friend bool operator==(const PermElement&, const PermElement&) = default;
};

PermElement perm_compose(const PermElement& x, int k, const PermElement& y);

// m = 0 is allowed and deletes the slot.
Subset subset_compose(const Subset& i, int k, const Subset& j, Variant variant);

// Composition in the full power set of Perm: the empty set absorbs.
Subset power_perm_compose(const Subset& i, int k, const Subset& j);

// Elementwise composition of hypergraphs; an empty family absorbs.
Family hypergraph_compose(const Family& a, int k, const Family& b, Variant variant);

// Power set applied twice to Perm: elementwise over power_perm_compose.
// Agrees with the hypergraph substitution on families without the empty set.
Family double_power_perm_compose(const Family& a, int k, const Family& b);

struct PowerElement {
    std::variant<Subset, Family> payload;
    int level() const { return payload.index() == 0 ? 1 : 2; }
    int arity() const;
    friend bool operator==(const PowerElement&, const PowerElement&) = default;
};

// Throws a domain error when the levels differ.
PowerElement power_compose(const PowerElement& a, int k, const PowerElement& b, Variant variant);

Subset monad_unit(const PermElement& x);
Family monad_unit(const Subset& x);
// Union of the members. An operad morphism from double_power_perm_compose to power_perm_compose.
Subset monad_mult(const Family& a);

struct RelationCheck {
    std::string label;
    std::string lhs, rhs;
    Subset lhs_value, rhs_value;
    bool holds = false;
};

struct PresentationReport {
    std::vector<RelationCheck> relations;
    bool swap_action_holds = false;
    int passed() const;
    bool all_hold() const { return passed() == static_cast<int>(relations.size()) && swap_action_holds; }
};

// The eleven relations among the binary generators {1}, {2}, {1,2} of arity 2.
PresentationReport comtrias_relations_check();
// The relations involving the nullary empty set in the full power set of Perm.
PresentationReport power_perm_empty_relations_check();

}  // namespace polyop
