#pragma once

#include "polyop/base_operads.hpp"
#include "polyop/family.hpp"

namespace polyop {

namespace named {
Complex trivial(int n);           // {empty set} on [n]
Complex discrete(int n);          // empty set and all singletons
Complex simplex(int n);           // all subsets of [n]
Complex boundary_simplex(int n);  // all proper subsets of [n]
Complex complete_pure(int n, int k);  // closure of all k-subsets of [n]
Complex point();                  // simplex(1)
Complex empty(int n);
}  // namespace named

// Unit of each variant: the point for subst, {empty set} on [1] for comp.
Complex unit_of(Variant variant);

// Substitution of l into slot k of kc. The void complex absorbs on either side.
Complex substitute(const Complex& kc, int k, const Complex& l);
// Composition of l into slot k of kc, closed downward.
Complex compose_c(const Complex& kc, int k, const Complex& l);
// Elementwise composition without closing; for upward complexes and families.
Family compose_c_raw(const Family& kc, int k, const Family& l);
Complex compose(const Complex& kc, int k, const Complex& l, Variant variant);

// Facets of the composite computed from the facets of the inputs.
// Requires both inputs nonempty and nontrivial.
Family facets_of_composition(const Complex& kc, int k, const Complex& l, Variant variant);

enum class TransversalMode { hat, check };
Family transversal_compose(const Family& s, int k, const Family& t, TransversalMode mode, Variant variant);

// Vertex i becomes i and i+1; facets through i gain i+1.
Complex dup_vertex(const Complex& kc, int i);
// Facets through i are copied, once with i and once with i+1.
Complex para_vertex(const Complex& kc, int i);
// Every facet gains both i and i+1.
Complex universal_dup(const Complex& kc, int i);
// Facets through i gain i+1; every other facet F is replaced by F+i and F+(i+1).
Complex wed_vertex(const Complex& kc, int i);

// kc together with l shifted past kc's vertices. Both must be nonempty.
Complex disjoint_union(const Complex& kc, const Complex& l);

}  // namespace polyop
