#pragma once

#include <optional>

#include "polyop/family.hpp"
#include "polyop/permutation.hpp"

namespace polyop {

enum class ClosureMode { down, reduced_down, up };
enum class ComplementMode { faces, pointwise };
enum class ExtremalMode { maximal, minimal };
enum class NonFaceMode { mnf, mnu };

Family closure(const Family& f, ClosureMode mode);
Complex down_closure(const Family& f);

Family complement(const Family& f, ComplementMode mode);
// Level 1 is the family-level complement, level 2 the pointwise one.
Family complement_derived(const Family& f, int level);
Subset complement(const Subset& s);

Family extremals(const Family& f, ExtremalMode mode);
Family facets(const Complex& k);

Family non_faces(const Family& f, NonFaceMode mode);

struct Classification {
    bool simplicial = false;
    bool upward = false;
    bool transversal = false;
    bool reduced = false;
    friend bool operator==(const Classification&, const Classification&) = default;
};
Classification classify(const Family& f);
bool is_transversal(const Family& f);

// nullopt marks the void complex; {empty set} has dimension -1.
std::optional<int> dimension(const Complex& k);
bool is_pure(const Complex& k);

Family relabel(const Family& f, const Permutation& sigma);
Complex relabel(const Complex& k, const Permutation& sigma);

Family join(const Family& a, const Family& b);
Complex join(const Complex& a, const Complex& b);

// Faces I^{<k} + (J+k-1) + (I^{>k}+m-1); requires {k} not a face of a.
Complex slot_join(const Complex& a, int k, const Complex& b);

// Shift every set up by `offset` into ambient n + offset + extra.
Family shift(const Family& f, int offset, int new_ambient);

// Inserts a ghost vertex at position p (1 <= p <= n+1).
Complex insert_ghost(const Complex& k, int p);

Complex complex_union(const Complex& a, const Complex& b);
Complex complex_intersection(const Complex& a, const Complex& b);
bool is_subcomplex(const Complex& sub, const Complex& k);

}  // namespace polyop
