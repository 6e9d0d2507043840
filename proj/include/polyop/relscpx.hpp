#pragma once

#include <vector>

#include "polyop/family.hpp"

namespace polyop {

using PairSequence = std::vector<RelativePair>;

RelativePair unit_pair();  // (point, {empty set})

// Union over faces I of kc of the join of M_i (i in I) and N_i (i not in I).
Complex simplicial_join_product(const Complex& kc, const PairSequence& pairs);

enum class ActionForm { faces, join_product, link_split };
// kc acted on at slot k by (M, N): faces through k take M, the others take N.
Complex right_action(const Complex& kc, int k, const RelativePair& pair, ActionForm form = ActionForm::faces);

enum class LocalOp { link, star, deletion, wedge };
// Link, star and deletion stay on [n] with k a ghost vertex; wedge lands on [n+1].
Complex local_op(const Complex& kc, int k, LocalOp op);
// Deletion of k, renumbered onto [n-1].
Complex delete_compact(const Complex& kc, int k);
// The pair whose action realizes each local operation.
RelativePair local_op_pair(LocalOp op);

RelativePair join_compose(const RelativePair& p, int k, const RelativePair& q);

struct PushoutSquare {
    Complex link_side;    // Lk_k(K) joined at k with M
    Complex delete_side;  // (K minus k) joined at k with N
    Complex meet;
    Complex whole;
};
PushoutSquare pushout_witness(const Complex& kc, int k, const RelativePair& pair);

RelativePair algebra_total_map(const RelativePair& p, const PairSequence& pairs);

// The k-block (positions k..k+m-1) and the outer remainder of a sequence.
PairSequence block_of(const PairSequence& pairs, int k, int m);
PairSequence replace_block(const PairSequence& pairs, int k, int m, const RelativePair& replacement);

}  // namespace polyop
