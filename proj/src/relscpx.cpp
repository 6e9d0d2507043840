#include "polyop/relscpx.hpp"

#include "polyop/error.hpp"
#include "polyop/families.hpp"
#include "polyop/scpx.hpp"

namespace polyop {

RelativePair unit_pair() { return RelativePair(named::point(), named::trivial(1)); }

Complex simplicial_join_product(const Complex& kc, const PairSequence& pairs) {
    const int n = kc.ambient();
    if (static_cast<int>(pairs.size()) != n)
        fail(ErrorKind::domain, "pair sequence length does not match the ambient");
    std::vector<int> offset(n + 1, 0);
    for (int i = 0; i < n; ++i)
        offset[i + 1] = offset[i] + pairs[i].ambient();
    check_ambient(offset[n]);

    std::vector<Family> top_m, top_n;
    for (const auto& p : pairs) {
        top_m.push_back(facets(p.total));
        top_n.push_back(facets(p.sub));
    }

    std::vector<Mask> out;
    for (Mask f : facets(kc)) {
        std::vector<Mask> acc{0};
        for (int i = 1; i <= n && !acc.empty(); ++i) {
            const Family& factor = bits::has(f, i) ? top_m[i - 1] : top_n[i - 1];
            std::vector<Mask> next;
            next.reserve(acc.size() * factor.size());
            for (Mask a : acc)
                for (Mask b : factor)
                    next.push_back(a | (b << offset[i - 1]));
            acc = std::move(next);
        }
        out.insert(out.end(), acc.begin(), acc.end());
    }
    return down_closure(Family(offset[n], std::move(out)));
}

namespace {

void check_slot(const Complex& kc, int k) {
    if (k < 1 || k > kc.ambient())
        fail(ErrorKind::domain, "slot out of range");
}

Complex action_by_faces(const Complex& kc, int k, const RelativePair& pair) {
    const int m = pair.ambient();
    check_ambient(kc.ambient() + m - 1);
    std::vector<Mask> out;
    for (Mask i : kc) {
        const Complex& side = bits::has(i, k) ? pair.total : pair.sub;
        for (Mask j : side)
            out.push_back(bits::insert_block(i, k, j, m));
    }
    return trust_complex(Family(kc.ambient() + m - 1, std::move(out)));
}

}  // namespace

Complex right_action(const Complex& kc, int k, const RelativePair& pair, ActionForm form) {
    check_slot(kc, k);
    switch (form) {
    case ActionForm::faces:
        return action_by_faces(kc, k, pair);
    case ActionForm::join_product: {
        PairSequence seq(kc.ambient(), unit_pair());
        seq[k - 1] = pair;
        return simplicial_join_product(kc, seq);
    }
    case ActionForm::link_split:
        return complex_union(slot_join(local_op(kc, k, LocalOp::link), k, pair.total),
                             slot_join(local_op(kc, k, LocalOp::deletion), k, pair.sub));
    }
    fail(ErrorKind::internal, "unknown action form");
}

Complex local_op(const Complex& kc, int k, LocalOp op) {
    check_slot(kc, k);
    const Mask v = bits::single(k);
    std::vector<Mask> out;
    switch (op) {
    case LocalOp::link:
        for (Mask s : kc)
            if (s & v)
                out.push_back(s & ~v);
        break;
    case LocalOp::star:
        for (Mask s : kc)
            if (kc.contains(s | v))
                out.push_back(s);
        break;
    case LocalOp::deletion:
        for (Mask s : kc)
            if (!(s & v))
                out.push_back(s);
        break;
    case LocalOp::wedge:
        return wed_vertex(kc, k);
    }
    return trust_complex(Family(kc.ambient(), std::move(out)));
}

Complex delete_compact(const Complex& kc, int k) {
    check_slot(kc, k);
    std::vector<Mask> out;
    for (Mask s : kc)
        if (!bits::has(s, k))
            out.push_back((s & bits::full(k - 1)) | ((s >> k) << (k - 1)));
    return trust_complex(Family(kc.ambient() - 1, std::move(out)));
}

RelativePair local_op_pair(LocalOp op) {
    switch (op) {
    case LocalOp::link:
        return RelativePair(named::trivial(1), named::empty(1));
    case LocalOp::star:
        return RelativePair(named::point(), named::empty(1));
    case LocalOp::deletion:
        return RelativePair(named::trivial(1), named::trivial(1));
    case LocalOp::wedge:
        return RelativePair(named::simplex(2), named::boundary_simplex(2));
    }
    fail(ErrorKind::internal, "unknown local operation");
}

RelativePair join_compose(const RelativePair& p, int k, const RelativePair& q) {
    return RelativePair(right_action(p.total, k, q), right_action(p.sub, k, q));
}

PushoutSquare pushout_witness(const Complex& kc, int k, const RelativePair& pair) {
    check_slot(kc, k);
    const Complex link = local_op(kc, k, LocalOp::link);
    PushoutSquare sq;
    sq.link_side = slot_join(link, k, pair.total);
    sq.delete_side = slot_join(local_op(kc, k, LocalOp::deletion), k, pair.sub);
    sq.meet = complex_intersection(sq.link_side, sq.delete_side);
    sq.whole = complex_union(sq.link_side, sq.delete_side);
    if (sq.whole != right_action(kc, k, pair))
        fail(ErrorKind::internal, "pushout union differs from the action");
    if (sq.meet != slot_join(link, k, pair.sub))
        fail(ErrorKind::internal, "pushout intersection differs from the link joined with the sub complex");
    return sq;
}

RelativePair algebra_total_map(const RelativePair& p, const PairSequence& pairs) {
    return RelativePair(simplicial_join_product(p.total, pairs), simplicial_join_product(p.sub, pairs));
}

PairSequence block_of(const PairSequence& pairs, int k, int m) {
    if (k < 1 || m < 0 || k + m - 1 > static_cast<int>(pairs.size()))
        fail(ErrorKind::domain, "block out of range");
    return PairSequence(pairs.begin() + (k - 1), pairs.begin() + (k - 1 + m));
}

PairSequence replace_block(const PairSequence& pairs, int k, int m, const RelativePair& replacement) {
    if (k < 1 || m < 0 || k + m - 1 > static_cast<int>(pairs.size()))
        fail(ErrorKind::domain, "block out of range");
    PairSequence out(pairs.begin(), pairs.begin() + (k - 1));
    out.push_back(replacement);
    out.insert(out.end(), pairs.begin() + (k - 1 + m), pairs.end());
    return out;
}

}  // namespace polyop
