#include "polyop/pl.hpp"

#include <map>
#include <numeric>

#include "polyop/error.hpp"
#include "polyop/families.hpp"
#include "polyop/relscpx.hpp"
#include "polyop/scpx.hpp"

namespace polyop {

Complex combinatorial_boundary(const Complex& kc) {
    auto d = dimension(kc);
    if (!d || *d < 0)
        fail(ErrorKind::domain, "boundary needs a complex of dimension at least 0");
    const Family top = facets(kc);
    std::map<Mask, int> ridges;
    for (Mask f : top) {
        if (bits::size(f) != *d + 1)
            fail(ErrorKind::domain, "boundary needs a pure complex");
        for (Mask rest = f; rest; rest &= rest - 1)
            ++ridges[f & ~(rest & (~rest + 1))];
    }
    std::vector<Mask> free_ridges;
    for (auto [r, count] : ridges) {
        if (count > 2)
            fail(ErrorKind::domain, "a codimension-one face lies in more than two facets");
        if (count == 1)
            free_ridges.push_back(r);
    }
    return down_closure(Family(kc.ambient(), std::move(free_ridges)));
}

int euler_characteristic(const Complex& kc) {
    if (kc.empty())
        fail(ErrorKind::domain, "Euler characteristic of the void complex");
    int chi = 0;
    for (Mask s : kc)
        if (s)
            chi += (bits::size(s) % 2 == 1) ? 1 : -1;
    return chi;
}

namespace {

bool connected(const Family& top, Mask vertices) {
    std::vector<int> parent(33);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Mask f : top) {
        auto vs = bits::elements(f);
        for (std::size_t i = 1; i < vs.size(); ++i)
            parent[find(vs[i])] = find(vs[0]);
    }
    auto vs = bits::elements(vertices);
    for (int v : vs)
        if (find(v) != find(vs.front()))
            return false;
    return true;
}

constexpr Verdict other_verdict(int d) { return {Shape::other, d}; }

}  // namespace

Verdict recognize_low_dim(const Complex& kc) {
    auto d = dimension(kc);
    if (!d)
        return other_verdict(0);
    if (*d > 2)
        fail(ErrorKind::unsupported, "exact recognition is only available up to dimension 2");
    if (*d == -1)
        return {Shape::sphere, -1};
    const Family top = facets(kc);
    for (Mask f : top)
        if (bits::size(f) != *d + 1)
            return other_verdict(*d);
    const Mask vertices = kc.vertices();
    const int nv = bits::size(vertices);
    if (*d == 0)
        return nv == 2 ? Verdict{Shape::sphere, 0} : nv == 1 ? Verdict{Shape::ball, 0} : other_verdict(0);
    if (!connected(top, vertices))
        return other_verdict(*d);
    const int chi = euler_characteristic(kc);

    if (*d == 1) {
        int ends = 0, middles = 0;
        for (int v : bits::elements(vertices)) {
            int degree = 0;
            for (Mask f : top)
                degree += bits::has(f, v);
            ends += degree == 1;
            middles += degree == 2;
        }
        if (middles == nv && chi == 0)
            return {Shape::sphere, 1};
        if (ends == 2 && middles == nv - 2 && chi == 1)
            return {Shape::ball, 1};
        return other_verdict(1);
    }

    std::map<Mask, int> edges;
    for (Mask f : top)
        for (Mask rest = f; rest; rest &= rest - 1)
            ++edges[f & ~(rest & (~rest + 1))];
    std::vector<Mask> free_edges;
    for (auto [e, count] : edges) {
        if (count > 2)
            return other_verdict(2);
        if (count == 1)
            free_edges.push_back(e);
    }
    for (int v : bits::elements(vertices)) {
        Verdict lv = recognize_low_dim(local_op(kc, v, LocalOp::link));
        if (lv.dim != 1 || lv.shape == Shape::other)
            return other_verdict(2);
    }
    if (free_edges.empty())
        return chi == 2 ? Verdict{Shape::sphere, 2} : other_verdict(2);
    Verdict rim = recognize_low_dim(down_closure(Family(kc.ambient(), std::move(free_edges))));
    if (rim == Verdict{Shape::sphere, 1} && chi == 1)
        return {Shape::ball, 2};
    return other_verdict(2);
}

std::string to_string(const Verdict& v) {
    switch (v.shape) {
    case Shape::sphere:
        return "sphere(" + std::to_string(v.dim) + ")";
    case Shape::ball:
        return "ball(" + std::to_string(v.dim) + ")";
    case Shape::other:
        break;
    }
    return "other";
}

PLCertificate::PLCertificate(Claim c, int d, std::string rule, std::vector<PLCertificate> premises)
    : claim_(c), dim_(d), rule_(std::move(rule)),
      premises_(std::make_shared<const std::vector<PLCertificate>>(std::move(premises))) {}

PLCertificate PLCertificate::axiom_simplex(int n) {
    if (n < 1)
        fail(ErrorKind::domain, "simplex needs at least one vertex");
    return {Claim::ball, n - 1, "axiom: simplex on " + std::to_string(n) + " vertices"};
}

PLCertificate PLCertificate::axiom_boundary(int n) {
    if (n < 1)
        fail(ErrorKind::domain, "simplex boundary needs at least one vertex");
    return {Claim::sphere, n - 2, "axiom: boundary of the simplex on " + std::to_string(n) + " vertices"};
}

PLCertificate PLCertificate::from_recognizer(const Verdict& v) {
    switch (v.shape) {
    case Shape::sphere:
        return {Claim::sphere, v.dim, "low-dimensional recognizer"};
    case Shape::ball:
        return {Claim::ball, v.dim, "low-dimensional recognizer"};
    case Shape::other:
        break;
    }
    return {Claim::unknown, v.dim, "low-dimensional recognizer: neither sphere nor ball"};
}

PLCertificate PLCertificate::unknown(std::string reason) { return {Claim::unknown, 0, std::move(reason)}; }

PLCertificate PLCertificate::join(const PLCertificate& a, const PLCertificate& b) {
    if (a.claim_ == Claim::unknown || b.claim_ == Claim::unknown)
        return {Claim::unknown, 0, "join with an uncertified factor", {a, b}};
    const Claim c = (a.claim_ == Claim::sphere && b.claim_ == Claim::sphere) ? Claim::sphere : Claim::ball;
    return {c, a.dim_ + b.dim_ + 1, "join", {a, b}};
}

PLCertificate PLCertificate::boundary_of(const PLCertificate& ball) {
    if (ball.claim_ != Claim::ball)
        return {Claim::unknown, 0, "boundary of an uncertified ball", {ball}};
    return {Claim::sphere, ball.dim_ - 1, "boundary of a ball", {ball}};
}

PLCertificate PLCertificate::neat(const PLCertificate& a, int k, const PLCertificate& b) {
    if (a.claim_ != Claim::ball || b.claim_ != Claim::ball)
        return {Claim::unknown, 0, "neat composition of uncertified balls", {a, b}};
    return {Claim::ball, a.dim_ + b.dim_, "neat composition at slot " + std::to_string(k), {a, b}};
}

PLCertificate PLCertificate::sphere_action(const PLCertificate& sphere, int k, const PLCertificate& ball) {
    if (sphere.claim_ != Claim::sphere || ball.claim_ != Claim::ball)
        return {Claim::unknown, 0, "action with uncertified inputs", {sphere, ball}};
    return {Claim::sphere, sphere.dim_ + ball.dim_, "neat pair acting at slot " + std::to_string(k), {sphere, ball}};
}

PLCertificate PLCertificate::ghost(const PLCertificate& c, int position) {
    return {c.claim_, c.dim_, "ghost vertex inserted at " + std::to_string(position), {c}};
}

std::string PLCertificate::claim_text() const {
    switch (claim_) {
    case Claim::sphere:
        return "sphere(" + std::to_string(dim_) + ")";
    case Claim::ball:
        return "ball(" + std::to_string(dim_) + ")";
    case Claim::unknown:
        break;
    }
    return "unknown";
}

std::string PLCertificate::describe() const {
    std::string out;
    auto walk = [&](auto&& self, const PLCertificate& c, int depth) -> void {
        out += std::string(2 * depth, ' ') + c.claim_text() + "  [" + c.rule_ + "]\n";
        for (const auto& p : c.premises())
            self(self, p, depth + 1);
    };
    walk(walk, *this, 0);
    return out;
}

CertifiedComplex certify_simplex(int n) { return {named::simplex(n), PLCertificate::axiom_simplex(n)}; }

CertifiedComplex certify_boundary(int n) { return {named::boundary_simplex(n), PLCertificate::axiom_boundary(n)}; }

CertifiedComplex certify_by_recognizer(const Complex& kc) {
    return {kc, PLCertificate::from_recognizer(recognize_low_dim(kc))};
}

CertifiedComplex certified_join(const CertifiedComplex& a, const CertifiedComplex& b) {
    return {join(a.complex, b.complex), PLCertificate::join(a.certificate, b.certificate)};
}

Mask interior_vertices(const RelativePair& p) { return p.total.vertices() & ~p.sub.vertices(); }

NeatPair NeatPair::simplex(int n) {
    return make(RelativePair(named::simplex(n), named::boundary_simplex(n)), PLCertificate::axiom_simplex(n));
}

NeatPair NeatPair::make(const RelativePair& pair, const PLCertificate& ball) {
    if (ball.claim() != Claim::ball)
        fail(ErrorKind::domain, "a neat pair needs a ball certificate on its total complex");
    if (combinatorial_boundary(pair.total) != pair.sub)
        fail(ErrorKind::domain, "sub complex is not the boundary of the total complex");
    // A 0-ball is a single vertex with empty boundary; the unit pair is of this kind.
    if (ball.dim() >= 1 && interior_vertices(pair) != 0)
        fail(ErrorKind::domain, "neat pairs may not have interior vertices");
    if (ball.dim() <= 2 && recognize_low_dim(pair.total) != Verdict{Shape::ball, ball.dim()})
        fail(ErrorKind::domain, "recognizer rejects the ball certificate");
    return NeatPair(pair, ball, PLCertificate::boundary_of(ball));
}

NeatPair NeatPair::recognized(const RelativePair& pair) {
    Verdict v = recognize_low_dim(pair.total);
    if (v.shape != Shape::ball)
        fail(ErrorKind::domain, "total complex is not recognized as a ball");
    return make(pair, PLCertificate::from_recognizer(v));
}

NeatPair NeatPair::with_ghost(const NeatPair& p, int position) {
    RelativePair moved(insert_ghost(p.pair_.total, position), insert_ghost(p.pair_.sub, position));
    return NeatPair(std::move(moved), PLCertificate::ghost(p.total_, position), PLCertificate::ghost(p.sub_, position));
}

NeatPair neat_compose(const NeatPair& p, int k, const NeatPair& q) {
    RelativePair composed = join_compose(p.pair_, k, q.pair_);
    PLCertificate total = PLCertificate::neat(p.total_, k, q.total_);
    PLCertificate sub = PLCertificate::boundary_of(total);
    if (combinatorial_boundary(composed.total) != composed.sub)
        fail(ErrorKind::internal, "composed sub complex is not the boundary of the composed total");
    if (total.dim() >= 1 && interior_vertices(composed) != 0)
        fail(ErrorKind::internal, "composition created an interior vertex");
    if (total.dim() <= 2) {
        if (recognize_low_dim(composed.total) != Verdict{Shape::ball, total.dim()} ||
            recognize_low_dim(composed.sub) != Verdict{Shape::sphere, total.dim() - 1})
            fail(ErrorKind::internal, "recognizer disagrees with the composed certificate");
    }
    return NeatPair(std::move(composed), std::move(total), std::move(sub));
}

CertifiedComplex act_on_sphere(const CertifiedComplex& sphere, int k, const NeatPair& q) {
    return {right_action(sphere.complex, k, q.pair()),
            PLCertificate::sphere_action(sphere.certificate, k, q.total_certificate())};
}

namespace {

void check_j(const Complex& kc, const std::vector<int>& j) {
    if (static_cast<int>(j.size()) != kc.ambient())
        fail(ErrorKind::domain, "J needs one entry per vertex");
    long total = 0;
    for (int x : j) {
        if (x < 1)
            fail(ErrorKind::domain, "J entries must be positive");
        total += x;
    }
    if (total > ambient_cap())
        fail(ErrorKind::resource, "J-construction exceeds the ambient cap");
}

}  // namespace

Complex j_construction(const Complex& kc, const std::vector<int>& j) {
    check_j(kc, j);
    Complex cur = kc;
    for (int i = kc.ambient(); i >= 1; --i)
        for (int t = 1; t < j[i - 1]; ++t)
            cur = wed_vertex(cur, i);
    return cur;
}

CertifiedComplex certified_j_construction(const CertifiedComplex& sphere, const std::vector<int>& j) {
    check_j(sphere.complex, j);
    const NeatPair wedge = NeatPair::simplex(2);
    CertifiedComplex cur = sphere;
    for (int i = sphere.complex.ambient(); i >= 1; --i)
        for (int t = 1; t < j[i - 1]; ++t)
            cur = act_on_sphere(cur, i, wedge);
    return cur;
}

}  // namespace polyop
