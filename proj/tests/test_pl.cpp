#include "doctest.h"
#include "oracle.hpp"

#include <map>

#include "polyop/enumerate.hpp"
#include "polyop/error.hpp"
#include "polyop/families.hpp"
#include "polyop/pl.hpp"
#include "polyop/relscpx.hpp"
#include "polyop/scpx.hpp"

using namespace polyop;

namespace {

Complex cpx(int n, const std::vector<std::vector<int>>& sets) { return Complex(Family::of(n, sets)); }
Complex gen(int n, const std::vector<std::vector<int>>& sets) { return Complex::generated_by(n, sets); }

const Complex path3 = cpx(3, {{}, {1}, {2}, {3}, {1, 2}, {2, 3}});
const Complex cycle4 = gen(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});

Verdict sphere(int d) { return {Shape::sphere, d}; }
Verdict ball(int d) { return {Shape::ball, d}; }

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }
long choose(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

TEST_CASE("combinatorial boundary") {
    CHECK(combinatorial_boundary(named::simplex(3)) == named::boundary_simplex(3));
    CHECK(combinatorial_boundary(named::boundary_simplex(3)) == named::empty(3));
    CHECK(combinatorial_boundary(path3) == cpx(3, {{}, {1}, {3}}));
    CHECK(combinatorial_boundary(named::point()) == named::trivial(1));
    CHECK_THROWS_AS(combinatorial_boundary(gen(3, {{1, 2}, {3}})), Error);
    CHECK_THROWS_AS(combinatorial_boundary(gen(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}})), Error);
    CHECK_THROWS_AS(combinatorial_boundary(named::empty(2)), Error);
    CHECK_THROWS_AS(combinatorial_boundary(named::trivial(2)), Error);
}

TEST_CASE("Euler characteristic") {
    CHECK(euler_characteristic(named::boundary_simplex(4)) == 2);
    CHECK(euler_characteristic(named::boundary_simplex(3)) == 0);
    CHECK(euler_characteristic(named::simplex(3)) == 1);
    CHECK(euler_characteristic(named::trivial(2)) == 0);
    CHECK_THROWS_AS(euler_characteristic(named::empty(2)), Error);
    for (const auto& kc : enumerate_complexes(4)) {
        if (kc.empty())
            continue;
        int chi = 0;
        for (Mask s : kc)
            if (s)
                chi += (bits::size(s) % 2) ? 1 : -1;
        CHECK(euler_characteristic(kc) == chi);
    }
}

TEST_CASE("low-dimensional recognizer examples") {
    CHECK(recognize_low_dim(named::boundary_simplex(3)) == sphere(1));
    CHECK(recognize_low_dim(named::boundary_simplex(4)) == sphere(2));
    CHECK(recognize_low_dim(named::complete_pure(4, 2)).shape == Shape::other);
    CHECK(recognize_low_dim(named::trivial(3)) == sphere(-1));
    CHECK(recognize_low_dim(named::discrete(2)) == sphere(0));
    CHECK(recognize_low_dim(named::point()) == ball(0));
    CHECK(recognize_low_dim(path3) == ball(1));
    CHECK(recognize_low_dim(cycle4) == sphere(1));
    CHECK(recognize_low_dim(named::simplex(3)) == ball(2));
    CHECK(recognize_low_dim(insert_ghost(named::simplex(3), 2)) == ball(2));
    CHECK(recognize_low_dim(named::discrete(3)).shape == Shape::other);
    CHECK(recognize_low_dim(named::empty(2)).shape == Shape::other);
    CHECK_THROWS_AS(recognize_low_dim(named::simplex(4)), Error);
    // Two triangles sharing a vertex.
    CHECK(recognize_low_dim(gen(5, {{1, 2, 3}, {3, 4, 5}})).shape == Shape::other);
    // Triangle plus a dangling edge is not pure.
    CHECK(recognize_low_dim(gen(4, {{1, 2, 3}, {3, 4}})).shape == Shape::other);
    // Two disjoint cycles.
    CHECK(recognize_low_dim(gen(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})).shape == Shape::other);
}

TEST_CASE("recognizer counts on [5] match direct counting") {
    std::map<std::pair<int, int>, long> counts;
    for (const auto& kc : enumerate_complexes(5)) {
        auto d = dimension(kc);
        if (d && *d > 2)
            continue;
        const Verdict v = recognize_low_dim(kc);
        if (v.shape != Shape::other)
            ++counts[{static_cast<int>(v.shape), v.dim}];
    }
    long cycles = 0, paths = 0;
    for (int v = 3; v <= 5; ++v)
        cycles += choose(5, v) * factorial(v - 1) / 2;
    for (int v = 2; v <= 5; ++v)
        paths += choose(5, v) * factorial(v) / 2;
    const int s = static_cast<int>(Shape::sphere), b = static_cast<int>(Shape::ball);
    CHECK(counts[{s, -1}] == 1);
    CHECK(counts[{s, 0}] == choose(5, 2));
    CHECK(counts[{b, 0}] == 5);
    CHECK(counts[{s, 1}] == cycles);
    CHECK(counts[{b, 1}] == paths);
    // Tetrahedron boundaries on four of the vertices, and the labeled triangular bipyramids.
    CHECK(counts[{s, 2}] == 5 + factorial(5) / 12);
}

TEST_CASE("recognized shapes have the expected local structure") {
    for (int n = 3; n <= 5; ++n)
        for (const auto& kc : enumerate_complexes(n)) {
            auto d = dimension(kc);
            if (!d || *d != 2)
                continue;
            const Verdict v = recognize_low_dim(kc);
            if (v.shape == Shape::other)
                continue;
            CHECK(euler_characteristic(kc) == (v.shape == Shape::sphere ? 2 : 1));
            for (int i = 1; i <= n; ++i) {
                if (!kc.contains(bits::single(i)))
                    continue;
                const Verdict link = recognize_low_dim(local_op(kc, i, LocalOp::link));
                if (v.shape == Shape::sphere)
                    CHECK(link == sphere(1));
                else
                    CHECK((link == sphere(1) || link == ball(1)));
            }
            if (v.shape == Shape::ball)
                CHECK(recognize_low_dim(combinatorial_boundary(kc)) == sphere(1));
        }
}

TEST_CASE("join propagation matches the recognizer") {
    const std::vector<CertifiedComplex> pieces = {
        {named::point(), PLCertificate::axiom_simplex(1)},
        {named::discrete(2), PLCertificate::axiom_boundary(2)},
        certify_by_recognizer(path3),
        certify_by_recognizer(cycle4),
        certify_by_recognizer(named::trivial(1)),
    };
    for (const auto& a : pieces)
        for (const auto& b : pieces) {
            const auto j = certified_join(a, b);
            const auto d = dimension(j.complex);
            if (*d > 2)
                continue;
            CHECK(j.certificate.dim() == *d);
            const Verdict v = recognize_low_dim(j.complex);
            CHECK(v.dim == j.certificate.dim());
            CHECK((v.shape == Shape::sphere) == (j.certificate.claim() == Claim::sphere));
            CHECK((v.shape == Shape::ball) == (j.certificate.claim() == Claim::ball));
        }
    CHECK(PLCertificate::join(PLCertificate::axiom_simplex(2), PLCertificate::axiom_simplex(3)).is(Claim::ball, 4));
    CHECK(PLCertificate::join(PLCertificate::axiom_simplex(2), PLCertificate::axiom_boundary(3)).is(Claim::ball, 3));
    CHECK(PLCertificate::join(PLCertificate::axiom_boundary(2), PLCertificate::axiom_boundary(3)).is(Claim::sphere, 2));
    CHECK(PLCertificate::join(PLCertificate::unknown("x"), PLCertificate::axiom_simplex(1)).claim() == Claim::unknown);
}

TEST_CASE("certificate description") {
    const auto c = PLCertificate::join(PLCertificate::axiom_boundary(2), PLCertificate::axiom_simplex(1));
    CHECK(c.claim_text() == "ball(1)");
    const std::string text = c.describe();
    CHECK(text.rfind("ball(1)  [join]\n", 0) == 0);
    CHECK(text.find("\n  sphere(0)  [axiom") != std::string::npos);
}

TEST_CASE("neat pairs") {
    const NeatPair unit = NeatPair::simplex(1);
    CHECK(unit.pair() == unit_pair());
    CHECK(neat_compose(NeatPair::simplex(2), 1, NeatPair::simplex(2)).pair() ==
          RelativePair(named::simplex(3), named::boundary_simplex(3)));
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int k = 1; k <= a; ++k) {
                const NeatPair r = neat_compose(NeatPair::simplex(a), k, NeatPair::simplex(b));
                CHECK(r.pair() == RelativePair(named::simplex(a + b - 1), named::boundary_simplex(a + b - 1)));
                CHECK(r.total_certificate().is(Claim::ball, a + b - 2));
                CHECK(r.sub_certificate().is(Claim::sphere, a + b - 3));
            }
    for (int a = 1; a <= 3; ++a)
        for (int k = 1; k <= a; ++k)
            CHECK(neat_compose(NeatPair::simplex(a), k, unit).pair() == NeatPair::simplex(a).pair());

    // A ghost slot composes by joining with the inner boundary.
    const NeatPair ghosted = NeatPair::with_ghost(NeatPair::simplex(2), 3);
    const NeatPair g = neat_compose(ghosted, 3, NeatPair::simplex(2));
    CHECK(g.pair().total == join(named::simplex(2), named::boundary_simplex(2)));
    CHECK(g.total_certificate().is(Claim::ball, 2));
    CHECK(recognize_low_dim(g.pair().total) == ball(2));

    // The middle vertex of a path is interior.
    CHECK_THROWS_AS(NeatPair::recognized(RelativePair(path3, cpx(3, {{}, {1}, {3}}))), Error);
    const NeatPair edge = NeatPair::recognized(RelativePair(named::simplex(2), named::discrete(2)));
    CHECK(edge.dim() == 1);
    CHECK_THROWS_AS(NeatPair::recognized(RelativePair(named::simplex(2), named::trivial(2))), Error);
    // The cone over a square has its apex in the interior.
    const Complex cone = gen(5, {{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}});
    CHECK(recognize_low_dim(cone) == ball(2));
    CHECK_THROWS_AS(NeatPair::make(RelativePair(cone, combinatorial_boundary(cone)), PLCertificate::axiom_simplex(3)),
                    Error);
    const Complex fan = gen(4, {{1, 2, 3}, {1, 3, 4}});
    const NeatPair square = NeatPair::recognized(RelativePair(fan, combinatorial_boundary(fan)));
    const NeatPair composed = neat_compose(edge, 2, square);
    CHECK(composed.total_certificate().is(Claim::ball, 3));
    CHECK(combinatorial_boundary(composed.pair().total) == composed.pair().sub);
}

TEST_CASE("J-construction") {
    CHECK(j_construction(named::boundary_simplex(3), {1, 1, 1}) == named::boundary_simplex(3));
    CHECK(j_construction(named::boundary_simplex(2), {2, 1}) == named::boundary_simplex(3));
    const Complex out = j_construction(named::boundary_simplex(3), {2, 1, 1});
    CHECK(out.ambient() == 4);
    CHECK(recognize_low_dim(out) == sphere(2));
    CHECK_THROWS_AS(j_construction(named::boundary_simplex(3), {0, 1, 1}), Error);
    CHECK_THROWS_AS(j_construction(named::boundary_simplex(3), {1, 1}), Error);

    const CertifiedComplex cycle = certify_boundary(3);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; a + b <= 5; ++b)
            for (int c = 1; a + b + c <= 6; ++c) {
                const std::vector<int> j = {a, b, c};
                const auto cert = certified_j_construction(cycle, j);
                CHECK(cert.complex == j_construction(cycle.complex, j));
                CHECK(*dimension(cert.complex) == 1 + (a - 1) + (b - 1) + (c - 1));
                CHECK(cert.certificate.is(Claim::sphere, *dimension(cert.complex)));
                if (cert.certificate.dim() <= 2) {
                    CHECK(recognize_low_dim(cert.complex) == sphere(cert.certificate.dim()));
                    if (cert.certificate.dim() == 2)
                        for (int i = 1; i <= cert.complex.ambient(); ++i)
                            CHECK(recognize_low_dim(local_op(cert.complex, i, LocalOp::link)) == sphere(1));
                }
            }
}
