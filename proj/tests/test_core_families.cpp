#include "doctest.h"
#include "oracle.hpp"

#include "polyop/error.hpp"
#include "polyop/families.hpp"
#include "polyop/format.hpp"
#include "polyop/scpx.hpp"

using namespace polyop;

namespace {

Family fam(int n, const std::vector<std::vector<int>>& sets) { return Family::of(n, sets); }
Complex cpx(int n, const std::vector<std::vector<int>>& sets) { return Complex(Family::of(n, sets)); }

}  // namespace

TEST_CASE("subset and family basics") {
    CHECK(Subset::of(3, {1, 3}).mask() == 0b101u);
    CHECK(Subset::of(3, {1, 3}).to_string() == "{1,3}");
    CHECK_THROWS_AS(Subset(2, 0b100), Error);
    CHECK(fam(1, {{}}) != fam(2, {{}}));
    CHECK(fam(2, {{1, 2}, {1}, {}, {1}}).sets() == std::vector<Mask>{0, 1, 3});
    CHECK(fam(3, {{3}, {1, 2}, {2}}).sets() == std::vector<Mask>{2, 4, 3});
    CHECK_THROWS_AS(fam(2, {{3}}), Error);
    CHECK_THROWS_AS(Complex(fam(2, {{1}})), Error);
    CHECK(Family::power_set(3).size() == 8);
}

TEST_CASE("ambient cap") {
    const int saved = ambient_cap();
    set_ambient_cap(4);
    CHECK_THROWS_AS(Family(5), Error);
    try {
        Family f(5);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource);
    }
    CHECK_THROWS_AS(set_ambient_cap(31), Error);
    set_ambient_cap(saved);
    CHECK_NOTHROW(Family(5));
}

TEST_CASE("closure examples") {
    CHECK(closure(fam(2, {{1, 2}}), ClosureMode::down) == fam(2, {{}, {1}, {2}, {1, 2}}));
    CHECK(closure(fam(2, {{1, 2}}), ClosureMode::reduced_down) == fam(2, {{1}, {2}, {1, 2}}));
    CHECK(closure(fam(2, {{1}}), ClosureMode::up) == fam(2, {{1}, {1, 2}}));
    CHECK_THROWS_AS(closure(fam(2, {{}, {1}}), ClosureMode::reduced_down), Error);
    CHECK_THROWS_AS(closure(Family(2), ClosureMode::reduced_down), Error);
}

TEST_CASE("closure agrees with the brute-force oracle and is idempotent") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& f : oracle::all_families(n)) {
            CHECK(closure(f, ClosureMode::down) == oracle::down(f));
            CHECK(closure(f, ClosureMode::up) == oracle::up(f));
            for (auto mode : {ClosureMode::down, ClosureMode::up})
                CHECK(closure(closure(f, mode), mode) == closure(f, mode));
            if (!f.empty() && !f.contains(0)) {
                auto r = closure(f, ClosureMode::reduced_down);
                std::vector<Mask> expect;
                for (Mask s : oracle::down(f))
                    if (s)
                        expect.push_back(s);
                CHECK(r == Family(n, expect));
                CHECK(closure(r, ClosureMode::reduced_down) == r);
            }
        }
}

TEST_CASE("complement examples and involutions") {
    CHECK(complement(fam(2, {{}, {1}}), ComplementMode::faces) == fam(2, {{2}, {1, 2}}));
    CHECK(complement(fam(2, {{}, {1}}), ComplementMode::pointwise) == fam(2, {{1, 2}, {2}}));
    CHECK(complement(fam(2, {{1}, {2}}), ComplementMode::pointwise) == fam(2, {{1}, {2}}));
    CHECK(complement_derived(fam(2, {{}, {1}}), 1) == complement(fam(2, {{}, {1}}), ComplementMode::faces));
    CHECK(complement_derived(fam(2, {{}, {1}}), 2) == complement(fam(2, {{}, {1}}), ComplementMode::pointwise));
    CHECK(complement(Subset::of(3, {1})) == Subset::of(3, {2, 3}));
    for (const auto& f : oracle::all_families(3)) {
        CHECK(complement(f, ComplementMode::faces) == oracle::missing(f));
        for (auto mode : {ComplementMode::faces, ComplementMode::pointwise})
            CHECK(complement(complement(f, mode), mode) == f);
    }
    for (const auto& k : oracle::all_complexes(3)) {
        CHECK(is_upward_closed(complement(k, ComplementMode::faces)));
        CHECK(is_upward_closed(complement(k, ComplementMode::pointwise)));
    }
}

TEST_CASE("extremals and non-faces") {
    CHECK(extremals(fam(3, {{}, {1}, {2}, {1, 2}, {3}}), ExtremalMode::maximal) == fam(3, {{1, 2}, {3}}));
    CHECK(extremals(fam(3, {{1}, {1, 2}, {1, 3}}), ExtremalMode::minimal) == fam(3, {{1}}));
    CHECK(extremals(Family(2), ExtremalMode::maximal) == Family(2));
    CHECK(non_faces(named::boundary_simplex(3), NonFaceMode::mnf) == fam(3, {{1, 2, 3}}));
    CHECK(non_faces(fam(2, {{}, {1}, {2}}), NonFaceMode::mnf) == fam(2, {{1, 2}}));
    CHECK(non_faces(fam(2, {{1, 2}}), NonFaceMode::mnu) == fam(2, {{1}, {2}}));
    CHECK_THROWS_AS(non_faces(fam(2, {{1}}), NonFaceMode::mnf), Error);
    CHECK_THROWS_AS(non_faces(fam(2, {{}}), NonFaceMode::mnu), Error);
    for (const auto& f : oracle::all_families(3)) {
        CHECK(extremals(f, ExtremalMode::maximal) == oracle::maxima(f));
        CHECK(extremals(f, ExtremalMode::minimal) == oracle::minima(f));
        CHECK(is_transversal(extremals(f, ExtremalMode::maximal)));
        CHECK(is_transversal(extremals(f, ExtremalMode::minimal)));
    }
}

TEST_CASE("commutative diagram of family maps on every complex up to [3]") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& f : oracle::all_complexes(n)) {
            const Complex k(f);
            CHECK(down_closure(extremals(k, ExtremalMode::maximal)) == k);
            CHECK(facets(k) == oracle::maxima(f));
            CHECK(non_faces(k, NonFaceMode::mnf) ==
                  extremals(complement(k, ComplementMode::faces), ExtremalMode::minimal));
            CHECK(complement(complement(k, ComplementMode::pointwise), ComplementMode::pointwise) == f);
            const Family u = complement(k, ComplementMode::pointwise);
            CHECK(non_faces(u, NonFaceMode::mnu) == oracle::maxima(oracle::missing(u)));
        }
}

TEST_CASE("classify") {
    CHECK(classify(fam(2, {{}, {1}, {2}})) == Classification{true, false, false, false});
    CHECK(classify(fam(3, {{1, 2}, {2, 3}})) == Classification{false, false, true, true});
    CHECK(classify(Family::power_set(2)) == Classification{true, true, false, false});
    for (const auto& f : oracle::all_families(3)) {
        auto c = classify(f);
        CHECK(c.simplicial == oracle::down_closed(f));
        CHECK(c.upward == (oracle::up(f) == f));
        CHECK(c.transversal == (oracle::maxima(f) == f));
        CHECK(c.reduced == !f.contains(0));
    }
}

TEST_CASE("dimension") {
    CHECK(dimension(named::simplex(3)) == 2);
    CHECK(dimension(named::trivial(5)) == -1);
    CHECK(!dimension(named::empty(2)).has_value());
    CHECK(is_pure(named::complete_pure(4, 2)));
    CHECK(!is_pure(cpx(3, {{}, {1}, {2}, {1, 2}, {3}})));
}

TEST_CASE("relabel") {
    const Permutation swap13({3, 2, 1});
    CHECK(relabel(fam(3, {{1, 2}, {3}}), swap13) == fam(3, {{2, 3}, {1}}));
    CHECK_THROWS_AS(relabel(fam(2, {{1}}), swap13), Error);
    for (const auto& f : oracle::all_complexes(3)) {
        const Complex k(f);
        for (const auto& s : Permutation::all(3)) {
            CHECK(relabel(relabel(k, s), s.inverse()) == k);
            CHECK(classify(relabel(f, s)) == classify(f));
            CHECK(dimension(relabel(k, s)) == dimension(k));
        }
        CHECK(relabel(k, Permutation::identity(3)) == k);
    }
}

TEST_CASE("join") {
    CHECK(join(named::point(), named::point()) == named::simplex(2));
    CHECK(join(named::boundary_simplex(2), named::boundary_simplex(2)) ==
          cpx(4, {{}, {1}, {2}, {3}, {4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    CHECK(join(named::simplex(2), named::empty(1)) == named::empty(3));
    CHECK(join(named::empty(1), named::simplex(2)) == named::empty(3));
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (const auto& f : oracle::all_complexes(a))
                for (const auto& g : oracle::all_complexes(b)) {
                    const Complex k(f), l(g);
                    std::vector<Mask> brute;
                    for (Mask i : f)
                        for (Mask j : g)
                            brute.push_back(i | (j << a));
                    CHECK(join(k, l).faces() == Family(a + b, brute));
                    CHECK(join(k, named::trivial(0)) == k);
                    CHECK(join(named::trivial(0), k) == k);
                    if (!k.empty() && !l.empty())
                        CHECK(*dimension(join(k, l)) == *dimension(k) + *dimension(l) + 1);
                    for (const auto& h : oracle::all_complexes(1)) {
                        const Complex m(h);
                        CHECK(join(join(k, l), m) == join(k, join(l, m)));
                    }
                }
}

TEST_CASE("slot join") {
    const Complex a = cpx(3, {{}, {1}, {3}});
    std::vector<Mask> brute;
    for (Mask i : a)
        for (Mask j : named::point())
            brute.push_back(oracle::splice(i, 3, 2, j, 1, true));
    CHECK(slot_join(a, 2, named::point()).faces() == Family(3, brute));
    CHECK(slot_join(a, 2, named::point()) == cpx(3, {{}, {1}, {2}, {3}, {1, 2}, {2, 3}}));
    CHECK(slot_join(named::trivial(1), 1, named::boundary_simplex(3)) == named::boundary_simplex(3));
    CHECK(slot_join(a, 2, named::empty(2)) == named::empty(4));
    CHECK_THROWS_AS(slot_join(a, 1, named::point()), Error);
}

TEST_CASE("complex union, intersection, ghosts") {
    const Complex a = Complex::generated_by(3, {{1, 2}}), b = Complex::generated_by(3, {{2, 3}});
    CHECK(complex_union(a, b) == Complex::generated_by(3, {{1, 2}, {2, 3}}));
    CHECK(complex_intersection(a, b) == cpx(3, {{}, {2}}));
    CHECK(is_subcomplex(complex_intersection(a, b), a));
    CHECK(!is_subcomplex(b, a));
    CHECK(insert_ghost(named::simplex(2), 2) == Complex::generated_by(3, {{1, 3}}));
    CHECK(a.vertices() == 0b011u);
}

TEST_CASE("text and JSON formats") {
    const std::string text = "n 3\nfaces\n-\n1\n2\n3\n1 2\n";
    const Family f = parse_family(text);
    CHECK(f == fam(3, {{}, {1}, {2}, {1, 2}, {3}}));
    CHECK(to_text(f) == text);
    CHECK(parse_family("# comment\nn 3\n\nfacets\n1 2\n3\n") == f);
    CHECK(to_text(facets(Complex(f)), TextKeyword::facets) == "n 3\nfacets\n3\n1 2\n");
    CHECK(parse_family(to_json(f)) == f);
    CHECK(parse_family("{\"n\": 3, \"faces\": [[1,2],[3]], \"facets\": true}") == f);
    CHECK(to_json(fam(2, {{}, {1}})) == "{\"faces\":[[],[1]],\"n\":2}\n");
    CHECK(parse_family("n 0\nfaces\n") == Family(0));
    CHECK_THROWS_AS(parse_family("n 2\nfaces\n3\n"), Error);
    CHECK_THROWS_AS(parse_family("n 2\nfaces\n1 1\n"), Error);
    CHECK_THROWS_AS(parse_family("faces\n1\n"), Error);
    CHECK_THROWS_AS(parse_family("{\"n\": 2"), Error);
    for (const auto& g : oracle::all_families(3)) {
        CHECK(parse_family(to_text(g)) == g);
        CHECK(parse_family(to_json(g)) == g);
    }
    const RelativePair p(named::simplex(2), named::boundary_simplex(2));
    CHECK(parse_pair(to_text(p)) == p);
    CHECK(parse_pair(to_json(p)) == p);
}
