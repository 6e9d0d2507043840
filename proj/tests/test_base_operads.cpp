#include "doctest.h"
#include "oracle.hpp"

#include "polyop/base_operads.hpp"
#include "polyop/error.hpp"
#include "polyop/families.hpp"
#include "polyop/instances.hpp"

using namespace polyop;

namespace {

std::vector<Subset> subsets(int n) {
    std::vector<Subset> out;
    for (Mask m = 0; m < (1u << n); ++m)
        out.emplace_back(n, m);
    return out;
}

// Perm composition read off directly from the index arithmetic.
int perm_oracle(int i, int k, int j, int m) {
    if (k < i)
        return i + m - 1;
    if (k == i)
        return i + j - 1;
    return i;
}

}  // namespace

TEST_CASE("Perm composition rows") {
    CHECK(perm_compose(PermElement(5, 3), 2, PermElement(3, 2)) == PermElement(7, 5));
    CHECK(perm_compose(PermElement(5, 3), 3, PermElement(3, 2)) == PermElement(7, 4));
    CHECK(perm_compose(PermElement(5, 3), 4, PermElement(3, 2)) == PermElement(7, 3));
    CHECK_THROWS_AS(perm_compose(PermElement(2, 1), 3, PermElement(1, 1)), Error);
    CHECK_THROWS_AS(PermElement(2, 3), Error);
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (int i = 1; i <= n; ++i)
                for (int k = 1; k <= n; ++k)
                    for (int j = 1; j <= m; ++j)
                        CHECK(perm_compose(PermElement(n, i), k, PermElement(m, j)).value == perm_oracle(i, k, j, m));
}

TEST_CASE("subset composition") {
    CHECK(subset_compose(Subset::of(5, {2, 3, 5}), 3, Subset::of(3, {1, 3}), Variant::subst) ==
          Subset::of(7, {2, 3, 5, 7}));
    CHECK(subset_compose(Subset::of(5, {2, 3, 5}), 4, Subset::of(3, {1, 3}), Variant::subst) ==
          Subset::of(7, {2, 3, 7}));
    CHECK(subset_compose(Subset::of(2, {1}), 1, Subset::of(2, {2}), Variant::comp) == Subset::of(3, {1, 2}));
    CHECK(subset_compose(Subset::of(3, {1, 3}), 2, Subset(0, 0), Variant::subst) == Subset::of(2, {1, 2}));
    CHECK_THROWS_AS(subset_compose(Subset::of(2, {1}), 0, Subset::of(1, {1}), Variant::subst), Error);
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (const auto& i : subsets(n))
                for (const auto& j : subsets(m))
                    for (int k = 1; k <= n; ++k) {
                        const bool in = i.contains(k);
                        const Mask subst = oracle::splice(i.mask(), n, k, j.mask(), m, in);
                        CHECK(subset_compose(i, k, j, Variant::subst).mask() == subst);
                        // The composition variant is the complement-conjugate of substitution.
                        CHECK(complement(subset_compose(i, k, j, Variant::subst)) ==
                              subset_compose(complement(i), k, complement(j), Variant::comp));
                        const Subset pp = power_perm_compose(i, k, j);
                        CHECK(pp == (i.empty() || j.empty() ? Subset(n + m - 1, 0) : Subset(n + m - 1, subst)));
                    }
}

TEST_CASE("power composition") {
    const PowerElement a{Family::of(2, {{1}, {2}, {1, 2}})}, b{Family::of(2, {{1, 2}})};
    CHECK(std::get<Family>(power_compose(a, 2, b, Variant::subst).payload) == Family::of(3, {{1}, {2, 3}, {1, 2, 3}}));
    const PowerElement c{Family::of(3, {{1, 2}, {2, 3}})}, d{Family::of(1, {{}})};
    CHECK(std::get<Family>(power_compose(c, 3, d, Variant::subst).payload) == Family::of(3, {{1, 2}, {2}}));
    for (int m = 0; m <= 2; ++m)
        for (const auto& f : oracle::all_families(m))
            CHECK(hypergraph_compose(Family(2), 1, f, Variant::subst) == Family(m + 1));
    CHECK_THROWS_AS(power_compose(PowerElement{Subset::of(1, {1})}, 1, b, Variant::subst), Error);
    CHECK(std::get<Subset>(power_compose(PowerElement{Subset::of(2, {1})}, 1, PowerElement{Subset::of(2, {2})},
                                         Variant::subst)
                               .payload) == Subset::of(3, {2}));
}

TEST_CASE("hypergraph composition matches the elementwise oracle") {
    for (int n = 1; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m)
            for (const auto& a : oracle::all_families(n))
                for (const auto& b : oracle::all_families(m))
                    for (int k = 1; k <= n; ++k)
                        for (Variant v : {Variant::subst, Variant::comp}) {
                            std::vector<Mask> out;
                            for (Mask i : a)
                                for (Mask j : b)
                                    out.push_back(
                                        subset_compose(Subset(n, i), k, Subset(m, j), v).mask());
                            CHECK(hypergraph_compose(a, k, b, v) == Family(n + m - 1, out));
                        }
}

TEST_CASE("monad maps") {
    CHECK(monad_unit(PermElement(3, 2)) == Subset::of(3, {2}));
    CHECK(monad_unit(Subset::of(3, {1, 3})) == Family::of(3, {{1, 3}}));
    CHECK(monad_mult(Family::of(3, {{1}, {2, 3}})) == Subset::of(3, {1, 2, 3}));
    CHECK(monad_mult(Family::of(2, {{}})) == Subset(2, 0));
    CHECK(monad_mult(Family(2)) == Subset(2, 0));
    for (const auto& s : subsets(3))
        CHECK(monad_mult(monad_unit(s)) == s);
    for (const auto& s : subsets(3))
        for (const auto& t : subsets(3))
            CHECK((monad_unit(s) == monad_unit(t)) == (s == t));
}

TEST_CASE("monad maps are operad morphisms") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= m; ++j)
                    for (int k = 1; k <= n; ++k) {
                        const PermElement x(n, i), y(m, j);
                        CHECK(monad_unit(perm_compose(x, k, y)) ==
                              power_perm_compose(monad_unit(x), k, monad_unit(y)));
                    }
    for (const auto& a : oracle::all_families(2))
        for (const auto& b : oracle::all_families(2))
            for (int k = 1; k <= 2; ++k) {
                CHECK(monad_mult(double_power_perm_compose(a, k, b)) ==
                      power_perm_compose(monad_mult(a), k, monad_mult(b)));
                const bool reduced = !a.empty() && !b.empty() && !a.contains(0) && !b.contains(0);
                if (reduced)
                    CHECK(double_power_perm_compose(a, k, b) == hypergraph_compose(a, k, b, Variant::subst));
            }
}

TEST_CASE("ComTrias presentation") {
    const auto report = comtrias_relations_check();
    CHECK(report.relations.size() == 11);
    CHECK(report.passed() == 11);
    CHECK(report.swap_action_holds);
    CHECK(report.all_hold());
    for (const auto& r : report.relations)
        CHECK(r.lhs_value.ambient() == 3);
}

TEST_CASE("empty-set relations of the power set of Perm") {
    CHECK(power_perm_empty_relations_check().all_hold());
    // The composition with the nullary empty set does not collapse in IdemCom.
    const Subset e(0, 0);
    CHECK(subset_compose(Subset::of(2, {1}), 1, e, Variant::subst) !=
          subset_compose(Subset::of(2, {1}), 2, e, Variant::subst));
    CHECK(power_perm_compose(Subset::of(2, {1}), 1, e) == power_perm_compose(Subset::of(2, {1}), 2, e));
}

TEST_CASE("base operad laws") {
    for (const char* name : {"perm", "power-perm", "comtrias", "idemcom", "idemcom-c"}) {
        CAPTURE(name);
        const auto report = run_registered(name, std::string(name) == "perm" ? 4 : 3, {});
        CHECK(report.total_violations() == 0);
        CHECK(report.total_checked() > 0);
    }
}
