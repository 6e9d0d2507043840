#include "doctest.h"
#include "oracle.hpp"

#include "polyop/error.hpp"
#include "polyop/instances.hpp"
#include "polyop/laws.hpp"

using namespace polyop;

TEST_CASE("Perm passes every law and the case counts are exact") {
    const auto r = check_laws(perm_instance(), 4);
    CHECK(r.total_violations() == 0);
    // Elements i of [n] for n <= 4, every slot on each side.
    CHECK(r.find(Law::unit)->checked == 2 + 6 + 12 + 20);
    std::uint64_t closure_free = 0;
    for (const auto& l : r.laws)
        closure_free += l.law == Law::closure;
    CHECK(closure_free == 0);
    std::uint64_t sequential = 0;
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            sequential += std::uint64_t(n) * n * m * m * 10;
    CHECK(r.find(Law::sequential)->checked == sequential);
    CHECK(r.summary().find("0 violations") != std::string::npos);
}

TEST_CASE("dropping the faces through the slot only breaks the unit law") {
    const auto r = check_laws(broken_subst_instance(), 3);
    CHECK(r.find(Law::unit)->violated > 0);
    CHECK(r.find(Law::sequential)->violated == 0);
    CHECK(r.find(Law::parallel)->violated == 0);
    CHECK(r.find(Law::unit)->witnesses.front().description == "unit o1 {-,{1}}/1");
}

TEST_CASE("a corrupted substitution is caught with a minimal replayable witness") {
    LawOptions options;
    std::vector<CaseRecord> records;
    options.on_case = [&](const CaseRecord& rec) { records.push_back(rec); };
    const auto r = check_laws(mirrored_subst_instance(), 2, options);
    const LawCounter* seq = r.find(Law::sequential);
    REQUIRE(seq != nullptr);
    CHECK(seq->violated > 0);
    REQUIRE(!seq->witnesses.empty());
    std::uint64_t first = ~std::uint64_t(0);
    for (const auto& rec : records)
        if (rec.law == Law::sequential && !rec.ok)
            first = std::min(first, rec.case_id);
    CHECK(seq->witnesses.front().case_id == first);
    for (const auto& l : r.laws)
        for (const auto& w : l.witnesses)
            CHECK(w.replay());
    CHECK(r.summary().find(" 0 violations") == std::string::npos);
    CHECK(records.size() == r.total_checked());
}

TEST_CASE("reports do not depend on the worker count") {
    LawOptions one, many;
    many.workers = 3;
    auto a = check_laws(mirrored_subst_instance(), 2, one);
    auto b = check_laws(mirrored_subst_instance(), 2, many);
    CHECK(a.same_results(b));
    one.sampled = many.sampled = true;
    one.samples = many.samples = 400;
    one.seed = many.seed = 99;
    a = check_laws(scpx_instance(Variant::comp, false), 5, one);
    b = check_laws(scpx_instance(Variant::comp, false), 5, many);
    CHECK(a.same_results(b));
    CHECK(a.total_violations() == 0);
}

TEST_CASE("sampled mode replays from its seed") {
    LawOptions options;
    options.sampled = true;
    options.samples = 200;
    options.seed = 12345;
    auto a = check_laws(mirrored_subst_instance(), 4, options);
    auto b = check_laws(mirrored_subst_instance(), 4, options);
    CHECK(a.same_results(b));
    CHECK(a.seed == 12345);
    CHECK(a.total_violations() > 0);
    for (const auto& l : a.laws)
        for (const auto& w : l.witnesses)
            CHECK(w.replay());
    options.seed = 54321;
    auto c = check_laws(mirrored_subst_instance(), 4, options);
    CHECK(c.total_checked() == a.total_checked());
}

TEST_CASE("records") {
    CHECK(format_record({Law::parallel, 17, true}) == "parallel\t17\tok");
    CHECK(format_record({Law::sequential, 3, false}) == "sequential\t3\tviolation");
    std::vector<CaseRecord> records;
    LawOptions options;
    options.on_case = [&](const CaseRecord& rec) { records.push_back(rec); };
    check_laws(perm_instance(), 2, options);
    std::vector<CaseRecord> again;
    options.on_case = [&](const CaseRecord& rec) { again.push_back(rec); };
    options.workers = 4;
    check_laws(perm_instance(), 2, options);
    REQUIRE(records.size() == again.size());
    for (std::size_t i = 0; i < records.size(); ++i)
        CHECK(records[i].case_id == again[i].case_id);
}

TEST_CASE("harness errors") {
    CHECK_THROWS_AS(check_laws(scpx_instance(Variant::subst, false), 6), Error);
    try {
        check_laws(scpx_instance(Variant::subst, false), 6);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource);
    }
    CHECK_THROWS_AS(check_laws(perm_instance(), 0), Error);
    CHECK_THROWS_AS(run_registered("no-such-operad", 2, {}), Error);

    auto op = perm_instance();
    op.compose = [](const PermElement&, int, const PermElement&) -> PermElement {
        fail(ErrorKind::internal, "boom");
    };
    LawOptions options;
    options.workers = 2;
    CHECK_THROWS_AS(check_laws(op, 2, options), Error);
}

TEST_CASE("hypergraph and transversal operads") {
    for (const char* name : {"hypergraph-subst", "hypergraph-subst-reduced", "hypergraph-comp",
                             "hypergraph-comp-reduced"}) {
        CAPTURE(name);
        CHECK(run_registered(name, 2, {}).total_violations() == 0);
        LawOptions sampled;
        sampled.sampled = true;
        sampled.samples = 500;
        CHECK(run_registered(name, 3, sampled).total_violations() == 0);
    }
    LawOptions options;
    options.inner_bound = 2;
    for (const char* name :
         {"transversal-hat-subst", "transversal-check-subst", "transversal-hat-comp", "transversal-check-comp"}) {
        CAPTURE(name);
        CHECK(run_registered(name, 3, options).total_violations() == 0);
    }
}

TEST_CASE("every registered operad runs") {
    for (const auto& reg : registered_operads()) {
        CAPTURE(reg.name);
        LawOptions options;
        options.inner_bound = 2;
        const auto r = run_registered(reg.name, std::min(reg.default_bound, 2), options);
        CHECK(r.operad == reg.name);
        CHECK(r.total_checked() > 0);
        if (reg.name == "broken-subst" || reg.name == "mirrored-subst")
            CHECK(r.total_violations() > 0);
        else
            CHECK(r.total_violations() == 0);
    }
}
