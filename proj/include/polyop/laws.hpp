#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "polyop/error.hpp"
#include "polyop/permutation.hpp"

namespace polyop {

template <class T>
struct OperadInstance {
    std::string name;
    int min_arity = 1;
    std::function<int(const T&)> arity;
    // Every element of the given arity, duplicate free, in a fixed order.
    std::function<std::vector<T>(int)> enumerate;
    // Optional; used by sampled mode for arities the enumerator cannot reach.
    std::function<T(int, std::mt19937_64&)> sample;
    int enumerate_limit = 1 << 20;
    std::optional<T> unit;
    std::function<T(const T&, int, const T&)> compose;
    std::function<T(const T&, const Permutation&)> act;
    // Optional membership test; when set, every composite must pass it.
    std::function<bool(const T&)> member;
    std::function<std::string(const T&)> show;
};

enum class Law { unit, parallel, sequential, equivariance, closure };
constexpr Law kAllLaws[] = {Law::unit, Law::parallel, Law::sequential, Law::equivariance, Law::closure};
const char* law_name(Law law);

struct Witness {
    Law law;
    std::uint64_t case_id = 0;
    std::string description;
    // Re-evaluates the case; true when it still fails.
    std::function<bool()> replay;
};

struct LawCounter {
    explicit LawCounter(Law l) : law(l) {}
    Law law;
    std::uint64_t checked = 0;
    std::uint64_t violated = 0;
    std::vector<Witness> witnesses;  // smallest case ids first
};

struct LawReport {
    std::string operad;
    int arity_bound = 0;
    int inner_bound = 0;
    bool sampled = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<LawCounter> laws;
    double seconds = 0;

    std::uint64_t total_checked() const;
    std::uint64_t total_violations() const;
    const LawCounter* find(Law law) const;
    // Everything except wall-clock time.
    bool same_results(const LawReport& other) const;
    std::string summary() const;
};

struct CaseRecord {
    Law law;
    std::uint64_t case_id;
    bool ok;
};

struct LawOptions {
    bool sampled = false;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
    // Maximum arity of the inner operands; 0 means the arity bound.
    int inner_bound = 0;
    std::size_t max_witnesses = 5;
    // Called for every case in order; forces a single worker.
    std::function<void(const CaseRecord&)> on_case;
};

// Line-delimited records "law<TAB>case-id<TAB>ok|violation".
std::string format_record(const CaseRecord& r);

namespace detail {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t law, std::uint64_t index);
std::vector<Permutation> equivariance_perms(int n);

template <class T>
struct Case {
    T a{};
    int i = 0;
    T b{};
    int j = 0;
    T c{};
    Permutation sigma, tau;
};

template <class T>
bool holds(const OperadInstance<T>& op, Law law, const Case<T>& cs) {
    switch (law) {
    case Law::unit:
        if (cs.i == 0)
            return op.compose(*op.unit, 1, cs.a) == cs.a;
        return op.compose(cs.a, cs.i, *op.unit) == cs.a;
    case Law::parallel: {
        const int m = op.arity(cs.b);
        return op.compose(op.compose(cs.a, cs.i, cs.b), cs.j + m - 1, cs.c) ==
               op.compose(op.compose(cs.a, cs.j, cs.c), cs.i, cs.b);
    }
    case Law::sequential:
        return op.compose(cs.a, cs.i, op.compose(cs.b, cs.j, cs.c)) ==
               op.compose(op.compose(cs.a, cs.i, cs.b), cs.i + cs.j - 1, cs.c);
    case Law::equivariance:
        return op.compose(op.act(cs.a, cs.sigma), cs.sigma(cs.i), op.act(cs.b, cs.tau)) ==
               op.act(op.compose(cs.a, cs.i, cs.b), block_perm(cs.sigma, cs.i, cs.tau));
    case Law::closure:
        return op.member(op.compose(cs.a, cs.i, cs.b));
    }
    return false;
}

template <class T>
std::string describe(const OperadInstance<T>& op, Law law, const Case<T>& cs) {
    auto s = [&](const T& x) { return op.show(x); };
    switch (law) {
    case Law::unit:
        return cs.i == 0 ? "unit o1 " + s(cs.a) : s(cs.a) + " o" + std::to_string(cs.i) + " unit";
    case Law::parallel:
        return "A=" + s(cs.a) + " i=" + std::to_string(cs.i) + " B=" + s(cs.b) + " j=" + std::to_string(cs.j) +
               " C=" + s(cs.c);
    case Law::sequential:
        return "A=" + s(cs.a) + " i=" + std::to_string(cs.i) + " B=" + s(cs.b) + " j=" + std::to_string(cs.j) +
               " C=" + s(cs.c);
    case Law::equivariance:
        return "A=" + s(cs.a) + " k=" + std::to_string(cs.i) + " B=" + s(cs.b) + " sigma=" + cs.sigma.to_string() +
               " tau=" + cs.tau.to_string();
    case Law::closure:
        return "A=" + s(cs.a) + " k=" + std::to_string(cs.i) + " B=" + s(cs.b);
    }
    return {};
}

template <class T>
struct Collector {
    const OperadInstance<T>& op;
    LawCounter counter;
    std::size_t max_witnesses;
    const std::function<void(const CaseRecord&)>* on_case;

    void check(std::uint64_t id, const Case<T>& cs) {
        ++counter.checked;
        const bool ok = holds(op, counter.law, cs);
        if (on_case && *on_case)
            (*on_case)({counter.law, id, ok});
        if (ok)
            return;
        ++counter.violated;
        if (counter.witnesses.size() < max_witnesses) {
            OperadInstance<T> copy = op;
            Law law = counter.law;
            counter.witnesses.push_back(
                {law, id, describe(op, law, cs), [copy, law, cs] { return !holds(copy, law, cs); }});
        }
    }
};

template <class T>
void merge_into(LawCounter& into, LawCounter&& from, std::size_t max_witnesses) {
    into.checked += from.checked;
    into.violated += from.violated;
    for (auto& w : from.witnesses)
        into.witnesses.push_back(std::move(w));
    std::sort(into.witnesses.begin(), into.witnesses.end(),
              [](const Witness& x, const Witness& y) { return x.case_id < y.case_id; });
    if (into.witnesses.size() > max_witnesses)
        into.witnesses.resize(max_witnesses);
}

}  // namespace detail

template <class T>
LawReport check_laws(const OperadInstance<T>& op, int arity_bound, const LawOptions& options = {}) {
    if (arity_bound < op.min_arity)
        fail(ErrorKind::precondition, "arity bound below the minimum arity");
    const auto start = std::chrono::steady_clock::now();
    const int inner_bound = options.inner_bound > 0 ? std::min(options.inner_bound, arity_bound) : arity_bound;

    struct Item {
        T value;
        int arity;
    };
    std::vector<Item> outer, inner;
    std::vector<std::vector<T>> by_arity(arity_bound + 1);
    for (int n = op.min_arity; n <= arity_bound; ++n) {
        if (n <= op.enumerate_limit)
            by_arity[n] = op.enumerate(n);
        else if (!options.sampled)
            fail(ErrorKind::resource, op.name + ": exhaustive mode cannot enumerate arity " + std::to_string(n));
        for (const auto& x : by_arity[n]) {
            outer.push_back({x, n});
            if (n <= inner_bound)
                inner.push_back({x, n});
        }
    }

    std::vector<std::vector<Permutation>> perms(arity_bound + 1);
    for (int n = std::max(0, op.min_arity); n <= arity_bound; ++n)
        perms[n] = detail::equivariance_perms(n);
    std::size_t perm_radix = 1;
    for (const auto& p : perms)
        perm_radix = std::max(perm_radix, p.size());

    std::vector<Law> laws;
    for (Law law : kAllLaws) {
        if (law == Law::unit && !op.unit)
            continue;
        if (law == Law::closure && !op.member)
            continue;
        laws.push_back(law);
    }

    const bool sequential_only = static_cast<bool>(options.on_case);
    const int workers = sequential_only ? 1 : std::max(1, options.workers);
    const std::uint64_t E = inner.size() ? inner.size() : 1;
    const std::uint64_t B = arity_bound + 1;

    LawReport report;
    report.operad = op.name;
    report.arity_bound = arity_bound;
    report.inner_bound = inner_bound;
    report.sampled = options.sampled;
    report.samples = options.sampled ? options.samples : 0;
    report.seed = options.sampled ? options.seed : 0;

    // Worker w handles outer indices (or sample indices) congruent to w.
    auto run_exhaustive = [&](Law law, int w, detail::Collector<T>& col) {
        for (std::size_t ai = w; ai < outer.size(); ai += workers) {
            const auto& A = outer[ai];
            const int n = A.arity;
            detail::Case<T> cs;
            cs.a = A.value;
            switch (law) {
            case Law::unit:
                for (int i = 0; i <= n; ++i) {
                    cs.i = i;
                    col.check(ai * B + i, cs);
                }
                break;
            case Law::closure:
                for (int i = 1; i <= n; ++i)
                    for (std::size_t bi = 0; bi < inner.size(); ++bi) {
                        cs.i = i;
                        cs.b = inner[bi].value;
                        col.check((ai * B + i) * E + bi, cs);
                    }
                break;
            case Law::parallel:
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        for (std::size_t bi = 0; bi < inner.size(); ++bi)
                            for (std::size_t ci = 0; ci < inner.size(); ++ci) {
                                cs.i = i;
                                cs.j = j;
                                cs.b = inner[bi].value;
                                cs.c = inner[ci].value;
                                col.check((((ai * B + i) * B + j) * E + bi) * E + ci, cs);
                            }
                break;
            case Law::sequential:
                for (int i = 1; i <= n; ++i)
                    for (std::size_t bi = 0; bi < inner.size(); ++bi)
                        for (int j = 1; j <= inner[bi].arity; ++j)
                            for (std::size_t ci = 0; ci < inner.size(); ++ci) {
                                cs.i = i;
                                cs.j = j;
                                cs.b = inner[bi].value;
                                cs.c = inner[ci].value;
                                col.check((((ai * B + i) * E + bi) * B + j) * E + ci, cs);
                            }
                break;
            case Law::equivariance:
                for (int i = 1; i <= n; ++i)
                    for (std::size_t bi = 0; bi < inner.size(); ++bi) {
                        const auto& ps = perms[n];
                        const auto& ts = perms[inner[bi].arity];
                        for (std::size_t si = 0; si < ps.size(); ++si)
                            for (std::size_t ti = 0; ti < ts.size(); ++ti) {
                                cs.i = i;
                                cs.b = inner[bi].value;
                                cs.sigma = ps[si];
                                cs.tau = ts[ti];
                                col.check((((ai * B + i) * E + bi) * perm_radix + si) * perm_radix + ti, cs);
                            }
                    }
                break;
            }
        }
    };

    auto draw = [&](std::mt19937_64& rng, int lo, int hi) {
        lo = std::max(lo, op.min_arity);
        int n = std::uniform_int_distribution<int>(lo, hi)(rng);
        if (!by_arity[n].empty())
            return by_arity[n][std::uniform_int_distribution<std::size_t>(0, by_arity[n].size() - 1)(rng)];
        if (!op.sample)
            fail(ErrorKind::precondition, "no sampler for arity " + std::to_string(n));
        return op.sample(n, rng);
    };

    auto run_sampled = [&](Law law, int w, detail::Collector<T>& col) {
        for (std::uint64_t s = w; s < options.samples; s += workers) {
            std::mt19937_64 rng(detail::mix_seed(options.seed, static_cast<std::uint64_t>(law), s));
            detail::Case<T> cs;
            const int lo_outer = law == Law::parallel ? 2 : 1;
            if (lo_outer > arity_bound)
                return;
            cs.a = draw(rng, lo_outer, arity_bound);
            const int n = op.arity(cs.a);
            auto slot = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
            switch (law) {
            case Law::unit:
                cs.i = slot(0, n);
                break;
            case Law::closure:
                cs.i = slot(1, n);
                cs.b = draw(rng, op.min_arity, inner_bound);
                break;
            case Law::parallel:
                cs.i = slot(1, n - 1);
                cs.j = slot(cs.i + 1, n);
                cs.b = draw(rng, op.min_arity, inner_bound);
                cs.c = draw(rng, op.min_arity, inner_bound);
                break;
            case Law::sequential:
                cs.i = slot(1, n);
                cs.b = draw(rng, std::max(1, op.min_arity), inner_bound);
                cs.j = slot(1, op.arity(cs.b));
                cs.c = draw(rng, op.min_arity, inner_bound);
                break;
            case Law::equivariance: {
                cs.i = slot(1, n);
                cs.b = draw(rng, op.min_arity, inner_bound);
                const auto& ps = perms[n];
                const auto& ts = perms[op.arity(cs.b)];
                cs.sigma = ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)];
                cs.tau = ts[std::uniform_int_distribution<std::size_t>(0, ts.size() - 1)(rng)];
                break;
            }
            }
            col.check(s, cs);
        }
    };

    for (Law law : laws) {
        LawCounter total{law};
        std::vector<detail::Collector<T>> cols;
        for (int w = 0; w < workers; ++w)
            cols.push_back({op, LawCounter{law}, options.max_witnesses, &options.on_case});
        auto body = [&](int w) {
            if (options.sampled)
                run_sampled(law, w, cols[w]);
            else
                run_exhaustive(law, w, cols[w]);
        };
        if (workers == 1) {
            body(0);
        } else {
            std::vector<std::exception_ptr> errors(workers);
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    try {
                        body(w);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            for (auto& t : pool)
                t.join();
            for (auto& e : errors)
                if (e)
                    std::rethrow_exception(e);
        }
        for (auto& c : cols)
            detail::merge_into<T>(total, std::move(c.counter), options.max_witnesses);
        report.laws.push_back(std::move(total));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace polyop
