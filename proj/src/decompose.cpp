#include "polyop/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "polyop/enumerate.hpp"
#include "polyop/error.hpp"
#include "polyop/families.hpp"
#include "polyop/scpx.hpp"

namespace polyop {

namespace {

struct Search {
    const Complex& x;
    Variant variant;
    int n;
    Complex unit;

    bool usable(const Complex& c) const { return !c.empty() && c != unit; }

    std::optional<Decomposition> try_inner(const Complex& outer, int k, const Complex& inner) const {
        if (!usable(inner))
            return std::nullopt;
        if (compose(outer, k, inner, variant) == x)
            return Decomposition{outer, k, inner};
        return std::nullopt;
    }

    // Smallest nonempty non-unit complex on [q] in canonical order.
    Complex filler(int q) const {
        Complex t = named::trivial(q);
        return t == unit ? named::point() : t;
    }

    std::optional<Decomposition> run(int p, int k) const {
        const int q = n - p + 1;
        const Mask block = bits::full(q) << (k - 1);

        // Faces of x avoiding the block are the deletion of k in the outer factor.
        std::vector<Mask> del, inner_faces;
        for (Mask s : x) {
            if ((s & block) == 0)
                del.push_back((s & bits::full(k - 1)) | ((s >> (k - 1 + q)) << (k - 1)));
            if ((s & ~block) == 0)
                inner_faces.push_back(s >> (k - 1));
        }
        const Family deletion(p - 1, std::move(del));
        if (!is_downward_closed(deletion))
            return std::nullopt;
        const Complex from_block = trust_complex(Family(q, std::move(inner_faces)));

        auto lift = [k](Mask s) { return (s & bits::full(k - 1)) | ((s >> (k - 1)) << k); };
        std::vector<Complex> candidates;
        for (const auto& link : enumerate_complexes(p - 1)) {
            if (!std::all_of(link.begin(), link.end(), [&](Mask s) { return deletion.contains(s); }))
                continue;
            std::vector<Mask> faces;
            for (Mask s : deletion)
                faces.push_back(lift(s));
            for (Mask s : link)
                faces.push_back(lift(s) | bits::single(k));
            candidates.push_back(trust_complex(Family(p, std::move(faces))));
        }
        std::sort(candidates.begin(), candidates.end());

        for (const auto& outer : candidates) {
            if (!usable(outer))
                continue;
            const bool vertex = outer.contains(bits::single(k));
            std::optional<Decomposition> hit;
            if (variant == Variant::subst) {
                hit = vertex ? try_inner(outer, k, from_block) : try_inner(outer, k, filler(q));
            } else if (!vertex) {
                hit = try_inner(outer, k, from_block);
            } else if (std::all_of(outer.begin(), outer.end(),
                                   [&](Mask s) { return outer.contains(s | bits::single(k)); })) {
                hit = try_inner(outer, k, filler(q));
            } else {
                for (const auto& inner : enumerate_complexes(q))
                    if ((hit = try_inner(outer, k, inner)))
                        break;
            }
            if (hit)
                return hit;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<Decomposition> decompose(const Complex& x, Variant variant, const DecomposeOptions& options) {
    if (options.bound > kDecomposeLimit)
        fail(ErrorKind::resource, "decomposition search bound is at most " + std::to_string(kDecomposeLimit));
    const int n = x.ambient();
    if (n > options.bound)
        fail(ErrorKind::resource, "ambient " + std::to_string(n) + " exceeds the search bound " +
                                      std::to_string(options.bound));
    if (n == 0)
        return std::nullopt;
    if (x.empty())
        return Decomposition{named::empty(1), 1, named::empty(n)};

    Search search{x, variant, n, unit_of(variant)};
    std::vector<std::pair<int, int>> tasks;
    for (int p = 1; p <= n; ++p)
        for (int k = 1; k <= p; ++k)
            tasks.emplace_back(p, k);

    const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(tasks.size())));
    if (workers == 1) {
        for (auto [p, k] : tasks)
            if (auto hit = search.run(p, k))
                return hit;
        return std::nullopt;
    }

    std::vector<std::optional<Decomposition>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++)
                results[i] = search.run(tasks[i].first, tasks[i].second);
        });
    for (auto& t : pool)
        t.join();
    for (auto& r : results)
        if (r)
            return r;
    return std::nullopt;
}

}  // namespace polyop
