#include "polyop/laws.hpp"

#include <sstream>

namespace polyop {

const char* law_name(Law law) {
    switch (law) {
    case Law::unit:
        return "unit";
    case Law::parallel:
        return "parallel";
    case Law::sequential:
        return "sequential";
    case Law::equivariance:
        return "equivariance";
    case Law::closure:
        return "closure";
    }
    return "?";
}

std::uint64_t LawReport::total_checked() const {
    std::uint64_t t = 0;
    for (const auto& l : laws)
        t += l.checked;
    return t;
}

std::uint64_t LawReport::total_violations() const {
    std::uint64_t t = 0;
    for (const auto& l : laws)
        t += l.violated;
    return t;
}

const LawCounter* LawReport::find(Law law) const {
    for (const auto& l : laws)
        if (l.law == law)
            return &l;
    return nullptr;
}

bool LawReport::same_results(const LawReport& o) const {
    if (operad != o.operad || arity_bound != o.arity_bound || inner_bound != o.inner_bound || sampled != o.sampled ||
        samples != o.samples || seed != o.seed || laws.size() != o.laws.size())
        return false;
    for (std::size_t i = 0; i < laws.size(); ++i) {
        const auto &x = laws[i], &y = o.laws[i];
        if (x.law != y.law || x.checked != y.checked || x.violated != y.violated ||
            x.witnesses.size() != y.witnesses.size())
            return false;
        for (std::size_t w = 0; w < x.witnesses.size(); ++w)
            if (x.witnesses[w].case_id != y.witnesses[w].case_id ||
                x.witnesses[w].description != y.witnesses[w].description)
                return false;
    }
    return true;
}

std::string LawReport::summary() const {
    std::ostringstream os;
    os << "operad " << operad << "\n";
    os << "mode " << (sampled ? "sampled" : "exhaustive") << ", arity bound " << arity_bound << ", inner bound "
       << inner_bound;
    if (sampled)
        os << ", samples " << samples << ", seed " << seed;
    os << "\n";
    for (const auto& l : laws) {
        os << law_name(l.law) << ": checked " << l.checked << ", violations " << l.violated << "\n";
        for (const auto& w : l.witnesses)
            os << "  case " << w.case_id << ": " << w.description << "\n";
    }
    os << "checked " << total_checked() << " cases\n";
    os << total_violations() << " violations\n";
    return os.str();
}

std::string format_record(const CaseRecord& r) {
    return std::string(law_name(r.law)) + "\t" + std::to_string(r.case_id) + "\t" + (r.ok ? "ok" : "violation");
}

namespace detail {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t law, std::uint64_t index) {
    auto splitmix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    return splitmix(splitmix(splitmix(seed) ^ law) ^ index);
}

std::vector<Permutation> equivariance_perms(int n) {
    if (n <= 3)
        return Permutation::all(n);
    std::vector<int> rev(n), cyc(n);
    for (int i = 0; i < n; ++i) {
        rev[i] = n - i;
        cyc[i] = (i + 1) % n + 1;
    }
    return {Permutation::identity(n), Permutation::transposition(n, 1, 2), Permutation::transposition(n, n - 1, n),
            Permutation(rev), Permutation(cyc)};
}

}  // namespace detail

}  // namespace polyop
