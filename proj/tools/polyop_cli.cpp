#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyop/polyop.h"

namespace {

enum Exit { ok = 0, failure = 1, resource = 2, violation = 3 };

struct Failure {
    int code;
    std::string message;
};

int exit_code(po_status s) { return s == PO_ERR_RESOURCE ? resource : failure; }

void check(po_status s) {
    if (s != PO_OK)
        throw Failure{exit_code(s), std::string(po_status_name(s)) + ": " + po_last_error()};
}

struct FamilyDeleter {
    void operator()(po_family* f) const { po_family_free(f); }
};
struct PairDeleter {
    void operator()(po_pair* p) const { po_pair_free(p); }
};
struct ReportDeleter {
    void operator()(po_law_report* r) const { po_law_report_free(r); }
};
using FamilyPtr = std::unique_ptr<po_family, FamilyDeleter>;
using PairPtr = std::unique_ptr<po_pair, PairDeleter>;
using ReportPtr = std::unique_ptr<po_law_report, ReportDeleter>;

std::string take(char* s) {
    std::string out(s);
    po_string_free(s);
    return out;
}

bool looks_named(const std::string& arg) { return arg == "pt" || arg.find(':') != std::string::npos; }

std::string read_input(const std::string& arg) {
    std::ostringstream os;
    if (arg == "-") {
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(arg, std::ios::binary);
    if (!in)
        throw Failure{failure, "cannot read " + arg};
    os << in.rdbuf();
    return os.str();
}

bool file_exists(const std::string& arg) { return std::ifstream(arg).good(); }

FamilyPtr load_family(const std::string& arg) {
    po_family* f = nullptr;
    if (looks_named(arg) && !file_exists(arg))
        check(po_family_named(arg.c_str(), &f));
    else
        check(po_family_parse(read_input(arg).c_str(), &f));
    return FamilyPtr(f);
}

bool is_pair_text(const std::string& text) {
    auto i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{')
        return text.find("\"total\"") != std::string::npos;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line == "---")
            return true;
    }
    return false;
}

PairPtr load_pair(const std::string& arg) {
    po_pair* p = nullptr;
    check(po_pair_parse(read_input(arg).c_str(), &p));
    return PairPtr(p);
}

std::string family_out(const po_family* f, bool json) {
    char* s = nullptr;
    check(json ? po_family_to_json(f, &s) : po_family_to_text(f, &s));
    return take(s);
}

std::string pair_out(const po_pair* p, bool json) {
    char* s = nullptr;
    check(json ? po_pair_to_json(p, &s) : po_pair_to_text(p, &s));
    return take(s);
}

nlohmann::json masks_json(const po_family* f) {
    std::vector<uint32_t> masks(po_family_size(f));
    po_family_masks(f, masks.data(), masks.size());
    nlohmann::json sets = nlohmann::json::array();
    for (uint32_t m : masks) {
        std::vector<int> v;
        for (int i = 1; i <= 32; ++i)
            if (m >> (i - 1) & 1u)
                v.push_back(i);
        sets.push_back(v);
    }
    return sets;
}

std::vector<int> parse_j(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    for (std::string part; std::getline(in, part, ',');) {
        char* end = nullptr;
        long v = std::strtol(part.c_str(), &end, 10);
        if (part.empty() || *end != '\0')
            throw Failure{failure, "parse error: bad --j entry '" + part + "'"};
        out.push_back(static_cast<int>(v));
    }
    return out;
}

po_variant variant_of(const std::string& v) { return v == "comp" ? PO_COMP : PO_SUBST; }

void apply_env_cap() {
    const char* env = std::getenv("POLYOP_AMBIENT_CAP");
    if (!env || !*env)
        return;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0')
        throw Failure{failure, "POLYOP_AMBIENT_CAP is not an integer"};
    check(po_set_ambient_cap(static_cast<int>(v)));
}

struct RecordSink {
    std::ostream* out;
};

void print_record(const char* law, uint64_t id, int ok, void* user) {
    *static_cast<RecordSink*>(user)->out << law << '\t' << id << '\t' << (ok ? "ok" : "violation") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operads of simplicial complexes and hypergraphs"};
    app.require_subcommand(1);

    bool json = false;

    std::string op = "subst", left, right;
    int slot = 1;
    bool hypergraph = false;
    auto* compose = app.add_subcommand("compose", "Compose two complexes, families or pairs");
    compose->add_option("--op", op, "subst, comp, join, pair or action")
        ->check(CLI::IsMember({"subst", "comp", "join", "pair", "action"}));
    compose->add_option("--slot", slot, "Slot of the left operand")->check(CLI::PositiveNumber);
    compose->add_flag("--hypergraph", hypergraph, "Elementwise composition of arbitrary families");
    compose->add_option("left", left, "File, '-' or shorthand")->required();
    compose->add_option("right", right, "File, '-' or shorthand")->required();
    compose->add_flag("--json", json, "JSON output");

    std::string input;
    bool minimal = false;
    auto* facets = app.add_subcommand("facets", "Maximal (or minimal) members of a family");
    facets->add_option("input", input)->required();
    facets->add_flag("--minimal", minimal, "Minimal members instead");
    facets->add_flag("--json", json, "JSON output");

    auto* analyze = app.add_subcommand("analyze", "Classification, dimension, minimal non-faces, Euler characteristic");
    analyze->add_option("input", input)->required();
    analyze->add_flag("--json", json, "JSON output");

    std::string operad;
    int max_arity = 0, workers = 1, inner_bound = 0;
    uint64_t seed = 1, samples = 0;
    bool records = false, list = false;
    auto* laws = app.add_subcommand("laws", "Check the operad axioms on a registered operad");
    laws->add_option("--operad", operad, "Registered operad name");
    laws->add_option("--max-arity", max_arity, "Arity bound (default per operad)");
    laws->add_option("--inner-bound", inner_bound, "Arity bound for inner operands");
    laws->add_option("--workers", workers)->check(CLI::PositiveNumber);
    laws->add_option("--samples", samples, "Sampled mode with this many cases per law");
    laws->add_option("--seed", seed, "Seed for sampled mode");
    laws->add_flag("--records", records, "Print one line per case: law, case id, status");
    laws->add_flag("--list", list, "List registered operads");
    laws->add_flag("--json", json, "JSON output");

    std::string variant = "subst";
    auto* decompose = app.add_subcommand("decompose", "Search for a nontrivial factorization");
    decompose->add_option("--variant", variant)->check(CLI::IsMember({"subst", "comp"}));
    decompose->add_option("--workers", workers)->check(CLI::PositiveNumber);
    decompose->add_option("input", input)->required();
    decompose->add_flag("--json", json, "JSON output");

    std::string jspec;
    bool with_pl = false;
    auto* jconstruct = app.add_subcommand("jconstruct", "Iterated wedges at every vertex");
    jconstruct->add_option("--j", jspec, "Comma separated multiplicities, one per vertex")->required();
    jconstruct->add_option("input", input)->required();
    jconstruct->add_flag("--pl", with_pl, "Append the PL verdict and certificate");
    jconstruct->add_flag("--json", json, "JSON output");

    auto* pl = app.add_subcommand("pl", "PL sphere/ball verdict and certificate");
    pl->add_option("input", input)->required();

    std::string to;
    auto* convert = app.add_subcommand("convert", "Convert between the text and JSON formats");
    convert->add_option("--to", to, "text or json (default: the other format)")->check(CLI::IsMember({"text", "json"}));
    convert->add_option("input", input)->required();

    int n = 0;
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "All complexes on [n], n <= 5");
    enumerate->add_option("n", n)->required();
    enumerate->add_flag("--count", count_only, "Print only the number of complexes");
    enumerate->add_flag("--json", json, "One JSON document per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return failure;
    }

    try {
        apply_env_cap();
        std::ostream& out = std::cout;

        if (*compose) {
            if (op == "pair") {
                auto p = load_pair(left), q = load_pair(right);
                po_pair* r = nullptr;
                check(po_pair_compose(p.get(), slot, q.get(), &r));
                PairPtr rp(r);
                out << pair_out(rp.get(), json);
                return ok;
            }
            auto a = load_family(left);
            po_family* r = nullptr;
            if (op == "action") {
                auto q = load_pair(right);
                check(po_action(a.get(), slot, q.get(), &r));
            } else {
                auto b = load_family(right);
                if (op == "join")
                    check(po_join(a.get(), b.get(), &r));
                else if (hypergraph)
                    check(po_hypergraph_compose(a.get(), slot, b.get(), variant_of(op), &r));
                else
                    check(po_compose(a.get(), slot, b.get(), variant_of(op), &r));
            }
            FamilyPtr rf(r);
            out << family_out(rf.get(), json);
            return ok;
        }

        if (*facets) {
            auto f = load_family(input);
            po_family* r = nullptr;
            check(po_extremals(f.get(), minimal, &r));
            FamilyPtr rf(r);
            out << family_out(rf.get(), json);
            return ok;
        }

        if (*analyze) {
            auto f = load_family(input);
            po_analysis a{};
            check(po_analyze(f.get(), &a));
            po_family* m = nullptr;
            check(po_min_non_faces(f.get(), &m));
            FamilyPtr mnf(m);
            if (json) {
                nlohmann::json j{{"n", po_family_ambient(f.get())},
                                 {"sets", po_family_size(f.get())},
                                 {"simplicial", bool(a.simplicial)},
                                 {"upward", bool(a.upward)},
                                 {"transversal", bool(a.transversal)},
                                 {"reduced", bool(a.reduced)},
                                 {"min_non_faces", masks_json(mnf.get())}};
                if (a.simplicial) {
                    j["dimension"] = a.has_dim ? nlohmann::json(a.dim) : nlohmann::json(nullptr);
                    if (a.has_dim) {
                        j["pure"] = bool(a.pure);
                        j["euler"] = a.euler;
                    }
                }
                out << j.dump() << '\n';
                return ok;
            }
            auto yn = [](int v) { return v ? "yes" : "no"; };
            out << "n " << po_family_ambient(f.get()) << '\n';
            out << "sets " << po_family_size(f.get()) << '\n';
            out << "simplicial " << yn(a.simplicial) << '\n';
            out << "upward " << yn(a.upward) << '\n';
            out << "transversal " << yn(a.transversal) << '\n';
            out << "reduced " << yn(a.reduced) << '\n';
            if (a.simplicial) {
                if (a.has_dim) {
                    out << "dimension " << a.dim << '\n';
                    out << "pure " << yn(a.pure) << '\n';
                    out << "euler " << a.euler << '\n';
                } else {
                    out << "dimension none (void complex)\n";
                }
            }
            out << "minimal non-faces\n" << family_out(mnf.get(), false);
            return ok;
        }

        if (*laws) {
            if (list) {
                for (size_t i = 0; i < po_operad_count(); ++i)
                    out << po_operad_name(i) << '\t' << po_operad_default_bound(i) << '\t'
                        << po_operad_description(i) << '\n';
                return ok;
            }
            if (operad.empty())
                throw Failure{failure, "laws needs --operad (see --list)"};
            int bound = max_arity;
            if (bound <= 0) {
                for (size_t i = 0; i < po_operad_count(); ++i)
                    if (operad == po_operad_name(i))
                        bound = po_operad_default_bound(i);
            }
            po_law_options o;
            po_law_options_init(&o);
            o.workers = workers;
            o.seed = seed;
            o.inner_bound = inner_bound;
            if (samples > 0) {
                o.sampled = 1;
                o.samples = samples;
            }
            RecordSink sink{&out};
            if (records) {
                o.on_record = print_record;
                o.user = &sink;
            }
            po_law_report* r = nullptr;
            check(po_laws_run(operad.c_str(), bound, &o, &r));
            ReportPtr report(r);
            const uint64_t v = po_law_report_violations(report.get());
            if (json) {
                out << nlohmann::json{{"operad", operad},
                                      {"arity_bound", bound},
                                      {"checked", po_law_report_checked(report.get())},
                                      {"violations", v}}
                           .dump()
                    << '\n';
            } else {
                char* s = nullptr;
                check(po_law_report_summary(report.get(), &s));
                out << take(s);
            }
            return v ? violation : ok;
        }

        if (*decompose) {
            auto f = load_family(input);
            int found = 0, k = 0;
            po_family *outer = nullptr, *inner = nullptr;
            check(po_decompose(f.get(), variant_of(variant), workers, &found, &outer, &k, &inner));
            FamilyPtr o(outer), i(inner);
            if (json) {
                nlohmann::json j{{"decomposable", bool(found)}};
                if (found) {
                    j["outer"] = nlohmann::json::parse(family_out(o.get(), true));
                    j["slot"] = k;
                    j["inner"] = nlohmann::json::parse(family_out(i.get(), true));
                }
                out << j.dump() << '\n';
            } else if (!found) {
                out << "indecomposable\n";
            } else {
                out << "decomposable\nslot " << k << "\nouter\n"
                    << family_out(o.get(), false) << "inner\n"
                    << family_out(i.get(), false);
            }
            return ok;
        }

        if (*jconstruct) {
            auto f = load_family(input);
            auto js = parse_j(jspec);
            po_family* r = nullptr;
            check(po_jconstruct(f.get(), js.data(), js.size(), &r));
            FamilyPtr rf(r);
            out << family_out(rf.get(), json);
            if (with_pl) {
                char* s = nullptr;
                check(po_pl_describe(rf.get(), &s));
                out << take(s);
            }
            return ok;
        }

        if (*pl) {
            auto f = load_family(input);
            char* s = nullptr;
            check(po_pl_describe(f.get(), &s));
            out << take(s);
            return ok;
        }

        if (*convert) {
            const bool named = looks_named(input) && !file_exists(input);
            const std::string text = named ? std::string() : read_input(input);
            const bool input_json = !named && text.find_first_not_of(" \t\r\n") != std::string::npos &&
                                    text[text.find_first_not_of(" \t\r\n")] == '{';
            const bool want_json = to.empty() ? !input_json : to == "json";
            if (!named && is_pair_text(text)) {
                po_pair* p = nullptr;
                check(po_pair_parse(text.c_str(), &p));
                PairPtr pp(p);
                out << pair_out(pp.get(), want_json);
                return ok;
            }
            FamilyPtr f;
            if (named) {
                f = load_family(input);
            } else {
                po_family* raw = nullptr;
                check(po_family_parse(text.c_str(), &raw));
                f.reset(raw);
            }
            out << family_out(f.get(), want_json);
            return ok;
        }

        if (*enumerate) {
            size_t count = 0;
            check(po_enumerate_count(n, &count));
            if (count_only) {
                out << count << '\n';
                return ok;
            }
            for (size_t i = 0; i < count; ++i) {
                po_family* f = nullptr;
                check(po_enumerate_get(n, i, &f));
                FamilyPtr fp(f);
                if (!json && i)
                    out << '\n';
                out << family_out(fp.get(), json);
            }
            return ok;
        }
    } catch (const Failure& e) {
        std::cout.flush();
        std::cerr << "polyop: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "polyop: " << e.what() << '\n';
        return failure;
    }
    return failure;
}
