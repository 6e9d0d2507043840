#include "polyop/polyop.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <string_view>

#include "polyop/decompose.hpp"
#include "polyop/enumerate.hpp"
#include "polyop/families.hpp"
#include "polyop/format.hpp"
#include "polyop/instances.hpp"
#include "polyop/pl.hpp"
#include "polyop/relscpx.hpp"
#include "polyop/scpx.hpp"

using namespace polyop;

struct po_family {
    Family family;
    std::optional<PLCertificate> certificate;
};

struct po_pair {
    RelativePair pair;
};

struct po_law_report {
    LawReport report;
};

namespace {

thread_local std::string last_error;

po_status status_of(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::domain:
        return PO_ERR_DOMAIN;
    case ErrorKind::precondition:
        return PO_ERR_PRECONDITION;
    case ErrorKind::resource:
        return PO_ERR_RESOURCE;
    case ErrorKind::unsupported:
        return PO_ERR_UNSUPPORTED;
    case ErrorKind::internal:
        return PO_ERR_INTERNAL;
    case ErrorKind::parse:
        return PO_ERR_PARSE;
    }
    return PO_ERR_INTERNAL;
}

template <class F>
po_status guard(F&& body) {
    try {
        body();
        last_error.clear();
        return PO_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PO_ERR_RESOURCE;
    } catch (const std::exception& e) {
        last_error = e.what();
        return PO_ERR_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p)
        fail(ErrorKind::precondition, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

Complex as_complex(const po_family* f, const char* what) {
    need(f, what);
    if (!is_downward_closed(f->family))
        fail(ErrorKind::domain, std::string(what) + " is not a simplicial complex");
    return trust_complex(f->family);
}

po_family* wrap(Family f, std::optional<PLCertificate> cert = std::nullopt) {
    return new po_family{std::move(f), std::move(cert)};
}

int parse_int(std::string_view s, const std::string& spec) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        fail(ErrorKind::parse, "bad number in shorthand '" + spec + "'");
    return v;
}

po_family* named_family(const std::string& spec) {
    if (spec == "pt") {
        auto c = certify_simplex(1);
        return wrap(c.complex.faces(), c.certificate);
    }
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        fail(ErrorKind::parse, "unknown shorthand '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string_view args = std::string_view(spec).substr(colon + 1);
    if (kind == "pure") {
        const auto comma = args.find(',');
        if (comma == std::string_view::npos)
            fail(ErrorKind::parse, "pure needs n,k");
        const int n = parse_int(args.substr(0, comma), spec);
        const int k = parse_int(args.substr(comma + 1), spec);
        if (n < 0 || k < 0 || k > n)
            fail(ErrorKind::domain, "pure:n,k needs 0 <= k <= n");
        check_ambient(n);
        return wrap(named::complete_pure(n, k).faces());
    }
    const int n = parse_int(args, spec);
    if (n < 0)
        fail(ErrorKind::domain, "negative ambient in '" + spec + "'");
    check_ambient(n);
    if (kind == "simplex") {
        auto c = certify_simplex(n);
        return wrap(c.complex.faces(), c.certificate);
    }
    if (kind == "bd") {
        if (n < 1)
            fail(ErrorKind::domain, "bd:n needs n >= 1");
        auto c = certify_boundary(n);
        return wrap(c.complex.faces(), c.certificate);
    }
    if (kind == "discrete")
        return wrap(named::discrete(n).faces());
    if (kind == "trivial")
        return wrap(named::trivial(n).faces());
    if (kind == "empty")
        return wrap(named::empty(n).faces());
    fail(ErrorKind::parse, "unknown shorthand '" + spec + "'");
}

}  // namespace

extern "C" {

const char* po_last_error(void) { return last_error.c_str(); }

const char* po_status_name(po_status status) {
    switch (status) {
    case PO_OK:
        return "ok";
    case PO_ERR_DOMAIN:
        return "domain error";
    case PO_ERR_PRECONDITION:
        return "precondition error";
    case PO_ERR_RESOURCE:
        return "resource error";
    case PO_ERR_UNSUPPORTED:
        return "unsupported";
    case PO_ERR_INTERNAL:
        return "internal error";
    case PO_ERR_PARSE:
        return "parse error";
    case PO_ERR_ARGUMENT:
        return "invalid argument";
    }
    return "unknown status";
}

void po_string_free(char* s) { std::free(s); }

int po_ambient_cap(void) { return ambient_cap(); }

po_status po_set_ambient_cap(int cap) {
    return guard([&] { set_ambient_cap(cap); });
}

po_status po_family_parse(const char* text, po_family** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = wrap(parse_family(text));
    });
}

po_status po_family_named(const char* spec, po_family** out) {
    return guard([&] {
        need(spec, "spec");
        need(out, "out");
        *out = named_family(spec);
    });
}

po_status po_family_from_masks(int ambient, const uint32_t* masks, size_t count, po_family** out) {
    return guard([&] {
        need(out, "out");
        if (count)
            need(masks, "masks");
        *out = wrap(Family(ambient, std::vector<Mask>(masks, masks + count)));
    });
}

po_family* po_family_clone(const po_family* f) { return f ? new po_family(*f) : nullptr; }

void po_family_free(po_family* f) { delete f; }

int po_family_ambient(const po_family* f) { return f ? f->family.ambient() : 0; }

size_t po_family_size(const po_family* f) { return f ? f->family.size() : 0; }

size_t po_family_masks(const po_family* f, uint32_t* masks, size_t cap) {
    if (!f)
        return 0;
    const auto& sets = f->family.sets();
    for (size_t i = 0; i < sets.size() && i < cap && masks; ++i)
        masks[i] = sets[i];
    return sets.size();
}

int po_family_equal(const po_family* a, const po_family* b) { return a && b && a->family == b->family; }

int po_family_is_complex(const po_family* f) { return f && is_downward_closed(f->family); }

po_status po_family_to_text(const po_family* f, char** out) {
    return guard([&] {
        need(f, "family");
        need(out, "out");
        *out = dup_string(to_text(f->family));
    });
}

po_status po_family_to_json(const po_family* f, char** out) {
    return guard([&] {
        need(f, "family");
        need(out, "out");
        *out = dup_string(to_json(f->family));
    });
}

po_status po_pair_parse(const char* text, po_pair** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = new po_pair{parse_pair(text)};
    });
}

po_status po_pair_make(const po_family* total, const po_family* sub, po_pair** out) {
    return guard([&] {
        need(out, "out");
        *out = new po_pair{RelativePair(as_complex(total, "total"), as_complex(sub, "sub"))};
    });
}

void po_pair_free(po_pair* p) { delete p; }

po_family* po_pair_total(const po_pair* p) { return p ? wrap(p->pair.total.faces()) : nullptr; }

po_family* po_pair_sub(const po_pair* p) { return p ? wrap(p->pair.sub.faces()) : nullptr; }

po_status po_pair_to_text(const po_pair* p, char** out) {
    return guard([&] {
        need(p, "pair");
        need(out, "out");
        *out = dup_string(to_text(p->pair));
    });
}

po_status po_pair_to_json(const po_pair* p, char** out) {
    return guard([&] {
        need(p, "pair");
        need(out, "out");
        *out = dup_string(to_json(p->pair));
    });
}

po_status po_compose(const po_family* a, int k, const po_family* b, po_variant variant, po_family** out) {
    return guard([&] {
        need(out, "out");
        const Complex x = as_complex(a, "left operand"), y = as_complex(b, "right operand");
        *out = wrap(compose(x, k, y, variant == PO_COMP ? Variant::comp : Variant::subst).faces());
    });
}

po_status po_hypergraph_compose(const po_family* a, int k, const po_family* b, po_variant variant,
                                po_family** out) {
    return guard([&] {
        need(a, "left operand");
        need(b, "right operand");
        need(out, "out");
        *out = wrap(hypergraph_compose(a->family, k, b->family, variant == PO_COMP ? Variant::comp : Variant::subst));
    });
}

po_status po_join(const po_family* a, const po_family* b, po_family** out) {
    return guard([&] {
        need(out, "out");
        const Complex x = as_complex(a, "left operand"), y = as_complex(b, "right operand");
        if (a->certificate && b->certificate) {
            auto c = certified_join({x, *a->certificate}, {y, *b->certificate});
            *out = wrap(c.complex.faces(), c.certificate);
        } else {
            *out = wrap(join(x, y).faces());
        }
    });
}

po_status po_action(const po_family* a, int k, const po_pair* pair, po_family** out) {
    return guard([&] {
        need(pair, "pair");
        need(out, "out");
        *out = wrap(right_action(as_complex(a, "complex"), k, pair->pair).faces());
    });
}

po_status po_pair_compose(const po_pair* p, int k, const po_pair* q, po_pair** out) {
    return guard([&] {
        need(p, "left pair");
        need(q, "right pair");
        need(out, "out");
        *out = new po_pair{join_compose(p->pair, k, q->pair)};
    });
}

po_status po_extremals(const po_family* f, int minimal, po_family** out) {
    return guard([&] {
        need(f, "family");
        need(out, "out");
        *out = wrap(extremals(f->family, minimal ? ExtremalMode::minimal : ExtremalMode::maximal));
    });
}

po_status po_min_non_faces(const po_family* f, po_family** out) {
    return guard([&] {
        need(f, "family");
        need(out, "out");
        *out = wrap(non_faces(f->family, NonFaceMode::mnf));
    });
}

po_status po_analyze(const po_family* f, po_analysis* out) {
    return guard([&] {
        need(f, "family");
        need(out, "out");
        *out = po_analysis{};
        const Classification c = classify(f->family);
        out->simplicial = c.simplicial;
        out->upward = c.upward;
        out->transversal = c.transversal;
        out->reduced = c.reduced;
        if (!c.simplicial)
            return;
        const Complex k = trust_complex(f->family);
        if (auto d = dimension(k)) {
            out->has_dim = 1;
            out->dim = *d;
            out->pure = is_pure(k);
            out->has_euler = 1;
            out->euler = euler_characteristic(k);
        }
    });
}

void po_law_options_init(po_law_options* o) {
    if (!o)
        return;
    const LawOptions d;
    *o = po_law_options{};
    o->workers = d.workers;
    o->samples = d.samples;
    o->seed = d.seed;
}

size_t po_operad_count(void) { return registered_operads().size(); }

const char* po_operad_name(size_t i) {
    const auto& ops = registered_operads();
    return i < ops.size() ? ops[i].name.c_str() : nullptr;
}

const char* po_operad_description(size_t i) {
    const auto& ops = registered_operads();
    return i < ops.size() ? ops[i].description.c_str() : nullptr;
}

int po_operad_default_bound(size_t i) {
    const auto& ops = registered_operads();
    return i < ops.size() ? ops[i].default_bound : 0;
}

po_status po_laws_run(const char* operad, int arity_bound, const po_law_options* options, po_law_report** out) {
    return guard([&] {
        need(operad, "operad");
        need(out, "out");
        LawOptions o;
        if (options) {
            o.workers = options->workers;
            o.sampled = options->sampled != 0;
            o.samples = options->samples;
            o.seed = options->seed;
            o.inner_bound = options->inner_bound;
            if (options->on_record) {
                auto fn = options->on_record;
                void* user = options->user;
                o.on_case = [fn, user](const CaseRecord& r) { fn(law_name(r.law), r.case_id, r.ok, user); };
            }
        }
        *out = new po_law_report{run_registered(operad, arity_bound, o)};
    });
}

uint64_t po_law_report_checked(const po_law_report* r) { return r ? r->report.total_checked() : 0; }

uint64_t po_law_report_violations(const po_law_report* r) { return r ? r->report.total_violations() : 0; }

double po_law_report_seconds(const po_law_report* r) { return r ? r->report.seconds : 0; }

po_status po_law_report_summary(const po_law_report* r, char** out) {
    return guard([&] {
        need(r, "report");
        need(out, "out");
        *out = dup_string(r->report.summary());
    });
}

void po_law_report_free(po_law_report* r) { delete r; }

po_status po_decompose(const po_family* x, po_variant variant, int workers, int* found, po_family** outer,
                       int* slot, po_family** inner) {
    return guard([&] {
        need(found, "found");
        const Complex k = as_complex(x, "complex");
        DecomposeOptions o;
        o.workers = workers < 1 ? 1 : workers;
        auto d = decompose(k, variant == PO_COMP ? Variant::comp : Variant::subst, o);
        *found = d.has_value();
        if (!d)
            return;
        if (outer)
            *outer = wrap(d->outer.faces());
        if (slot)
            *slot = d->slot;
        if (inner)
            *inner = wrap(d->inner.faces());
    });
}

po_status po_jconstruct(const po_family* f, const int* j, size_t count, po_family** out) {
    return guard([&] {
        need(out, "out");
        if (count)
            need(j, "j");
        const Complex k = as_complex(f, "complex");
        const std::vector<int> js(j, j + count);
        if (f->certificate && f->certificate->claim() == Claim::sphere) {
            auto c = certified_j_construction({k, *f->certificate}, js);
            *out = wrap(c.complex.faces(), c.certificate);
        } else {
            *out = wrap(j_construction(k, js).faces());
        }
    });
}

po_status po_pl_describe(const po_family* f, char** out) {
    return guard([&] {
        need(out, "out");
        const Complex k = as_complex(f, "complex");
        std::string s;
        const auto d = dimension(k);
        if (!d) {
            s += "verdict other (void complex)\n";
        } else if (*d <= 2) {
            s += "verdict " + to_string(recognize_low_dim(k)) + "\n";
            s += "euler " + std::to_string(euler_characteristic(k)) + "\n";
        } else {
            s += "verdict unknown (dimension " + std::to_string(*d) + " is above the recognizer range)\n";
            s += "euler " + std::to_string(euler_characteristic(k)) + "\n";
        }
        if (f->certificate)
            s += "certificate\n" + f->certificate->describe();
        else
            s += "certificate none\n";
        *out = dup_string(s);
    });
}

po_status po_enumerate_count(int n, size_t* count) {
    return guard([&] {
        need(count, "count");
        if (n < 0)
            fail(ErrorKind::domain, "negative ambient");
        *count = enumerate_complexes(n).size();
    });
}

po_status po_enumerate_get(int n, size_t index, po_family** out) {
    return guard([&] {
        need(out, "out");
        if (n < 0)
            fail(ErrorKind::domain, "negative ambient");
        const auto& all = enumerate_complexes(n);
        if (index >= all.size())
            fail(ErrorKind::domain, "index out of range");
        *out = wrap(all[index].faces());
    });
}

}  // extern "C"
