#include "polyop/format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "polyop/error.hpp"
#include "polyop/families.hpp"

namespace polyop {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    while (!text.empty()) {
        auto pos = text.find('\n');
        out.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos)
            break;
        text.remove_prefix(pos + 1);
    }
    return out;
}

[[noreturn]] void parse_error(int line, const std::string& what) {
    fail(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view tok, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        parse_error(line, "expected an integer, got '" + std::string(tok) + "'");
    return v;
}

Mask vertex_bit(int v, int n, Mask seen, int line) {
    if (v < 1 || v > n)
        parse_error(line, "vertex " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
    if (bits::has(seen, v))
        parse_error(line, "repeated vertex " + std::to_string(v));
    return bits::single(v);
}

std::size_t first_content(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' || text[i] == '\n'))
        ++i;
    return i;
}

Family family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("faces"))
        fail(ErrorKind::parse, "JSON family needs keys \"n\" and \"faces\"");
    if (!j["n"].is_number_integer())
        fail(ErrorKind::parse, "\"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (n < 0)
        fail(ErrorKind::parse, "\"n\" must be nonnegative");
    check_ambient(n);
    std::vector<Mask> sets;
    for (const auto& face : j["faces"]) {
        if (!face.is_array())
            fail(ErrorKind::parse, "each face must be an array");
        Mask m = 0;
        for (const auto& v : face) {
            if (!v.is_number_integer())
                fail(ErrorKind::parse, "vertices must be integers");
            m |= vertex_bit(v.get<int>(), n, m, 0);
        }
        sets.push_back(m);
    }
    bool closed = j.contains("facets") && j["facets"].is_boolean() && j["facets"].get<bool>();
    Family f(n, std::move(sets));
    return closed ? closure(f, ClosureMode::down) : f;
}

json family_to_json_value(const Family& f) {
    json faces = json::array();
    for (Mask s : f)
        faces.push_back(bits::elements(s));
    return json{{"n", f.ambient()}, {"faces", faces}};
}

}  // namespace

Family parse_family_text(std::string_view text) {
    auto lines = lines_of(text);
    int n = -1;
    bool keyword_seen = false, closed = false;
    std::vector<Mask> sets;
    int lineno = 0;
    for (auto raw : lines) {
        ++lineno;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        if (n < 0) {
            if (line.size() < 2 || line[0] != 'n' || line[1] != ' ')
                parse_error(lineno, "expected 'n <int>'");
            n = parse_int(trim(line.substr(2)), lineno);
            if (n < 0)
                parse_error(lineno, "negative ambient");
            check_ambient(n);
            continue;
        }
        if (!keyword_seen) {
            if (line == "faces")
                closed = false;
            else if (line == "facets")
                closed = true;
            else
                parse_error(lineno, "expected 'faces' or 'facets'");
            keyword_seen = true;
            continue;
        }
        if (line == "-") {
            sets.push_back(0);
            continue;
        }
        Mask m = 0;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
                ++pos;
            std::size_t end = pos;
            while (end < line.size() && line[end] != ' ' && line[end] != '\t')
                ++end;
            if (end > pos)
                m |= vertex_bit(parse_int(line.substr(pos, end - pos), lineno), n, m, lineno);
            pos = end;
        }
        sets.push_back(m);
    }
    if (n < 0)
        fail(ErrorKind::parse, "missing 'n <int>' header");
    if (!keyword_seen)
        fail(ErrorKind::parse, "missing 'faces' or 'facets' keyword");
    Family f(n, std::move(sets));
    return closed ? closure(f, ClosureMode::down) : f;
}

Family parse_family_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
    }
    return family_from_json(j);
}

Family parse_family(std::string_view text) {
    auto i = first_content(text);
    if (i < text.size() && text[i] == '{')
        return parse_family_json(text);
    return parse_family_text(text);
}

std::string to_text(const Family& f, TextKeyword keyword) {
    std::ostringstream os;
    os << "n " << f.ambient() << "\n" << (keyword == TextKeyword::faces ? "faces" : "facets") << "\n";
    for (Mask s : f) {
        if (s == 0) {
            os << "-\n";
            continue;
        }
        bool first = true;
        for (int v : bits::elements(s)) {
            os << (first ? "" : " ") << v;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

std::string to_json(const Family& f) { return family_to_json_value(f).dump() + "\n"; }

RelativePair parse_pair(std::string_view text) {
    auto i = first_content(text);
    if (i < text.size() && text[i] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            fail(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("total") || !j.contains("sub"))
            fail(ErrorKind::parse, "JSON pair needs keys \"total\" and \"sub\"");
        return RelativePair(Complex(family_from_json(j["total"])), Complex(family_from_json(j["sub"])));
    }
    std::size_t cut = std::string_view::npos;
    std::size_t pos = 0;
    for (auto line : lines_of(text)) {
        if (trim(line) == "---") {
            cut = pos;
            break;
        }
        pos += line.size() + 1;
    }
    if (cut == std::string_view::npos)
        fail(ErrorKind::parse, "pair text needs a '---' separator line");
    auto rest = text.substr(cut);
    rest.remove_prefix(std::min(rest.size(), rest.find('\n') == std::string_view::npos ? rest.size() : rest.find('\n') + 1));
    return RelativePair(Complex(parse_family_text(text.substr(0, cut))), Complex(parse_family_text(rest)));
}

std::string to_text(const RelativePair& p) { return to_text(p.total.faces()) + "---\n" + to_text(p.sub.faces()); }

std::string to_json(const RelativePair& p) {
    json j{{"total", family_to_json_value(p.total.faces())}, {"sub", family_to_json_value(p.sub.faces())}};
    return j.dump() + "\n";
}

}  // namespace polyop
