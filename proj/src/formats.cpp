#include "reldom/formats.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace reldom {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i >= s.size()) return false;
    bool saw_slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && !saw_slash && i + 1 < s.size()) {
            saw_slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

[[noreturn]] void fail(int line, int col, const std::string& msg) {
    throw presentation_error({line, col, msg});
}

// strip a trailing comment and whitespace
std::string clean_line(const std::string& raw) {
    auto hash = raw.find('#');
    std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    return s.substr(b);
}

// split a relation body into signed terms
std::vector<std::pair<int, std::string>> signed_terms(const std::string& body, int line) {
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string cur;
    for (char c : body) {
        if (c == '+' || c == '-') {
            if (!cur.empty()) {
                terms.push_back({sign, cur});
                cur.clear();
                sign = 1;
            }
            if (c == '-') sign = -sign;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
    }
    if (!cur.empty()) terms.push_back({sign, cur});
    if (terms.empty()) fail(line, 1, "empty relation");
    return terms;
}

}  // namespace

BoundQuiverPresentation parse_algebra_file(const std::string& text,
                                           const std::string& name_hint) {
    BoundQuiverPresentation pres;
    pres.name = name_hint;
    bool saw_field = false;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::vector<std::pair<int, std::string>> pending_relations;
    while (std::getline(in, raw)) {
        ++line;
        auto s = clean_line(raw);
        if (s.empty()) continue;
        auto toks = split_ws(s);
        const std::string& head = toks[0];
        if (head == "field") {
            if (toks.size() == 2 && toks[1] == "QQ") {
                pres.field_spec = "QQ";
            } else if (toks.size() == 3 && toks[1] == "GF" && looks_numeric(toks[2])) {
                pres.field_spec = "GF:" + toks[2];
            } else if (toks.size() == 2 && toks[1].rfind("GF:", 0) == 0) {
                pres.field_spec = toks[1];
            } else {
                fail(line, 1, "bad field spec: expected 'field QQ' or 'field GF p'");
            }
            saw_field = true;
        } else if (head == "vertex") {
            if (toks.size() < 2) fail(line, 1, "vertex line needs at least one label");
            for (size_t i = 1; i < toks.size(); ++i) {
                if (pres.quiver.vertex_index(toks[i]) >= 0)
                    fail(line, 1, "duplicate vertex label: " + toks[i]);
                pres.quiver.vertices.push_back(toks[i]);
            }
        } else if (head == "arrow") {
            // arrow a: 1 -> 2
            std::string rest = s.substr(5);
            auto colon = rest.find(':');
            if (colon == std::string::npos) fail(line, 1, "arrow line needs 'label: src -> tgt'");
            std::string label = clean_line(rest.substr(0, colon));
            auto arr = rest.find("->", colon);
            if (arr == std::string::npos) fail(line, 1, "arrow line needs '->'");
            std::string srcs = clean_line(rest.substr(colon + 1, arr - colon - 1));
            std::string tgts = clean_line(rest.substr(arr + 2));
            if (label.empty() || label.find('*') != std::string::npos || looks_numeric(label))
                fail(line, 1, "bad arrow label: " + label);
            if (pres.quiver.arrow_index(label) >= 0)
                fail(line, 1, "duplicate arrow label: " + label);
            int srci = pres.quiver.vertex_index(srcs);
            int tgti = pres.quiver.vertex_index(tgts);
            if (srci < 0) fail(line, 1, "unknown vertex: " + srcs);
            if (tgti < 0) fail(line, 1, "unknown vertex: " + tgts);
            pres.quiver.arrows.push_back({label, srci, tgti});
        } else if (head == "relation") {
            pending_relations.push_back({line, s.substr(9)});
        } else {
            fail(line, 1, "unknown directive: " + head);
        }
    }
    if (!saw_field) pres.field_spec = "QQ";
    for (auto& [rline, body] : pending_relations) {
        PathExpr expr;
        for (auto& [sign, term] : signed_terms(body, rline)) {
            // split on '*': optional leading numeric coefficient, then arrows
            std::vector<std::string> parts;
            std::string cur;
            for (char c : term) {
                if (c == '*') {
                    parts.push_back(cur);
                    cur.clear();
                } else
                    cur += c;
            }
            parts.push_back(cur);
            PathTerm pt;
            size_t first = 0;
            if (looks_numeric(parts[0])) {
                pt.coeff = parts[0];
                first = 1;
            }
            if (sign < 0) pt.coeff = pt.coeff[0] == '-' ? pt.coeff.substr(1) : "-" + pt.coeff;
            if (first >= parts.size()) fail(rline, 1, "relation term has no arrows");
            std::vector<int> arrows_written;  // as written: last-acting first
            for (size_t i = first; i < parts.size(); ++i) {
                int ai = pres.quiver.arrow_index(parts[i]);
                if (ai < 0) fail(rline, 1, "unknown arrow in relation: " + parts[i]);
                arrows_written.push_back(ai);
            }
            if (arrows_written.size() < 2)
                fail(rline, 1, "admissibility: relation paths must have length >= 2");
            // store in action order (rightmost written acts first)
            pt.arrows.assign(arrows_written.rbegin(), arrows_written.rend());
            for (size_t i = 0; i + 1 < pt.arrows.size(); ++i)
                if (pres.quiver.arrows[pt.arrows[i]].tgt != pres.quiver.arrows[pt.arrows[i + 1]].src)
                    fail(rline, 1, "relation path is not composable");
            expr.terms.push_back(std::move(pt));
        }
        // uniform source and target
        int src = -1, tgt = -1;
        for (const auto& t : expr.terms) {
            int s0 = pres.quiver.arrows[t.arrows.front()].src;
            int t0 = pres.quiver.arrows[t.arrows.back()].tgt;
            if (src < 0) {
                src = s0;
                tgt = t0;
            } else if (src != s0 || tgt != t0) {
                fail(rline, 1, "non-uniform relation: mixed sources or targets");
            }
        }
        pres.relations.push_back(std::move(expr));
    }
    return pres;
}

std::vector<ParsedModule> parse_module_file(const std::string& text) {
    std::vector<ParsedModule> out;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    ParsedModule* cur = nullptr;
    while (std::getline(in, raw)) {
        ++line;
        auto s = clean_line(raw);
        if (s.empty()) continue;
        auto toks = split_ws(s);
        if (toks[0] == "module") {
            // module M over alg
            if (toks.size() != 4 || toks[2] != "over")
                fail(line, 1, "expected 'module <name> over <algebra>'");
            out.push_back({});
            cur = &out.back();
            cur->name = toks[1];
            cur->over = toks[3];
            cur->line = line;
        } else if (toks[0] == "dim") {
            if (!cur) fail(line, 1, "dim line outside a module block");
            if (toks.size() != 4 || toks[2] != "=") fail(line, 1, "expected 'dim <vertex> = <n>'");
            cur->dims[toks[1]] = std::stoi(toks[3]);
        } else if (toks[0] == "map") {
            if (!cur) fail(line, 1, "map line outside a module block");
            auto eq = s.find('=');
            if (eq == std::string::npos) fail(line, 1, "expected 'map <arrow> = [[...]]'");
            auto label = clean_line(s.substr(4, eq - 4));
            auto body = clean_line(s.substr(eq + 1));
            // parse [[a,b],[c,d]]
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> currow;
            std::string tok;
            int depth = 0;
            for (char c : body) {
                if (c == '[') {
                    ++depth;
                    continue;
                }
                if (c == ']' || c == ',') {
                    if (!tok.empty()) {
                        currow.push_back(tok);
                        tok.clear();
                    }
                    if (c == ']') {
                        --depth;
                        if (depth == 1 || (depth == 0 && !currow.empty())) {
                            if (!currow.empty()) rows.push_back(currow);
                            currow.clear();
                        }
                    }
                    continue;
                }
                if (!std::isspace(static_cast<unsigned char>(c))) tok += c;
            }
            if (depth != 0) fail(line, 1, "unbalanced brackets in matrix literal");
            cur->maps[label] = rows;
        } else {
            fail(line, 1, "unknown directive in module file: " + toks[0]);
        }
    }
    if (out.empty()) fail(1, 1, "module file declares no modules");
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace reldom
