#include "ssdd/recipe.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ssdd/catalog.hpp"
#include "ssdd/construct.hpp"
#include "ssdd/td.hpp"

namespace ssdd {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

int parse_uint(const std::string& t, int line) {
    if (t.empty()) throw ParseError("recipe line " + std::to_string(line) + ": expected a number");
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("recipe line " + std::to_string(line) + ": bad number '" + t + "'");
    return std::stoi(t);
}

bool valid_name(const std::string& n) {
    if (n.empty()) return false;
    for (char c : n)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

std::vector<std::string> split_using(const std::vector<std::string>& toks, std::size_t from,
                                     int line) {
    std::string joined;
    for (std::size_t i = from; i < toks.size(); ++i) joined += toks[i];
    std::vector<std::string> names;
    std::string cur;
    for (char c : joined + ",") {
        if (c == ',') {
            if (cur.empty())
                throw ParseError("recipe line " + std::to_string(line) + ": empty name in list");
            names.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    return names;
}

[[noreturn]] void bad_line(int line, const std::string& why) {
    throw ParseError("recipe line " + std::to_string(line) + ": " + why);
}

}  // namespace

Recipe parse_recipe(const std::string& text, const std::string& source_path) {
    Recipe r;
    if (!source_path.empty())
        r.dir = std::filesystem::path(source_path).parent_path().string();

    std::set<std::string> defined;
    auto need_ref = [&](const std::string& n, int line) {
        if (!defined.count(n)) bad_line(line, "'" + n + "' used before definition");
    };

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t pct = line.find('%');
        if (pct != std::string::npos) line = line.substr(0, pct);
        line = trim(line);
        if (line.empty()) continue;

        std::vector<std::string> toks = tokens_of(line);
        if (toks[0] == "output") {
            if (toks.size() != 2) bad_line(lineno, "output takes exactly one name");
            if (!r.output.empty()) bad_line(lineno, "duplicate output line");
            need_ref(toks[1], lineno);
            r.output = toks[1];
            continue;
        }
        if (toks[0] != "let" || toks.size() < 4 || toks[2] != "=")
            bad_line(lineno, "expected 'let <name> = ...' or 'output <name>'");

        RecipeStep st;
        st.name = toks[1];
        st.line = lineno;
        st.text = line;
        if (!valid_name(st.name)) bad_line(lineno, "bad name '" + st.name + "'");
        if (defined.count(st.name)) bad_line(lineno, "'" + st.name + "' redefined");

        const std::string& op = toks[3];
        if (op == "catalog") {
            if (toks.size() != 5) bad_line(lineno, "catalog takes one id");
            st.op = RecipeStep::Op::Catalog;
            st.arg = toks[4];
        } else if (op == "file") {
            if (toks.size() != 5) bad_line(lineno, "file takes one path");
            st.op = RecipeStep::Op::File;
            st.arg = toks[4];
        } else if (op == "td") {
            if (toks.size() != 6) bad_line(lineno, "td takes k and n");
            st.op = RecipeStep::Op::Td;
            st.k = parse_uint(toks[4], lineno);
            st.n = parse_uint(toks[5], lineno);
        } else if (op == "delete") {
            if (toks.size() < 6) bad_line(lineno, "delete takes a source and group=g:count=c terms");
            st.op = RecipeStep::Op::Delete;
            st.src = toks[4];
            need_ref(st.src, lineno);
            for (std::size_t i = 5; i < toks.size(); ++i) {
                const std::string& t = toks[i];
                const std::string gp = "group=", cp = ":count=";
                std::size_t mid = t.find(cp);
                if (t.rfind(gp, 0) != 0 || mid == std::string::npos)
                    bad_line(lineno, "expected group=<g>:count=<c>, got '" + t + "'");
                int g = parse_uint(t.substr(gp.size(), mid - gp.size()), lineno);
                int c = parse_uint(t.substr(mid + cp.size()), lineno);
                st.deletions.emplace_back(g, c);
            }
        } else if (op == "inflate") {
            if (toks.size() != 7 || toks[5] != "by") bad_line(lineno, "expected inflate <src> by <td>");
            st.op = RecipeStep::Op::Inflate;
            st.src = toks[4];
            st.td_name = toks[6];
            need_ref(st.src, lineno);
            need_ref(st.td_name, lineno);
        } else if (op == "weight") {
            if (toks.size() < 7 || toks[5].rfind("w=", 0) != 0 || toks[6] != "using")
                bad_line(lineno, "expected weight <src> w=<int> using <names>");
            st.op = RecipeStep::Op::Weight;
            st.src = toks[4];
            need_ref(st.src, lineno);
            st.w = parse_uint(toks[5].substr(2), lineno);
            st.using_names = split_using(toks, 7, lineno);
            if (st.using_names.empty()) bad_line(lineno, "weight needs at least one ingredient");
            for (const auto& n : st.using_names) need_ref(n, lineno);
        } else if (op == "fill") {
            if (toks.size() < 7 || toks[5].rfind("eta=", 0) != 0 || toks[6] != "using")
                bad_line(lineno, "expected fill <src> eta=<0|1> using <names>");
            st.op = RecipeStep::Op::Fill;
            st.src = toks[4];
            need_ref(st.src, lineno);
            st.eta = parse_uint(toks[5].substr(4), lineno);
            st.using_names = split_using(toks, 7, lineno);
            if (st.using_names.empty()) bad_line(lineno, "fill needs at least one filler");
            for (const auto& n : st.using_names) need_ref(n, lineno);
        } else {
            bad_line(lineno, "unknown operation '" + op + "'");
        }
        defined.insert(st.name);
        r.steps.push_back(std::move(st));
    }
    if (r.output.empty()) throw ParseError("recipe has no output line");
    return r;
}

Recipe load_recipe(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open recipe '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_recipe(buf.str(), path);
}

namespace {

const DesignFile& lookup(const std::map<std::string, DesignFile>& env, const std::string& name) {
    return env.at(name);  // parse guarantees presence
}

const DirectedDesign& as_plain(const DesignFile& f, const std::string& name) {
    if (!f.plain) throw ParseError("step '" + name + "' is not a plain design");
    return *f.plain;
}

const GroupedDesign& as_grouped(const DesignFile& f, const std::string& name) {
    if (!f.grouped) throw ParseError("step '" + name + "' is not a grouped design");
    return *f.grouped;
}

VerificationReport gate(const RecipeStep& st, const DesignFile& value) {
    if (st.op == RecipeStep::Op::Td) return full_report_td(*value.grouped);
    if (value.plain) return full_report_dd(*value.plain);
    return full_report_dgdd(*value.grouped);
}

[[noreturn]] void fail_step(const RecipeStep& st, const VerificationReport& rep) {
    std::string msg = "step '" + st.name + "' (" + st.text + "): " + rep.summary();
    for (const auto& c : rep.checks)
        if (!c.pass && !c.witness.empty()) {
            msg += " | " + c.witness;
            break;
        }
    throw StepVerificationFailed(msg);
}

}  // namespace

RecipeResult run_recipe(const Recipe& r) {
    std::map<std::string, DesignFile> env;
    RecipeResult res;

    for (const RecipeStep& st : r.steps) {
        DesignFile value;
        switch (st.op) {
            case RecipeStep::Op::Catalog:
                value = catalog_build(st.arg);
                break;
            case RecipeStep::Op::File: {
                std::filesystem::path p(st.arg);
                if (p.is_relative() && !r.dir.empty()) p = std::filesystem::path(r.dir) / p;
                value = load_design_file(p.string());
                break;
            }
            case RecipeStep::Op::Td:
                value.grouped = td_build(TdSpec{st.k, st.n});
                break;
            case RecipeStep::Op::Delete:
                value.grouped =
                    delete_points(as_grouped(lookup(env, st.src), st.src), st.deletions);
                break;
            case RecipeStep::Op::Inflate: {
                const DesignFile& m = lookup(env, st.src);
                const GroupedDesign& td = as_grouped(lookup(env, st.td_name), st.td_name);
                if (m.plain) {
                    value.grouped = inflate_by_td(*m.plain, nullptr, td);
                } else {
                    const GroupedDesign& g = as_grouped(m, st.src);
                    if (!g.directed)
                        throw ArityMismatch("inflate: master '" + st.src + "' must be directed");
                    value.grouped = inflate_by_td(g.design, &g.groups, td);
                }
                break;
            }
            case RecipeStep::Op::Weight: {
                const GroupedDesign& m = as_grouped(lookup(env, st.src), st.src);
                std::map<int, const GroupedDesign*> ingredients;
                for (const auto& n : st.using_names) {
                    const GroupedDesign& ing = as_grouped(lookup(env, n), n);
                    int key = static_cast<int>(ing.groups.size());
                    if (!ingredients.emplace(key, &ing).second)
                        throw AlignmentError("weight: two ingredients with " + std::to_string(key) +
                                             " groups");
                }
                value.grouped = weight_and_replace(m, st.w, ingredients);
                break;
            }
            case RecipeStep::Op::Fill: {
                const GroupedDesign& g = as_grouped(lookup(env, st.src), st.src);
                FillSpec eta{st.eta};
                std::map<int, const DirectedDesign*> fillers;
                for (const auto& n : st.using_names) {
                    const DirectedDesign& f = as_plain(lookup(env, n), n);
                    int key = f.params.v - st.eta;
                    if (!fillers.emplace(key, &f).second)
                        throw SizeMismatch("fill: two fillers for group size " + std::to_string(key));
                }
                value.plain = fill_groups(g, eta, fillers);
                break;
            }
        }

        VerificationReport rep = gate(st, value);
        if (!rep.pass) fail_step(st, rep);
        res.trail.push_back({st.name, st.text, rep});
        env[st.name] = std::move(value);
    }

    res.output = env.at(r.output);
    return res;
}

std::vector<std::string> RecipeResult::trail_comments(const std::string& recipe_name) const {
    std::vector<std::string> out;
    out.push_back("%RECIPE " + recipe_name);
    for (const auto& rec : trail) out.push_back("%STEP " + rec.detail + " | " + rec.report.summary());
    return out;
}

}  // namespace ssdd
