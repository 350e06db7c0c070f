#include "ssdd/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ssdd {
namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& why) {
    throw ParseError("line " + std::to_string(line_no) + ": " + why);
}

// Strict decimal: nonempty, digits only, no leading zero except "0" itself.
int parse_number(const std::string& tok, std::size_t line_no) {
    if (tok.empty()) fail(line_no, "empty number token");
    for (char c : tok)
        if (c < '0' || c > '9') fail(line_no, "bad number '" + tok + "'");
    if (tok.size() > 1 && tok[0] == '0') fail(line_no, "leading zero in '" + tok + "'");
    if (tok.size() > 9) fail(line_no, "number out of range '" + tok + "'");
    return std::stoi(tok);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// Parses "key=value" with the expected key.
int parse_kv(const std::string& tok, const std::string& key, std::size_t line_no) {
    const std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0) fail(line_no, "expected " + key + "=<int>, got '" + tok + "'");
    return parse_number(tok.substr(prefix.size()), line_no);
}

}  // namespace

DesignFile parse_design_file(const std::string& text) {
    DesignFile out;
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) lines.push_back(cur);  // tolerate missing final LF
    }

    bool have_header = false;
    bool is_grouped = false;
    bool directed = true;
    DesignParams params;
    std::vector<std::vector<int>> groups;
    std::vector<Block> blocks;
    bool seen_block = false;

    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const std::size_t line_no = idx + 1;
        const std::string& line = lines[idx];
        if (!line.empty() && line.back() == '\r') fail(line_no, "CR line ending (format is LF)");
        if (line.empty()) continue;
        if (line[0] == '%') {
            out.comments.push_back(line);
            continue;
        }
        if (line[0] == '#') {
            if (have_header) fail(line_no, "duplicate header");
            auto toks = split_ws(line);
            if (toks[0] == "#DD") {
                if (toks.size() != 4) fail(line_no, "#DD header needs v= k= lambda=");
                is_grouped = false;
            } else if (toks[0] == "#DGDD") {
                if (toks.size() != 5) fail(line_no, "#DGDD header needs v= k= lambda= directed=");
                is_grouped = true;
            } else {
                fail(line_no, "unknown header '" + toks[0] + "'");
            }
            params.v = parse_kv(toks[1], "v", line_no);
            params.k = parse_kv(toks[2], "k", line_no);
            params.lambda = parse_kv(toks[3], "lambda", line_no);
            if (is_grouped) {
                const int d = parse_kv(toks[4], "directed", line_no);
                if (d != 0 && d != 1) fail(line_no, "directed must be 0 or 1");
                directed = d == 1;
            }
            if (params.v <= 0 || params.k < 2 || params.lambda < 1)
                fail(line_no, "nonsensical parameters");
            have_header = true;
            continue;
        }
        if (!have_header) fail(line_no, "content before header");
        if (line.rfind("G:", 0) == 0) {
            if (!is_grouped) fail(line_no, "group line in a #DD file");
            if (seen_block) fail(line_no, "group line after block lines");
            std::vector<int> cell;
            for (const auto& tok : split_ws(line.substr(2))) {
                const int p = parse_number(tok, line_no);
                if (p >= params.v) fail(line_no, "group point " + tok + " out of range");
                cell.push_back(p);
            }
            if (cell.empty()) fail(line_no, "empty group");
            groups.push_back(std::move(cell));
            continue;
        }
        // block line
        auto toks = split_ws(line);
        Block b;
        for (const auto& tok : toks) {
            const int p = parse_number(tok, line_no);
            if (p >= params.v) fail(line_no, "point " + tok + " out of range (v=" + std::to_string(params.v) + ")");
            if (std::find(b.begin(), b.end(), p) != b.end())
                fail(line_no, "repeated point " + tok + " in block");
            b.push_back(p);
        }
        const int arity = static_cast<int>(b.size());
        if (is_grouped && !directed) {
            // undirected masters may mix arities (truncated TDs), capped by k
            if (arity < 2 || arity > params.k)
                fail(line_no, "block arity " + std::to_string(arity) + " outside [2, k]");
        } else if (arity != params.k) {
            fail(line_no, "block arity " + std::to_string(arity) + " != k=" + std::to_string(params.k));
        }
        blocks.push_back(std::move(b));
        seen_block = true;
    }

    if (!have_header) fail(lines.size(), "missing header");

    if (is_grouped) {
        std::vector<char> seen(params.v, 0);
        std::size_t covered = 0;
        for (const auto& g : groups)
            for (int p : g) {
                if (seen[p]) fail(lines.size(), "group cells not a partition (point " + std::to_string(p) + " repeated)");
                seen[p] = 1;
                ++covered;
            }
        if (covered != static_cast<std::size_t>(params.v))
            fail(lines.size(), "group cells not a partition (cover " + std::to_string(covered) + " of " + std::to_string(params.v) + ")");
        GroupedDesign g;
        g.design.params = params;
        g.design.blocks = std::move(blocks);
        g.groups = std::move(groups);
        g.directed = directed;
        out.grouped = std::move(g);
    } else {
        DirectedDesign d;
        d.params = params;
        d.blocks = std::move(blocks);
        out.plain = std::move(d);
    }
    return out;
}

DesignFile load_design_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_design_file(buf.str());
}

std::vector<std::size_t> sorted_order(const std::vector<Block>& blocks) {
    std::vector<std::size_t> order(blocks.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return blocks[a] < blocks[b]; });
    return order;
}

namespace {

void append_blocks(std::string& out, const std::vector<Block>& blocks) {
    for (std::size_t pos : sorted_order(blocks)) {
        const Block& b = blocks[pos];
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(b[i]);
        }
        out += '\n';
    }
}

void append_extras(std::string& out, const std::vector<std::string>& extras) {
    for (const auto& line : extras) {
        out += line;
        out += '\n';
    }
}

}  // namespace

std::string write_design_file(const DirectedDesign& d, const std::vector<std::string>& extras) {
    std::string out = "#DD v=" + std::to_string(d.params.v) + " k=" + std::to_string(d.params.k) +
                      " lambda=" + std::to_string(d.params.lambda) + "\n";
    append_blocks(out, d.blocks);
    append_extras(out, extras);
    return out;
}

std::string write_design_file(const GroupedDesign& g, const std::vector<std::string>& extras) {
    std::string out = "#DGDD v=" + std::to_string(g.design.params.v) +
                      " k=" + std::to_string(g.design.params.k) +
                      " lambda=" + std::to_string(g.design.params.lambda) +
                      " directed=" + (g.directed ? "1" : "0") + "\n";
    auto groups = g.groups;
    for (auto& cell : groups) std::sort(cell.begin(), cell.end());
    std::sort(groups.begin(), groups.end());
    for (const auto& cell : groups) {
        out += "G:";
        for (int p : cell) out += ' ' + std::to_string(p);
        out += '\n';
    }
    append_blocks(out, g.design.blocks);
    append_extras(out, extras);
    return out;
}

void save_design_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

}  // namespace ssdd
