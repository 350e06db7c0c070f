#include "ssdd/verify.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace ssdd {

namespace {

std::string block_str(const Block& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(b[i]);
    }
    return s + ")";
}

// Entries in [0, v) and pairwise distinct within each block.
CheckItem check_well_formed(const std::vector<Block>& blocks, int v) {
    CheckItem item{"well-formed", true, ""};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Block s = sorted_block(blocks[i]);
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (s[j] < 0 || s[j] >= v) {
                item.pass = false;
                item.witness = "block " + std::to_string(i) + " " + block_str(blocks[i]) +
                               " has entry " + std::to_string(s[j]) + " outside [0," +
                               std::to_string(v) + ")";
                return item;
            }
            if (j && s[j] == s[j - 1]) {
                item.pass = false;
                item.witness = "block " + std::to_string(i) + " " + block_str(blocks[i]) +
                               " repeats point " + std::to_string(s[j]);
                return item;
            }
        }
    }
    return item;
}

// Counts ordered (or unordered) pair coverage into a v*v table.
std::vector<int> pair_counts(const std::vector<Block>& blocks, int v, bool ordered) {
    std::vector<int> cnt(static_cast<std::size_t>(v) * v, 0);
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                if (ordered) {
                    cnt[static_cast<std::size_t>(b[i]) * v + b[j]]++;
                } else {
                    int x = std::min(b[i], b[j]), y = std::max(b[i], b[j]);
                    cnt[static_cast<std::size_t>(x) * v + y]++;
                }
            }
    return cnt;
}

// No unordered triple of points in two distinct blocks.
CheckItem check_triples(const std::vector<Block>& blocks, int v) {
    CheckItem item{"super-simple", true, ""};
    std::unordered_map<long long, std::size_t> seen;
    seen.reserve(blocks.size() * 4);
    for (std::size_t idx = 0; idx < blocks.size(); ++idx) {
        Block s = sorted_block(blocks[idx]);
        const std::size_t n = s.size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c) {
                    long long key = (static_cast<long long>(s[a]) * v + s[b]) * v + s[c];
                    auto [it, fresh] = seen.emplace(key, idx);
                    if (!fresh) {
                        item.pass = false;
                        item.witness = "triple {" + std::to_string(s[a]) + "," +
                                       std::to_string(s[b]) + "," + std::to_string(s[c]) +
                                       "} in blocks " + std::to_string(it->second) + " and " +
                                       std::to_string(idx);
                        return item;
                    }
                }
    }
    return item;
}

}  // namespace

CheckItem check_directed_balance(const DirectedDesign& d) {
    CheckItem item{"directed-balance", true, ""};
    const int v = d.params.v;
    auto cnt = pair_counts(d.blocks, v, true);
    for (int x = 0; x < v; ++x)
        for (int y = 0; y < v; ++y) {
            if (x == y) continue;
            int c = cnt[static_cast<std::size_t>(x) * v + y];
            if (c != d.params.lambda) {
                item.pass = false;
                item.witness = "ordered pair (" + std::to_string(x) + "," + std::to_string(y) +
                               ") covered " + std::to_string(c) + " times (expected " +
                               std::to_string(d.params.lambda) + ")";
                return item;
            }
        }
    return item;
}

CheckItem check_simple(const DirectedDesign& d) {
    CheckItem item{"simple", true, ""};
    std::map<Block, std::size_t> seen;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        Block s = sorted_block(d.blocks[i]);
        auto [it, fresh] = seen.emplace(std::move(s), i);
        if (!fresh) {
            item.pass = false;
            item.witness = "blocks " + std::to_string(it->second) + " and " + std::to_string(i) +
                           " share underlying set " + block_str(sorted_block(d.blocks[i]));
            return item;
        }
    }
    return item;
}

CheckItem check_super_simple(const DirectedDesign& d) {
    const int v = d.params.v;
    CheckItem item = check_triples(d.blocks, v);
    if (!item.pass) return item;
    // Underlying pair balance: every unordered pair in exactly 2*lambda blocks.
    const int expected = 2 * d.params.lambda;
    auto cnt = pair_counts(d.blocks, v, false);
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) {
            int c = cnt[static_cast<std::size_t>(x) * v + y];
            if (c != expected) {
                item.pass = false;
                item.witness = "unordered pair {" + std::to_string(x) + "," + std::to_string(y) +
                               "} in " + std::to_string(c) + " blocks (expected " +
                               std::to_string(expected) + ")";
                return item;
            }
        }
    return item;
}

namespace {

// Shared core for DGDD / TD balance: transversality plus cross-pair counts.
CheckItem grouped_balance(const GroupedDesign& g, const std::string& name, int lambda,
                          bool ordered) {
    CheckItem item{name, true, ""};
    const int v = g.design.params.v;
    std::vector<int> gid(static_cast<std::size_t>(v), -1);
    for (std::size_t gi = 0; gi < g.groups.size(); ++gi)
        for (int p : g.groups[gi]) {
            if (p < 0 || p >= v) {
                item.pass = false;
                item.witness = "group " + std::to_string(gi) + " point " + std::to_string(p) +
                               " outside [0," + std::to_string(v) + ")";
                return item;
            }
            if (gid[static_cast<std::size_t>(p)] != -1) {
                item.pass = false;
                item.witness = "point " + std::to_string(p) + " in two groups";
                return item;
            }
            gid[static_cast<std::size_t>(p)] = static_cast<int>(gi);
        }
    for (int p = 0; p < v; ++p)
        if (gid[static_cast<std::size_t>(p)] == -1) {
            item.pass = false;
            item.witness = "point " + std::to_string(p) + " in no group";
            return item;
        }
    for (std::size_t i = 0; i < g.design.blocks.size(); ++i) {
        const Block& b = g.design.blocks[i];
        for (std::size_t a = 0; a < b.size(); ++a)
            for (std::size_t c = a + 1; c < b.size(); ++c)
                if (gid[static_cast<std::size_t>(b[a])] == gid[static_cast<std::size_t>(b[c])]) {
                    item.pass = false;
                    item.witness = "block " + std::to_string(i) + " " + block_str(b) +
                                   " meets group " +
                                   std::to_string(gid[static_cast<std::size_t>(b[a])]) + " twice";
                    return item;
                }
    }
    auto cnt = pair_counts(g.design.blocks, v, ordered);
    for (int x = 0; x < v; ++x)
        for (int y = ordered ? 0 : x + 1; y < v; ++y) {
            if (x == y) continue;
            const bool cross = gid[static_cast<std::size_t>(x)] != gid[static_cast<std::size_t>(y)];
            const int expected = cross ? lambda : 0;
            int c = cnt[static_cast<std::size_t>(x) * v + y];
            if (c != expected) {
                item.pass = false;
                item.witness = std::string(ordered ? "ordered" : "unordered") + " " +
                               (cross ? "cross" : "within-group") + " pair " +
                               (ordered ? "(" : "{") + std::to_string(x) + "," +
                               std::to_string(y) + (ordered ? ")" : "}") + " covered " +
                               std::to_string(c) + " times (expected " + std::to_string(expected) +
                               ")";
                return item;
            }
        }
    return item;
}

}  // namespace

CheckItem check_dgdd_balance(const GroupedDesign& g) {
    return grouped_balance(g, "dgdd-balance", g.design.params.lambda, g.directed);
}

CheckItem check_td(const GroupedDesign& g) { return grouped_balance(g, "td", 1, false); }

std::string VerificationReport::summary() const {
    std::string s = pass ? "PASS" : "FAIL";
    s += " (" + kind + ", " + std::to_string(actual_blocks) + " blocks";
    if (expected_blocks >= 0 && expected_blocks != actual_blocks)
        s += ", expected " + std::to_string(expected_blocks);
    s += ")";
    if (!pass)
        for (const auto& c : checks)
            if (!c.pass) {
                s += ": " + c.name;
                break;
            }
    return s;
}

std::string VerificationReport::render_text() const {
    std::string s = "kind: " + kind + "\n";
    s += "blocks: " + std::to_string(actual_blocks);
    if (expected_blocks >= 0) s += " (formula: " + std::to_string(expected_blocks) + ")";
    s += "\n";
    for (const auto& c : checks) {
        s += "check " + c.name + ": " + (c.pass ? "pass" : "fail");
        if (!c.witness.empty()) s += " - " + c.witness;
        s += "\n";
    }
    s += std::string("verdict: ") + (pass ? "PASS" : "FAIL") + "\n";
    return s;
}

std::vector<std::string> VerificationReport::render_comments() const {
    std::vector<std::string> out;
    out.push_back("%VERIFY kind=" + kind + " blocks=" + std::to_string(actual_blocks) +
                  " expected=" + (expected_blocks >= 0 ? std::to_string(expected_blocks) : "n/a"));
    for (const auto& c : checks)
        out.push_back("%CHECK " + c.name + (c.pass ? " pass" : " fail | " + c.witness));
    out.push_back(std::string("%VERDICT ") + (pass ? "pass" : "fail"));
    return out;
}

namespace {

void finish(VerificationReport& r) {
    r.pass = true;
    for (const auto& c : r.checks) r.pass = r.pass && c.pass;
}

CheckItem count_check(long long expected, long long actual) {
    CheckItem item{"block-count", true, ""};
    if (expected >= 0 && expected != actual) {
        item.pass = false;
        item.witness = std::to_string(actual) + " blocks, counting formula requires " +
                       std::to_string(expected);
    }
    return item;
}

}  // namespace

VerificationReport full_report_dd(const DirectedDesign& d) {
    VerificationReport r;
    r.kind = "dd";
    r.actual_blocks = static_cast<long long>(d.blocks.size());
    r.expected_blocks = expected_block_count_dd(d.params);
    r.checks.push_back(check_well_formed(d.blocks, d.params.v));
    r.checks.push_back(count_check(r.expected_blocks, r.actual_blocks));
    if (r.checks.front().pass) {
        r.checks.push_back(check_directed_balance(d));
        r.checks.push_back(check_simple(d));
        r.checks.push_back(check_super_simple(d));
    }
    finish(r);
    return r;
}

VerificationReport full_report_dgdd(const GroupedDesign& g) {
    VerificationReport r;
    r.kind = g.directed ? "dgdd" : "gdd";
    r.actual_blocks = static_cast<long long>(g.design.blocks.size());
    const GroupType type = group_type_of(g.groups);
    bool uniform4 = true;
    for (const auto& b : g.design.blocks) uniform4 = uniform4 && b.size() == 4;
    if (uniform4) {
        r.expected_blocks = g.directed
                                ? expected_block_count_dgdd(type, g.design.params.lambda)
                                : expected_block_count_gdd(type, g.design.params.lambda);
    }
    r.checks.push_back(check_well_formed(g.design.blocks, g.design.params.v));
    r.checks.push_back(count_check(r.expected_blocks, r.actual_blocks));
    if (r.checks.front().pass) {
        r.checks.push_back(check_dgdd_balance(g));
        r.checks.push_back(check_simple(g.design));
        if (g.directed) r.checks.push_back(check_triples(g.design.blocks, g.design.params.v));
    }
    finish(r);
    return r;
}

VerificationReport full_report_td(const GroupedDesign& g) {
    VerificationReport r;
    r.kind = "td";
    r.actual_blocks = static_cast<long long>(g.design.blocks.size());
    const GroupType type = group_type_of(g.groups);
    if (type.size() == 1)  // uniform n^k: n^2 blocks
        r.expected_blocks = 1LL * type[0].size * type[0].size;
    r.checks.push_back(check_well_formed(g.design.blocks, g.design.params.v));
    r.checks.push_back(count_check(r.expected_blocks, r.actual_blocks));
    if (r.checks.front().pass) {
        r.checks.push_back(check_td(g));
        r.checks.push_back(check_simple(g.design));
    }
    finish(r);
    return r;
}

VerificationReport full_report(const DesignFile& f, const std::string& kind) {
    if (kind == "dd") {
        if (!f.plain) throw ParseError("expected a #DD file for kind dd");
        return full_report_dd(*f.plain);
    }
    if (kind == "dgdd") {
        if (!f.grouped) throw ParseError("expected a #DGDD file for kind dgdd");
        return full_report_dgdd(*f.grouped);
    }
    if (kind == "td") {
        if (!f.grouped) throw ParseError("expected a #DGDD file for kind td");
        if (f.grouped->directed) throw ParseError("a TD file must have directed=0");
        return full_report_td(*f.grouped);
    }
    throw ParseError("unknown kind '" + kind + "' (expected dd, dgdd, or td)");
}

}  // namespace ssdd
