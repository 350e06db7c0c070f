#include "ssdd/model.hpp"

#include <algorithm>
#include <map>

namespace ssdd {

bool admissible_v(long long v) { return v >= 10 && v % 3 == 1; }

long long expected_block_count_dd(const DesignParams& p) {
    const long long raw = 1LL * p.lambda * p.v * (p.v - 1);
    if (raw % 6 != 0)
        throw NonIntegerCount("lambda*v*(v-1) = " + std::to_string(raw) + " not divisible by 6");
    return raw / 6;
}

long long expected_block_count_dgdd(const GroupType& type, int lambda) {
    const long long v = total_points(type);
    long long within = 0;
    for (const auto& part : type) within += 1LL * part.count * part.size * (part.size - 1);
    const long long raw = lambda * (v * (v - 1) - within);
    if (raw % 6 != 0)
        throw NonIntegerCount("lambda*(cross pairs) = " + std::to_string(raw) + " not divisible by 6");
    return raw / 6;
}

long long expected_block_count_gdd(const GroupType& type, int lambda) {
    const long long v = total_points(type);
    long long within = 0;
    for (const auto& part : type) within += 1LL * part.count * part.size * (part.size - 1);
    const long long raw = lambda * (v * (v - 1) - within);
    if (raw % 12 != 0)
        throw NonIntegerCount("lambda*(cross pairs) = " + std::to_string(raw) + " not divisible by 12");
    return raw / 12;
}

GroupType group_type_of(const std::vector<std::vector<int>>& groups) {
    std::map<int, int, std::greater<int>> sizes;
    for (const auto& g : groups) sizes[static_cast<int>(g.size())]++;
    GroupType type;
    for (const auto& [size, count] : sizes) type.push_back({size, count});
    return type;
}

std::string format_group_type(const GroupType& type) {
    std::string out;
    for (const auto& part : type) {
        if (!out.empty()) out += ' ';
        out += std::to_string(part.size) + "^" + std::to_string(part.count);
    }
    return out.empty() ? "(empty)" : out;
}

long long total_points(const GroupType& type) {
    long long v = 0;
    for (const auto& part : type) v += 1LL * part.size * part.count;
    return v;
}

Block sorted_block(const Block& b) {
    Block s = b;
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace ssdd
