#include "ssdd/develop.hpp"

namespace ssdd {

Block shift(const Block& b, int r, int n) {
    Block out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = (b[i] + r) % n;
    return out;
}

std::vector<Block> develop(const std::vector<Block>& base_blocks, int n) {
    for (const Block& b : base_blocks)
        for (int p : b)
            if (p < 0 || p >= n)
                throw EntryOutOfRange("base entry " + std::to_string(p) + " not in [0, " +
                                      std::to_string(n) + ")");
    std::vector<Block> out;
    out.reserve(base_blocks.size() * static_cast<std::size_t>(n));
    for (const Block& b : base_blocks)
        for (int r = 0; r < n; ++r) out.push_back(shift(b, r, n));
    return out;  // duplicates (short orbits / duplicate bases) preserved
}

}  // namespace ssdd
