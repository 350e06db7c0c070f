#pragma once
// Cyclic development: the "+1 mod n" engine. develop() emits orbits
// base-major (all shifts of base block 0, then base block 1, ...), so the
// block at index b*n + r is shift(base[b], r).

#include <vector>

#include "ssdd/model.hpp"

namespace ssdd {

Block shift(const Block& b, int r, int n);

std::vector<Block> develop(const std::vector<Block>& base_blocks, int n);

}  // namespace ssdd
