#pragma once
// Transversal designs TD(k, n) from finite fields: n^2 blocks on k*n points,
// every unordered cross pair covered exactly once. Point labels are
// group-major: group g occupies [g*n, (g+1)*n). Block for (a, b) in F^2 takes
// value a*x_g + b in group g (x_g = field element g); when k = n+1 the extra
// "infinity" group n takes value a.

#include "ssdd/model.hpp"

namespace ssdd {

struct TdSpec {
    int k = 0;
    int n = 0;
};

GroupedDesign td_build(const TdSpec& spec);

}  // namespace ssdd
