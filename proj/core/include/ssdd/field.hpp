#pragma once
// Finite fields of prime-power order q <= 32 with fixed irreducible
// polynomials, as explicit add/mul tables over element indices [0, q).
// Element index encodes the polynomial coefficient vector in base p.

#include <array>
#include <cstdint>
#include <vector>

#include "ssdd/model.hpp"

namespace ssdd {

struct FiniteField {
    int q = 0;  // order
    int p = 0;  // characteristic
    int e = 0;  // degree (q = p^e)
    std::vector<std::uint8_t> add_table;  // q*q entries, row-major
    std::vector<std::uint8_t> mul_table;

    int add(int a, int b) const { return add_table[static_cast<std::size_t>(a) * q + b]; }
    int mul(int a, int b) const { return mul_table[static_cast<std::size_t>(a) * q + b]; }
};

// Supported orders: {2,3,4,5,7,8,9,11,13,16,17,19,23,25,27,29,31,32}.
bool field_order_supported(int q);
FiniteField field_build(int q);

}  // namespace ssdd
