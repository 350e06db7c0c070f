#include "ssdd/field.hpp"

#include <algorithm>
#include <map>

namespace ssdd {
namespace {

struct PolyBasis {
    int p, e;
    std::vector<int> reduction;  // x^e = reduction[0] + reduction[1] x + ...
};

// Fixed irreducible polynomials; part of the format so outputs are bit-exact.
//   q=4:  x^2+x+1      q=8:  x^3+x+1     q=9:  x^2+1
//   q=16: x^4+x+1      q=25: x^2+x+1     q=27: x^3+2x+1    q=32: x^5+x^2+1
const std::map<int, PolyBasis>& prime_power_bases() {
    static const std::map<int, PolyBasis> table = {
        {4, {2, 2, {1, 1}}},       {8, {2, 3, {1, 1, 0}}},
        {9, {3, 2, {2, 0}}},       {16, {2, 4, {1, 1, 0, 0}}},
        {25, {5, 2, {4, 4}}},      {27, {3, 3, {2, 1, 0}}},
        {32, {2, 5, {1, 0, 1, 0, 0}}},
    };
    return table;
}

const int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

std::vector<int> digits(int value, int p, int e) {
    std::vector<int> out(e);
    for (int i = 0; i < e; ++i) {
        out[i] = value % p;
        value /= p;
    }
    return out;
}

int undigits(const std::vector<int>& c, int p, int e) {
    int value = 0;
    for (int i = e - 1; i >= 0; --i) value = value * p + c[i];
    return value;
}

int poly_mul(int a, int b, const PolyBasis& basis) {
    const int p = basis.p, e = basis.e;
    const auto ca = digits(a, p, e), cb = digits(b, p, e);
    std::vector<int> prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    for (int d = 2 * e - 2; d >= e; --d) {
        const int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i) prod[d - e + i] = (prod[d - e + i] + c * basis.reduction[i]) % p;
    }
    prod.resize(e);
    return undigits(prod, p, e);
}

}  // namespace

bool field_order_supported(int q) {
    if (std::find(std::begin(kPrimes), std::end(kPrimes), q) != std::end(kPrimes)) return true;
    return prime_power_bases().count(q) > 0;
}

FiniteField field_build(int q) {
    if (!field_order_supported(q))
        throw UnsupportedOrder(std::to_string(q) + " is not a supported prime power (<= 32)");
    FiniteField f;
    f.q = q;
    f.add_table.resize(static_cast<std::size_t>(q) * q);
    f.mul_table.resize(static_cast<std::size_t>(q) * q);
    if (std::find(std::begin(kPrimes), std::end(kPrimes), q) != std::end(kPrimes)) {
        f.p = q;
        f.e = 1;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                f.add_table[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint8_t>((a + b) % q);
                f.mul_table[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint8_t>((a * b) % q);
            }
        return f;
    }
    const PolyBasis& basis = prime_power_bases().at(q);
    f.p = basis.p;
    f.e = basis.e;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            const auto ca = digits(a, f.p, f.e), cb = digits(b, f.p, f.e);
            std::vector<int> sum(f.e);
            for (int i = 0; i < f.e; ++i) sum[i] = (ca[i] + cb[i]) % f.p;
            f.add_table[static_cast<std::size_t>(a) * q + b] =
                static_cast<std::uint8_t>(undigits(sum, f.p, f.e));
            f.mul_table[static_cast<std::size_t>(a) * q + b] =
                static_cast<std::uint8_t>(poly_mul(a, b, basis));
        }
    return f;
}

}  // namespace ssdd
