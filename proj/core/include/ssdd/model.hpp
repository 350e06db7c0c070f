#pragma once
// Core domain types for super-simple directed designs: parameters, ordered
// blocks, grouped designs, and the counting formulas everything else checks
// against.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssdd {

// An ordered block: k pairwise-distinct point indices. Tuple order is
// semantic for directed designs (it encodes the 6 ordered pairs a block
// covers) and incidental for undirected masters.
using Block = std::vector<int>;

struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

// Error taxonomy used across the library. Verification FAILURES are report
// data, not exceptions; these are for malformed inputs and contract breaches.
struct NonIntegerCount : Error { explicit NonIntegerCount(const std::string& m) : Error("NonIntegerCount", m) {} };
struct ParseError : Error { explicit ParseError(const std::string& m) : Error("ParseError", m) {} };
struct EntryOutOfRange : Error { explicit EntryOutOfRange(const std::string& m) : Error("EntryOutOfRange", m) {} };
struct UnknownId : Error { explicit UnknownId(const std::string& m) : Error("UnknownId", m) {} };
struct UnsupportedOrder : Error { explicit UnsupportedOrder(const std::string& m) : Error("UnsupportedOrder", m) {} };
struct KTooLarge : Error { explicit KTooLarge(const std::string& m) : Error("KTooLarge", m) {} };
struct ArityMismatch : Error { explicit ArityMismatch(const std::string& m) : Error("ArityMismatch", m) {} };
struct TdNotVerified : Error { explicit TdNotVerified(const std::string& m) : Error("TdNotVerified", m) {} };
struct MissingIngredient : Error { explicit MissingIngredient(const std::string& m) : Error("MissingIngredient", m) {} };
struct AlignmentError : Error { explicit AlignmentError(const std::string& m) : Error("AlignmentError", m) {} };
struct MissingFiller : Error { explicit MissingFiller(const std::string& m) : Error("MissingFiller", m) {} };
struct SizeMismatch : Error { explicit SizeMismatch(const std::string& m) : Error("SizeMismatch", m) {} };
struct BlockTooSmall : Error { explicit BlockTooSmall(const std::string& m) : Error("BlockTooSmall", m) {} };
struct StepVerificationFailed : Error { explicit StepVerificationFailed(const std::string& m) : Error("StepVerificationFailed", m) {} };
struct InvalidCertificate : Error { explicit InvalidCertificate(const std::string& m) : Error("InvalidCertificate", m) {} };
struct NotDeveloped : Error { explicit NotDeveloped(const std::string& m) : Error("NotDeveloped", m) {} };

struct DesignParams {
    int v = 0;       // point count
    int k = 4;       // block size
    int lambda = 2;  // index
    int t = 2;       // strength (fixed)
};

struct DirectedDesign {
    DesignParams params;
    std::vector<Block> blocks;  // duplicates representable; order not semantic
};

// One (size, multiplicity) part of a group type g1^u1 g2^u2 ...
struct GroupTypePart {
    int size = 0;
    int count = 0;
};
using GroupType = std::vector<GroupTypePart>;

// A directed or undirected design together with a partition of its points
// into groups (DGDD / GDD / TD cases).
struct GroupedDesign {
    DirectedDesign design;
    std::vector<std::vector<int>> groups;  // disjoint cells covering [0, v)
    bool directed = true;
};

struct FillSpec {
    int eta = 0;  // 0 or 1
};

struct InflationSpec {
    int alpha = 1;  // weight, >= 1
};

// v admissible for a super-simple (v,4,2)DD: v == 1 (mod 3) and v >= 10.
bool admissible_v(long long v);

// lambda*v*(v-1)/6: number of blocks forced by directed pair counting.
// Throws NonIntegerCount when the division is not exact.
long long expected_block_count_dd(const DesignParams& p);

// lambda*(v(v-1) - sum u_i*g_i*(g_i-1))/6 for a transverse 4-block DGDD.
long long expected_block_count_dgdd(const GroupType& type, int lambda);

// Undirected uniform-4-block GDD counterpart: same numerator over 12.
long long expected_block_count_gdd(const GroupType& type, int lambda);

// Group type of an explicit partition, parts sorted by descending size.
GroupType group_type_of(const std::vector<std::vector<int>>& groups);
std::string format_group_type(const GroupType& type);
long long total_points(const GroupType& type);

// Sorted copy helpers used by verification and serialization.
Block sorted_block(const Block& b);

}  // namespace ssdd
