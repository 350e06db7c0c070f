#pragma once
// Exact machine checks of every defining property: directed pair balance,
// simplicity, super-simplicity, DGDD cross-pair balance, TD validity.
// Failures are report items with concrete witnesses, never exceptions.

#include <string>
#include <vector>

#include "ssdd/io.hpp"
#include "ssdd/model.hpp"

namespace ssdd {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when passing; concrete pair/triple/index otherwise
};

struct VerificationReport {
    std::string kind;  // "dd", "dgdd", "gdd", "td"
    std::vector<CheckItem> checks;
    long long expected_blocks = -1;  // -1: counting formula not applicable
    long long actual_blocks = 0;
    bool pass = false;

    std::string summary() const;                       // one line
    std::string render_text() const;                   // multi-line human report
    std::vector<std::string> render_comments() const;  // '%' machine lines
};

// Every ordered pair of distinct points covered exactly lambda times.
CheckItem check_directed_balance(const DirectedDesign& d);

// No two blocks with equal underlying point sets.
CheckItem check_simple(const DirectedDesign& d);

// No triple of points in two distinct blocks, plus the underlying unordered
// pair count (2*lambda per pair, = 4 at lambda 2).
CheckItem check_super_simple(const DirectedDesign& d);

// Transversality, cross pairs exactly lambda, within-group pairs zero.
// Ordered pairs when g.directed, unordered otherwise.
CheckItem check_dgdd_balance(const GroupedDesign& g);

// Transversality and every unordered cross pair exactly once.
CheckItem check_td(const GroupedDesign& g);

VerificationReport full_report_dd(const DirectedDesign& d);
VerificationReport full_report_dgdd(const GroupedDesign& g);
VerificationReport full_report_td(const GroupedDesign& g);

// Dispatch on expected kind ("dd", "dgdd", "td"); throws ParseError when the
// file content does not match the expected kind.
VerificationReport full_report(const DesignFile& f, const std::string& kind);

}  // namespace ssdd
