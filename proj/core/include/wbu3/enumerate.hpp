#pragma once

#include <utility>

#include "wbu3/wbu.hpp"

namespace wbu3 {

/// One basket surviving the enumeration constraints, with its invariants and
/// the coprime pair realizing it as a weighted blow-up, when one exists with
/// m + n equal to the maximal admissible discrepancy.
struct EnumerationRow {
    Basket basket;
    Rational aE3;
    Int index = 1;
    std::optional<Int> max_a;
    std::optional<std::pair<Int, Int>> realized_by;
    bool family_truncated = false;  // row continues beyond r_max
};

/// An unbounded one-parameter family cut off at r_max: the fixed entries
/// plus one entry (r, varied_v) for every admissible r.
struct FamilyNote {
    std::vector<BasketEntry> fixed;
    Int varied_v = 1;
    Int rows_within_rmax = 0;
};

struct EnumerationReport {
    Int s_target = 0;
    Int r_max = 2;
    std::vector<EnumerationRow> rows;
    std::vector<FamilyNote> family_notes;
};

/// All baskets with entry indices <= r_max, sum of min(v, r-v) equal to
/// s_target in [0,3], and B_1 < 1; deduplicated in canonical form and sorted
/// by size then lexicographically.
EnumerationReport enumerate_baskets(Int s_target, Int r_max);

/// Per-basket record of the certified discrepancy bound.
struct BoundRecord {
    Basket basket;
    Rational aE3;
    Int index = 1;
    std::optional<Int> max_a;
    Int bound = 0;
    bool ok = false;
};

/// Certificate that every basket with min-v sum 3 admits no discrepancy
/// above 3 (refuting a >= 6 for the degree-two pushforward case).  The
/// a >= 6 premise itself is geometric input, not re-derived here.
struct S3Certificate {
    Int r_max = 8;
    std::vector<BoundRecord> records;
    bool all_ok = true;
};

S3Certificate certify_s3_bound(Int r_max);

/// Equality-band record for the single-entry baskets {(r,1)}: the colength
/// equals i(i+1)/2 exactly for i <= r and exceeds it at i = r+1.
struct SingleEntryRecord {
    Int r = 2;
    std::optional<Int> max_a;
    bool max_a_ok = false;     // max_a == r + 1
    bool band_ok = false;
    std::optional<Int> failing_i;
};

/// Record for {(r1,1),(r2,1)}: discrepancy bound r1 + r2 and the two
/// equality bands (exact up to i <= r1, partially exact up to i <= r2).
struct PairEntryRecord {
    Int r1 = 2;
    Int r2 = 2;
    std::optional<Int> max_a;
    bool bound_ok = false;     // max_a <= r1 + r2
    bool bound_attained = false;
    bool bands_ok = false;
    std::optional<Int> failing_i;
};

/// Record for {(r,2)}: discrepancy bound 4.
struct DoubleVRecord {
    Int r = 5;
    std::optional<Int> max_a;
    bool ok = false;           // max_a <= 4
};

struct CaseCertificate {
    Int r_max = 2;
    std::vector<SingleEntryRecord> single_entry;
    std::vector<PairEntryRecord> pair_entry;
    std::vector<DoubleVRecord> double_v;
    bool all_ok = true;
};

CaseCertificate certify_case_bounds(Int r_max);

} // namespace wbu3
