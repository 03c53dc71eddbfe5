#include <doctest.h>

#include "wbu3/enumerate.hpp"

using namespace wbu3;

namespace {

Basket make(std::initializer_list<std::pair<Int, Int>> entries) {
    std::vector<BasketEntry> v;
    for (auto [r, val] : entries)
        v.emplace_back(r, val);
    return Basket(std::move(v));
}

} // namespace

TEST_CASE("min-v sum 0 yields only the empty basket") {
    EnumerationReport rep = enumerate_baskets(0, 20);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].basket.empty());
    CHECK(rep.rows[0].aE3 == Rational(2));
    CHECK(rep.rows[0].max_a == 2);
    CHECK(rep.rows[0].realized_by == std::make_pair(Int(1), Int(1)));
    CHECK(rep.family_notes.empty());
}

TEST_CASE("min-v sum 3 at r_max = 8: the full case list") {
    EnumerationReport rep = enumerate_baskets(3, 8);
    std::vector<std::pair<Basket, Rational>> expected = {
        {make({{7, 3}}), Rational(2, 7)},
        {make({{8, 3}}), Rational(1, 8)},
        {make({{2, 1}, {5, 2}}), Rational(3, 10)},
        {make({{2, 1}, {7, 2}}), Rational(1, 14)},
        {make({{3, 1}, {5, 2}}), Rational(2, 15)},
        {make({{4, 1}, {5, 2}}), Rational(1, 20)},
        {make({{2, 1}, {2, 1}, {2, 1}}), Rational(1, 2)},
        {make({{2, 1}, {2, 1}, {3, 1}}), Rational(1, 3)},
        {make({{2, 1}, {2, 1}, {4, 1}}), Rational(1, 4)},
        {make({{2, 1}, {2, 1}, {5, 1}}), Rational(1, 5)},
        {make({{2, 1}, {2, 1}, {6, 1}}), Rational(1, 6)},
        {make({{2, 1}, {2, 1}, {7, 1}}), Rational(1, 7)},
        {make({{2, 1}, {2, 1}, {8, 1}}), Rational(1, 8)},
        {make({{2, 1}, {3, 1}, {3, 1}}), Rational(1, 6)},
        {make({{2, 1}, {3, 1}, {4, 1}}), Rational(1, 12)},
        {make({{2, 1}, {3, 1}, {5, 1}}), Rational(1, 30)},
    };
    REQUIRE(rep.rows.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        CHECK(rep.rows[k].basket == expected[k].first);
        CHECK(rep.rows[k].aE3 == expected[k].second);
        CHECK(rep.rows[k].index == expected[k].first.index());
    }
    // Exactly the (2,2,r) family is open-ended.
    REQUIRE(rep.family_notes.size() == 1);
    CHECK(rep.family_notes[0].fixed == make({{2, 1}, {2, 1}}).entries);
    CHECK(rep.family_notes[0].varied_v == 1);
    CHECK(rep.family_notes[0].rows_within_rmax == 7);
    for (const auto& row : rep.rows) {
        bool in_family = row.basket.entries.size() == 3 &&
                         row.basket.entries[0] == BasketEntry(2, 1) &&
                         row.basket.entries[1] == BasketEntry(2, 1);
        CHECK(row.family_truncated == in_family);
    }
}

TEST_CASE("min-v sum 2 at r_max = 6") {
    EnumerationReport rep = enumerate_baskets(2, 6);
    // {(5,2)} plus all fifteen pairs {(r1,1),(r2,1)} with 2 <= r1 <= r2 <= 6;
    // B_1 < 1 holds for every pair.
    REQUIRE(rep.rows.size() == 16);
    CHECK(rep.rows[0].basket == make({{5, 2}}));
    CHECK(rep.rows[0].aE3 == Rational(4, 5));
    CHECK(rep.rows[0].max_a == 4);
    int pairs = 0;
    for (const auto& row : rep.rows)
        if (row.basket.entries.size() == 2) {
            ++pairs;
            Int r1 = row.basket.entries[0].r, r2 = row.basket.entries[1].r;
            CHECK(row.aE3 == Rational(r1 + r2, r1 * r2));
        }
    CHECK(pairs == 15);
}

TEST_CASE("coprime pairs at their maximal discrepancy are realized by blow-ups") {
    EnumerationReport rep = enumerate_baskets(2, 8);
    for (const auto& row : rep.rows) {
        if (row.basket.entries.size() != 2)
            continue;
        Int r1 = row.basket.entries[0].r, r2 = row.basket.entries[1].r;
        if (row.basket.entries[0].v != 1 || row.basket.entries[1].v != 1)
            continue;
        if (gcd(r1, r2) == 1) {
            CHECK(row.max_a == r1 + r2);
            CHECK(row.realized_by == std::make_pair(r1, r2));
        } else {
            // The discrepancy bound r1+r2 is never attained and no terminal
            // weighted blow-up carries this basket.
            CHECK(*row.max_a < r1 + r2);
            CHECK_FALSE(row.realized_by.has_value());
        }
    }
    EnumerationReport singles = enumerate_baskets(1, 10);
    for (const auto& row : singles.rows) {
        Int r = row.basket.entries[0].r;
        CHECK(row.max_a == r + 1);
        CHECK(row.realized_by == std::make_pair(Int(1), r));
    }
}

TEST_CASE("entries are deduplicated in canonical form") {
    EnumerationReport rep = enumerate_baskets(3, 8);
    for (const auto& row : rep.rows)
        for (const auto& e : row.basket.entries)
            CHECK(2 * e.v <= e.r);
}

TEST_CASE("identical inputs give identical reports") {
    EnumerationReport a = enumerate_baskets(3, 10);
    EnumerationReport b = enumerate_baskets(3, 10);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t k = 0; k < a.rows.size(); ++k) {
        CHECK(a.rows[k].basket == b.rows[k].basket);
        CHECK(a.rows[k].aE3 == b.rows[k].aE3);
        CHECK(a.rows[k].max_a == b.rows[k].max_a);
        CHECK(a.rows[k].realized_by == b.rows[k].realized_by);
    }
}

TEST_CASE("out-of-range arguments are rejected") {
    CHECK_THROWS_AS(enumerate_baskets(4, 8), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_baskets(-1, 8), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_baskets(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(certify_s3_bound(7), std::invalid_argument);
    CHECK_THROWS_AS(certify_case_bounds(1), std::invalid_argument);
}

TEST_CASE("the min-v-sum-3 certificate proves a <= 3") {
    S3Certificate cert = certify_s3_bound(12);
    CHECK(cert.all_ok);
    CHECK(cert.records.size() >= 16);
    for (const auto& rec : cert.records) {
        CHECK(rec.ok);
        if (rec.max_a)
            CHECK(*rec.max_a <= 3);
        if (rec.basket == Basket({BasketEntry(7, 3)}))
            CHECK(rec.max_a == 2);
        if (rec.basket == Basket({BasketEntry(2, 1), BasketEntry(3, 1), BasketEntry(5, 1)}))
            CHECK_FALSE(rec.max_a.has_value());
    }
}

TEST_CASE("the case-bound certificate pins every family") {
    CaseCertificate cert = certify_case_bounds(12);
    CHECK(cert.all_ok);
    for (const auto& rec : cert.single_entry) {
        CHECK(rec.max_a == rec.r + 1);
        CHECK(rec.band_ok);
    }
    for (const auto& rec : cert.pair_entry) {
        CHECK(rec.bound_ok);
        CHECK(rec.bands_ok);
        CHECK(rec.bound_attained == (gcd(rec.r1, rec.r2) == 1));
    }
    for (const auto& rec : cert.double_v) {
        CHECK(rec.ok);
        CHECK(rec.max_a == 4);
    }
    // Example rows from the analysis: {(4,1)} caps at a = 5 and {(5,2)} at 4.
    bool saw_r4 = false, saw_52 = false;
    for (const auto& rec : cert.single_entry)
        if (rec.r == 4) {
            saw_r4 = true;
            CHECK(rec.max_a == 5);
        }
    for (const auto& rec : cert.double_v)
        if (rec.r == 5) {
            saw_52 = true;
            CHECK(rec.max_a == 4);
        }
    CHECK(saw_r4);
    CHECK(saw_52);
}
