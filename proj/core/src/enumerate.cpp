#include "wbu3/enumerate.hpp"

#include <algorithm>
#include <map>

namespace wbu3 {

namespace {

// Candidate entries in canonical form, ordered by (r, v).
std::vector<BasketEntry> entry_pool(Int s_target, Int r_max) {
    std::vector<BasketEntry> pool;
    for (Int r = 2; r <= r_max; ++r)
        for (Int v = 1; 2 * v <= r && v <= s_target; ++v)
            if (gcd(v, r) == 1)
                pool.emplace_back(r, v);
    return pool;
}

void collect(const std::vector<BasketEntry>& pool, std::size_t from,
             Int remaining, std::vector<BasketEntry>& picked,
             std::vector<Basket>& out) {
    if (remaining == 0) {
        out.emplace_back(picked);
        return;
    }
    for (std::size_t k = from; k < pool.size(); ++k) {
        if (pool[k].v > remaining)
            continue;
        picked.push_back(pool[k]);
        collect(pool, k, remaining - pool[k].v, picked, out);
        picked.pop_back();
    }
}

// A basket opens an unbounded family when growing the index of its largest
// entry keeps B_1 below 1 for every size, i.e. when the fixed part plus the
// limit value v/2 of the varied term stays <= 1.
bool unbounded_in_last_entry(const Basket& basket) {
    if (basket.empty())
        return false;
    const BasketEntry& last = basket.entries.back();
    Rational fixed;
    for (std::size_t k = 0; k + 1 < basket.entries.size(); ++k) {
        const auto& e = basket.entries[k];
        fixed += Rational(e.v * (e.r - e.v), 2 * e.r);
    }
    return fixed + Rational(last.v, 2) <= Rational(1);
}

std::optional<std::pair<Int, Int>> realization(const Basket& basket,
                                               std::optional<Int> max_a) {
    if (!max_a)
        return std::nullopt;
    for (Int m = 1; 2 * m <= *max_a; ++m) {
        Int n = *max_a - m;
        if (gcd(m, n) != 1)
            continue;
        if (wbu_profile(m, n).basket == basket)
            return std::make_pair(m, n);
    }
    return std::nullopt;
}

} // namespace

EnumerationReport enumerate_baskets(Int s_target, Int r_max) {
    if (s_target < 0 || s_target > 3)
        throw std::invalid_argument(
            "enumerate_baskets: the min-v sum is capped at 3 = dim m/m^2");
    if (r_max < 2)
        throw std::invalid_argument("enumerate_baskets: r_max must be >= 2");

    EnumerationReport report;
    report.s_target = s_target;
    report.r_max = r_max;

    std::vector<Basket> candidates;
    std::vector<BasketEntry> picked;
    collect(entry_pool(s_target, r_max), 0, s_target, picked, candidates);

    std::sort(candidates.begin(), candidates.end(),
              [](const Basket& a, const Basket& b) {
                  if (a.entries.size() != b.entries.size())
                      return a.entries.size() < b.entries.size();
                  return a.entries < b.entries;
              });

    std::map<std::pair<std::vector<BasketEntry>, Int>, Int> families;
    for (const Basket& basket : candidates) {
        if (basket_B(basket, 1) >= Rational(1))
            continue;
        EnumerationRow row;
        row.basket = basket;
        row.aE3 = aE3_from_basket(basket);
        row.index = basket.index();
        row.max_a = max_discrepancy(basket);
        row.realized_by = realization(basket, row.max_a);
        row.family_truncated = unbounded_in_last_entry(basket);
        if (row.family_truncated) {
            std::vector<BasketEntry> fixed(basket.entries.begin(),
                                           basket.entries.end() - 1);
            families[{fixed, basket.entries.back().v}] += 1;
        }
        report.rows.push_back(std::move(row));
    }

    for (const auto& [key, count] : families)
        report.family_notes.push_back({key.first, key.second, count});
    return report;
}

S3Certificate certify_s3_bound(Int r_max) {
    if (r_max < 8)
        throw std::invalid_argument(
            "certify_s3_bound: r_max must be >= 8 to cover the bounded cases");
    S3Certificate cert;
    cert.r_max = r_max;
    for (const EnumerationRow& row : enumerate_baskets(3, r_max).rows) {
        BoundRecord rec;
        rec.basket = row.basket;
        rec.aE3 = row.aE3;
        rec.index = row.index;
        rec.max_a = row.max_a;
        rec.bound = 3;
        rec.ok = !row.max_a || *row.max_a <= 3;
        cert.all_ok = cert.all_ok && rec.ok;
        cert.records.push_back(std::move(rec));
    }
    return cert;
}

namespace {

// min_{0<=j<i} ((1+j)r - 2i) j, the defect term of the colength bands.
Int band_min(Int r, Int i) {
    Int best = 0;
    for (Int j = 0; j < i; ++j)
        best = std::min(best, ((1 + j) * r - 2 * i) * j);
    return best;
}

} // namespace

CaseCertificate certify_case_bounds(Int r_max) {
    if (r_max < 2)
        throw std::invalid_argument("certify_case_bounds: r_max must be >= 2");
    CaseCertificate cert;
    cert.r_max = r_max;

    for (Int r = 2; r <= r_max; ++r) {
        SingleEntryRecord rec;
        rec.r = r;
        Basket basket({BasketEntry(r, 1)});
        rec.max_a = max_discrepancy(basket);
        rec.max_a_ok = rec.max_a && *rec.max_a == r + 1;
        rec.band_ok = true;
        for (Int i = 1; i <= r + 1 && rec.band_ok; ++i) {
            Int col = rr_colength(basket, i);
            Int floor_val = i * (i + 1) / 2;
            bool expect_eq = i <= r;
            if ((col == floor_val) != expect_eq || col < floor_val) {
                rec.band_ok = false;
                rec.failing_i = i;
            }
        }
        cert.all_ok = cert.all_ok && rec.max_a_ok && rec.band_ok;
        cert.single_entry.push_back(rec);
    }

    for (Int r1 = 2; r1 <= r_max; ++r1)
        for (Int r2 = r1; r2 <= r_max; ++r2) {
            PairEntryRecord rec;
            rec.r1 = r1;
            rec.r2 = r2;
            Basket basket({BasketEntry(r1, 1), BasketEntry(r2, 1)});
            rec.max_a = max_discrepancy(basket);
            rec.bound_ok = !rec.max_a || *rec.max_a <= r1 + r2;
            rec.bound_attained = rec.max_a && *rec.max_a == r1 + r2;
            rec.bands_ok = true;
            for (Int i = 1; i <= r1 + r2 && rec.bands_ok; ++i) {
                Int col = rr_colength(basket, i);
                Int partial = i - band_min(r1, i) / 2;
                if ((col == partial) != (i <= r2) || col < partial ||
                    (partial == i) != (i <= r1)) {
                    rec.bands_ok = false;
                    rec.failing_i = i;
                }
            }
            cert.all_ok = cert.all_ok && rec.bound_ok && rec.bands_ok;
            cert.pair_entry.push_back(rec);
        }

    for (Int r = 5; r <= r_max; r += 2) {
        DoubleVRecord rec;
        rec.r = r;
        Basket basket({BasketEntry(r, 2)});
        rec.max_a = max_discrepancy(basket);
        rec.ok = !rec.max_a || *rec.max_a <= 4;
        cert.all_ok = cert.all_ok && rec.ok;
        cert.double_v.push_back(rec);
    }
    return cert;
}

} // namespace wbu3
