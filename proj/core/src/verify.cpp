#include "wbu3/verify.hpp"

#include <algorithm>
#include <sstream>

namespace wbu3 {

namespace {

std::string basket_str(const Basket& basket) {
    std::string s = "{";
    for (std::size_t k = 0; k < basket.entries.size(); ++k) {
        if (k)
            s += ",";
        s += "(" + std::to_string(basket.entries[k].r) + "," +
             std::to_string(basket.entries[k].v) + ")";
    }
    return s + "}";
}

Basket make_basket(std::initializer_list<std::pair<Int, Int>> entries) {
    std::vector<BasketEntry> v;
    for (auto [r, val] : entries)
        v.emplace_back(r, val);
    return Basket(std::move(v));
}

CriterionResult check_table_reproduction() {
    CriterionResult res{1, "case tables for min-v sum 3 at r_max = 8", false, 0, ""};
    EnumerationReport rep = enumerate_baskets(3, 8);

    std::vector<std::pair<Basket, Rational>> expected;
    expected.emplace_back(make_basket({{7, 3}}), Rational(2, 7));
    expected.emplace_back(make_basket({{8, 3}}), Rational(1, 8));
    expected.emplace_back(make_basket({{2, 1}, {5, 2}}), Rational(3, 10));
    expected.emplace_back(make_basket({{2, 1}, {7, 2}}), Rational(1, 14));
    expected.emplace_back(make_basket({{3, 1}, {5, 2}}), Rational(2, 15));
    expected.emplace_back(make_basket({{4, 1}, {5, 2}}), Rational(1, 20));
    for (Int r3 = 2; r3 <= 8; ++r3)
        expected.emplace_back(make_basket({{2, 1}, {2, 1}, {r3, 1}}),
                              Rational(1, r3));
    expected.emplace_back(make_basket({{2, 1}, {3, 1}, {3, 1}}), Rational(1, 6));
    expected.emplace_back(make_basket({{2, 1}, {3, 1}, {4, 1}}), Rational(1, 12));
    expected.emplace_back(make_basket({{2, 1}, {3, 1}, {5, 1}}), Rational(1, 30));

    res.cases_checked = static_cast<long>(expected.size());
    if (rep.rows.size() != expected.size()) {
        res.detail = "expected " + std::to_string(expected.size()) + " rows, got " +
                     std::to_string(rep.rows.size());
        return res;
    }
    for (std::size_t k = 0; k < expected.size(); ++k) {
        if (rep.rows[k].basket != expected[k].first ||
            rep.rows[k].aE3 != expected[k].second) {
            res.detail = "row " + std::to_string(k) + ": got " +
                         basket_str(rep.rows[k].basket) + " aE3 = " +
                         rep.rows[k].aE3.str() + ", expected " +
                         basket_str(expected[k].first) + " aE3 = " +
                         expected[k].second.str();
            return res;
        }
    }
    if (rep.family_notes.size() != 1 || rep.family_notes[0].varied_v != 1 ||
        rep.family_notes[0].fixed != make_basket({{2, 1}, {2, 1}}).entries) {
        res.detail = "expected exactly the {(2,1),(2,1),(r,1)} family note";
        return res;
    }
    res.pass = true;
    return res;
}

CriterionResult check_colength_oracle() {
    CriterionResult res{2, "colength closed form vs enumeration, l <= 40", false, 0, ""};
    for (Int l = 1; l <= 40; ++l)
        for (Int m = 1; m <= l; ++m) {
            ++res.cases_checked;
            Int closed = colength_closed_form(l, m);
            Int brute = colength_bruteforce(WeightTriple(1, std::min(l, m), l), l);
            if (closed != brute) {
                res.detail = "l=" + std::to_string(l) + " m=" + std::to_string(m) +
                             ": closed " + std::to_string(closed) + " vs brute " +
                             std::to_string(brute);
                return res;
            }
        }
    res.pass = true;
    return res;
}

CriterionResult check_pair_sum() {
    CriterionResult res{3, "contribution pair-sum identity, r <= 25", false, 0, ""};
    for (Int r = 2; r <= 25; ++r)
        for (Int b = 1; b < r; ++b) {
            if (gcd(b, r) != 1)
                continue;
            QuotientSingularity q(r, b);
            for (Int e = 1; e < r; ++e) {
                if (gcd(e, r) != 1)
                    continue;
                Int v = smallest_residue(e * b, r);
                for (Int i = 0; i < r; ++i) {
                    ++res.cases_checked;
                    Rational lhs = contribution(q, i * e) + contribution(q, -i * e);
                    Int iv = smallest_residue(i * v, r);
                    Rational rhs = -Rational(iv * (r - iv), 2 * r);
                    if (lhs != rhs) {
                        res.detail = "r=" + std::to_string(r) + " b=" + std::to_string(b) +
                                     " e=" + std::to_string(e) + " i=" + std::to_string(i) +
                                     ": " + lhs.str() + " vs " + rhs.str();
                        return res;
                    }
                }
            }
        }
    res.pass = true;
    return res;
}

CriterionResult check_wbu_closure() {
    CriterionResult res{4, "weighted blow-up closure, coprime a <= b <= 12", false, 0, ""};
    auto fail = [&](Int a, Int b, const std::string& what) {
        res.detail = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + "): " + what;
    };
    for (Int a = 1; a <= 12; ++a)
        for (Int b = a; b <= 12; ++b) {
            if (gcd(a, b) != 1)
                continue;
            ++res.cases_checked;
            WbuProfile p = wbu_profile(a, b);
            if (aE3_from_basket(p.basket) != Rational(p.discrepancy) * p.E3) {
                fail(a, b, "degree-one identity: " + aE3_from_basket(p.basket).str() +
                               " vs " + (Rational(p.discrepancy) * p.E3).str());
                return res;
            }
            WeightTriple w(1, a, b);
            for (Int i = 1; i <= a + b; ++i) {
                Int rr = rr_colength(p.basket, i);
                Int brute = colength_bruteforce(w, i);
                if (rr != brute) {
                    fail(a, b, "colength at i=" + std::to_string(i) + ": " +
                                   std::to_string(rr) + " vs " + std::to_string(brute));
                    return res;
                }
            }
            Int monomial_dim = dim_mod_max_squared(valuation_ideal(w, 2));
            if (m2_quotient_dim(p.basket) != monomial_dim) {
                fail(a, b, "m^2-quotient dim: " +
                               std::to_string(m2_quotient_dim(p.basket)) + " vs " +
                               std::to_string(monomial_dim));
                return res;
            }
            auto max_a = max_discrepancy(p.basket);
            if (!max_a || *max_a != a + b) {
                fail(a, b, "max discrepancy != a+b");
                return res;
            }
        }
    res.pass = true;
    return res;
}

CriterionResult check_terminality() {
    CriterionResult res{5, "terminality criterion vs Reid-Tai charts, weights <= 10",
                        false, 0, ""};
    for (Int w1 = 1; w1 <= 10; ++w1)
        for (Int w2 = w1; w2 <= 10; ++w2)
            for (Int w3 = w2; w3 <= 10; ++w3) {
                ++res.cases_checked;
                WeightTriple w(w1, w2, w3);
                bool criterion = weighted_blowup_terminal(w);
                bool oracle = terminal_by_charts(w);
                if (criterion != oracle) {
                    res.detail = "(" + std::to_string(w1) + "," + std::to_string(w2) +
                                 "," + std::to_string(w3) + "): criterion " +
                                 (criterion ? "true" : "false") + ", oracle " +
                                 (oracle ? "true" : "false");
                    return res;
                }
            }
    res.pass = true;
    return res;
}

CriterionResult check_certificates(Int r_max) {
    CriterionResult res{6, "discrepancy bound certificates at r_max = " +
                               std::to_string(r_max),
                        false, 0, ""};
    S3Certificate s3 = certify_s3_bound(r_max);
    for (const BoundRecord& rec : s3.records) {
        ++res.cases_checked;
        if (!rec.ok) {
            res.detail = "min-v sum 3 basket " + basket_str(rec.basket) +
                         " admits a = " + std::to_string(*rec.max_a) + " > 3";
            return res;
        }
    }
    CaseCertificate cases = certify_case_bounds(r_max);
    for (const SingleEntryRecord& rec : cases.single_entry) {
        ++res.cases_checked;
        if (!rec.max_a_ok || !rec.band_ok) {
            res.detail = "{(r,1)} with r=" + std::to_string(rec.r) +
                         (rec.failing_i ? ": band fails at i=" + std::to_string(*rec.failing_i)
                                        : ": max a != r+1");
            return res;
        }
    }
    for (const PairEntryRecord& rec : cases.pair_entry) {
        ++res.cases_checked;
        if (!rec.bound_ok || !rec.bands_ok) {
            res.detail = "{(r1,1),(r2,1)} with (r1,r2)=(" + std::to_string(rec.r1) + "," +
                         std::to_string(rec.r2) + ")" +
                         (rec.failing_i ? ": band fails at i=" + std::to_string(*rec.failing_i)
                                        : ": bound a <= r1+r2 fails");
            return res;
        }
    }
    for (const DoubleVRecord& rec : cases.double_v) {
        ++res.cases_checked;
        if (!rec.ok) {
            res.detail = "{(r,2)} with r=" + std::to_string(rec.r) + " admits a > 4";
            return res;
        }
    }
    res.pass = true;
    return res;
}

CriterionResult check_periodicity() {
    CriterionResult res{7, "contribution periodicity and vanishing, r <= 25", false, 0, ""};
    for (Int r = 2; r <= 25; ++r)
        for (Int b = 1; b < r; ++b) {
            if (gcd(b, r) != 1)
                continue;
            QuotientSingularity q(r, b);
            for (Int i = -2 * r; i <= 2 * r; ++i) {
                ++res.cases_checked;
                Rational periodic = contribution(q, i);
                if (periodic != contribution(q, smallest_residue(i, r))) {
                    res.detail = "r=" + std::to_string(r) + " b=" + std::to_string(b) +
                                 " i=" + std::to_string(i) + ": not periodic";
                    return res;
                }
                if (i % r == 0 && !periodic.is_zero()) {
                    res.detail = "r=" + std::to_string(r) + " b=" + std::to_string(b) +
                                 " i=" + std::to_string(i) + ": nonzero at multiple of r";
                    return res;
                }
            }
        }
    res.pass = true;
    return res;
}

CriterionResult check_tower_bounds() {
    CriterionResult res{8, "tower profiles, coprime m <= n <= 12", false, 0, ""};
    for (Int m = 1; m <= 12; ++m)
        for (Int n = m; n <= 12; ++n) {
            if (gcd(m, n) != 1)
                continue;
            ++res.cases_checked;
            TowerProfile t = tower_profile(m, n);
            auto fail = [&](const std::string& what) {
                res.detail = "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) +
                             "): " + what;
            };
            if (t.discrepancy != m + n) {
                fail("discrepancy != m+n");
                return res;
            }
            if (t.n > t.discrepancy - 1) {
                fail("termination bound n <= a-1 fails");
                return res;
            }
            if (static_cast<Int>(t.steps.size()) != n) {
                fail("wrong step count");
                return res;
            }
            for (const TowerStep& s : t.steps) {
                bool point = s.kind == CenterKind::point;
                if (point != (s.i <= m) ||
                    s.weights != WeightTriple(1, std::min(s.i, m), s.i) ||
                    s.coeff_final_pullback != 1) {
                    fail("step " + std::to_string(s.i) + " malformed");
                    return res;
                }
            }
        }
    res.pass = true;
    return res;
}

} // namespace

VerificationReport run_verification(Int r_max) {
    Int rmax = std::max<Int>(r_max, 12);
    VerificationReport report;
    report.criteria.push_back(check_table_reproduction());
    report.criteria.push_back(check_colength_oracle());
    report.criteria.push_back(check_pair_sum());
    report.criteria.push_back(check_wbu_closure());
    report.criteria.push_back(check_terminality());
    report.criteria.push_back(check_certificates(rmax));
    report.criteria.push_back(check_periodicity());
    report.criteria.push_back(check_tower_bounds());
    for (const CriterionResult& c : report.criteria)
        report.all_pass = report.all_pass && c.pass;
    return report;
}

} // namespace wbu3
