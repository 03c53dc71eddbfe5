#include "wbu3/wbu.hpp"

#include <algorithm>

namespace wbu3 {

// 1/r(1,-1,b') presentation of the type {raw[0], raw[1], raw[2]}, if any:
// some unit slot p and a slot q with raw[q] = -raw[p] rescale to (1,-1),
// leaving b' = raw[k]/raw[p] on the third slot.
static std::optional<QuotientSingularity>
terminal_form(Int r, const std::array<Int, 3>& raw) {
    for (int p = 0; p < 3; ++p) {
        if (gcd(raw[p], r) != 1)
            continue;
        Int inv = mod_inverse(raw[p], r);
        for (int q = 0; q < 3; ++q) {
            if (q == p || smallest_residue(raw[p] + raw[q], r) != 0)
                continue;
            Int b = smallest_residue(inv * raw[3 - p - q], r);
            if (b != 0 && gcd(b, r) == 1)
                return QuotientSingularity(r, b);
        }
    }
    return std::nullopt;
}

std::vector<ChartQuotient> chart_quotients(const WeightTriple& w) {
    std::vector<ChartQuotient> out;
    for (int j = 0; j < 3; ++j) {
        Int r = w[j];
        if (r < 2)
            continue;
        std::array<Int, 3> raw;
        for (int i = 0; i < 3; ++i)
            raw[i] = (i == j) ? r - 1 : smallest_residue(w[i], r);
        out.push_back({j, r, raw, terminal_form(r, raw)});
    }
    return out;
}

WbuProfile wbu_profile(Int a, Int b) {
    if (a < 1 || b < 1)
        throw std::domain_error("wbu_profile: weights must be positive");
    if (a > b)
        throw std::domain_error("wbu_profile: expected a <= b");
    if (gcd(a, b) != 1)
        throw std::domain_error("wbu_profile: a and b must be coprime");

    WbuProfile p;
    p.a = a;
    p.b = b;
    p.discrepancy = a + b;
    p.E3 = Rational(1, a * b);
    p.charts = chart_quotients(WeightTriple(1, a, b));

    Int index = 1;
    for (const auto& c : p.charts)
        index = lcm(index, c.index);
    p.e = mod_inverse(p.discrepancy, index);

    std::vector<BasketEntry> entries;
    for (const auto& c : p.charts) {
        if (!c.normalized)
            throw std::logic_error("wbu_profile: chart has no 1/r(1,-1,b) form");
        entries.emplace_back(c.index,
                             smallest_residue(p.e * c.normalized->b, c.index));
    }
    p.basket = Basket(std::move(entries));

    // The chart-derived basket is never trusted as-is: it has to reproduce
    // 1 = discrepancy*E3/2 + B_1 exactly.
    Rational lhs = Rational(p.discrepancy) * p.E3 / Rational(2) +
                   basket_B(p.basket, 1);
    if (lhs != Rational(1))
        throw std::logic_error("wbu_profile: chart basket fails the degree-one identity");
    if (p.basket.index() != index)
        throw std::logic_error("wbu_profile: basket index mismatch");
    return p;
}

bool weighted_blowup_terminal(const WeightTriple& w) {
    WeightTriple s = canonicalize(w).weights;
    return s.wx == 1 && gcd(s.wy, s.wz) == 1;
}

bool reid_tai_terminal(Int r, const std::array<Int, 3>& weights) {
    if (r < 2)
        throw std::domain_error("reid_tai_terminal: index must be >= 2");
    for (Int k = 1; k < r; ++k) {
        Int age_sum = 0;
        for (Int w : weights)
            age_sum += smallest_residue(k * w, r);
        if (age_sum <= r)
            return false;
    }
    return true;
}

bool terminal_by_charts(const WeightTriple& w) {
    for (const auto& c : chart_quotients(w))
        if (!reid_tai_terminal(c.index, c.raw_weights))
            return false;
    return true;
}

TowerProfile tower_profile(Int m, Int n) {
    if (m < 1 || n < m)
        throw std::domain_error("tower_profile: expected 1 <= m <= n");
    if (gcd(m, n) != 1)
        throw std::domain_error("tower_profile: m and n must be coprime "
                                "(the final step would not be terminal)");

    TowerProfile t;
    t.m = m;
    t.n = n;
    t.discrepancy = m + n;
    if (n > t.discrepancy - 1)
        throw std::logic_error("tower_profile: termination bound violated");

    // Coefficient-1 certificate: some coordinate has valuation 1 at the
    // final step, i.e. the threshold-2 valuation ideal is strictly smaller
    // than the maximal ideal.
    if (is_maximal_ideal(valuation_ideal(WeightTriple(1, m, n), 2)))
        throw std::logic_error("tower_profile: first-divisor coefficient exceeds 1");

    for (Int i = 1; i <= n; ++i) {
        TowerStep step;
        step.i = i;
        step.kind = (i <= m) ? CenterKind::point : CenterKind::curve;
        step.weights = WeightTriple(1, std::min(i, m), i);
        step.discrepancy = std::min(i, m) + i;
        step.coeff_final_pullback = 1;
        t.steps.push_back(step);
    }
    return t;
}

} // namespace wbu3
