#include "wbu3/basket.hpp"

#include <algorithm>

namespace wbu3 {

QuotientSingularity::QuotientSingularity(Int r_, Int b_) : r(r_), b(b_) {
    if (r < 2)
        throw std::domain_error("QuotientSingularity: index must be >= 2");
    if (b < 1 || b > r - 1)
        throw std::domain_error("QuotientSingularity: b must lie in [1, r-1]");
    if (gcd(b, r) != 1)
        throw std::domain_error("QuotientSingularity: b must be coprime to r");
}

BasketEntry::BasketEntry(Int r_, Int v_) : r(r_), v_input(v_) {
    if (r < 2)
        throw std::domain_error("BasketEntry: index must be >= 2");
    Int vr = smallest_residue(v_, r);
    if (vr == 0 || gcd(vr, r) != 1)
        throw std::domain_error("BasketEntry: v must be a unit mod r");
    v = std::min(vr, r - vr);
}

Basket::Basket(std::vector<BasketEntry> e) : entries(std::move(e)) {
    std::sort(entries.begin(), entries.end());
}

Int Basket::index() const {
    Int r = 1;
    for (const auto& e : entries)
        r = lcm(r, e.r);
    return r;
}

Rational contribution(const QuotientSingularity& q, Int i) {
    Int ibar = smallest_residue(i, q.r);
    Rational c = Rational(-ibar) * Rational(q.r * q.r - 1, 12 * q.r);
    for (Int j = 1; j < ibar; ++j) {
        Int jb = smallest_residue(j * q.b, q.r);
        c += Rational(jb * (q.r - jb), 2 * q.r);
    }
    return c;
}

Rational basket_B(const Basket& basket, Int i) {
    Rational sum;
    for (const auto& e : basket.entries) {
        Int iv = smallest_residue(i * e.v, e.r);
        sum += Rational(iv * (e.r - iv), 2 * e.r);
    }
    return sum;
}

Rational aE3_from_basket(const Basket& basket) {
    Rational b1 = basket_B(basket, 1);
    if (b1 >= Rational(1))
        throw infeasible_basket_error("aE3_from_basket: B_1 = " + b1.str() +
                                      " >= 1, basket is infeasible");
    return Rational(2) * (Rational(1) - b1);
}

bool rE3_integral(const Basket& basket, Int a) {
    if (a < 1)
        throw std::domain_error("rE3_integral: a must be positive");
    Rational rE3 = Rational(basket.index()) * aE3_from_basket(basket) / Rational(a);
    return rE3.is_integer() && rE3 > Rational(0);
}

std::optional<Int> max_discrepancy(const Basket& basket) {
    Rational aE3 = aE3_from_basket(basket);
    Wide bound = Wide(basket.index()) * aE3.num();
    if (bound > 100'000'000)
        throw std::domain_error("max_discrepancy: scan bound exceeds 10^8");
    std::optional<Int> best;
    for (Int a = 2; a <= static_cast<Int>(bound); ++a)
        if (rE3_integral(basket, a))
            best = a;
    return best;
}

Int rr_colength(const Basket& basket, Int i) {
    if (i < 1)
        throw std::domain_error("rr_colength: i must be positive");
    Wide total = 0;
    for (const auto& e : basket.entries) {
        Wide best = 0;
        bool first = true;
        for (Int j = 0; j < i; ++j) {
            Wide cand = Wide(1 + j) * j * e.r + Wide(i) * (i - 1 - 2 * j) * e.v;
            if (first || cand < best) {
                best = cand;
                first = false;
            }
        }
        // (1+j)jr is even and i(i-1-2j)v = (i(i-1) - 2ij)v is even, so each
        // entry's minimum halves exactly.
        total += best / 2;
    }
    return narrow_checked(Wide(i) * i - total, "rr_colength: overflow");
}

Int m2_quotient_dim(const Basket& basket) {
    Int sum = 0;
    for (const auto& e : basket.entries)
        sum += std::min(e.v, e.r - e.v);
    return sum;
}

Rational graded_dim_sum(const Basket& basket, const Rational& aE3, Int i) {
    if (i < 1)
        throw std::domain_error("graded_dim_sum: i must be positive");
    Rational quad = Rational(i * i - 1, 2) * aE3;
    return quad + basket_B(basket, i) - basket_B(basket, 1);
}

} // namespace wbu3
