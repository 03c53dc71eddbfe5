#pragma once

#include <optional>
#include <vector>

#include "wbu3/rational.hpp"

namespace wbu3 {

/// Terminal cyclic quotient singularity of type 1/r(1,-1,b), gcd(b,r) = 1.
struct QuotientSingularity {
    Int r = 2;
    Int b = 1;

    QuotientSingularity(Int r_, Int b_);
};

/// One fictitious singularity of a basket: index r and the residue
/// v = smallest_residue(e*b, r), coprime to r.  Stored canonically with
/// v <= r-v; the value given on input is kept for display since every
/// implemented formula is invariant under v -> r-v.
struct BasketEntry {
    Int r = 2;
    Int v = 1;        // canonical, v <= r - v
    Int v_input = 1;  // as constructed

    BasketEntry(Int r_, Int v_);

    auto operator<=>(const BasketEntry& o) const {
        if (auto c = r <=> o.r; c != 0)
            return c;
        return v <=> o.v;
    }
    bool operator==(const BasketEntry& o) const { return r == o.r && v == o.v; }
};

/// Multiset of fictitious terminal quotient points, kept sorted by (r, v).
struct Basket {
    std::vector<BasketEntry> entries;

    Basket() = default;
    explicit Basket(std::vector<BasketEntry> e);

    bool empty() const { return entries.empty(); }
    /// Global Gorenstein index: lcm of the entry indices, 1 when empty.
    Int index() const;

    bool operator==(const Basket&) const = default;
};

/// Reid's local Riemann-Roch contribution c_Q(D) for a divisor D with
/// D ~ i K locally at a 1/r(1,-1,b) point:
///
///   c_Q = -ibar (r^2-1)/(12r) + sum_{j=1}^{ibar-1} jbbar (r - jbbar)/(2r)
///
/// where bar is the smallest residue mod r.  Depends only on i mod r and
/// vanishes when r | i.
Rational contribution(const QuotientSingularity& q, Int i);

/// B_i = sum over the basket of ivbar (r - ivbar)/(2r).  This equals
/// -(c_Q(iE) + c_Q(-iE)) summed over the basket for any chart data (r, b)
/// and inverse e realizing v = ebbar.
Rational basket_B(const Basket& basket, Int i);

/// aE^3 recovered from the degree-one identity 1 = aE^3/2 + B_1.
/// Throws infeasible_basket_error when B_1 >= 1 (no geometry can carry
/// such a basket).
Rational aE3_from_basket(const Basket& basket);

class infeasible_basket_error : public std::domain_error {
public:
    explicit infeasible_basket_error(const std::string& what)
        : std::domain_error(what) {}
};

/// True iff r E^3 is a positive integer for E^3 = aE3_from_basket / a and
/// r the basket index.
bool rE3_integral(const Basket& basket, Int a);

/// Largest discrepancy a >= 2 passing rE3_integral, scanning the bounded
/// range 2 .. r * num(aE3); nullopt when no a qualifies.
std::optional<Int> max_discrepancy(const Basket& basket);

/// Colength of f_*O(-iE) predicted by Riemann-Roch:
///
///   i^2 - (1/2) sum over entries of min_{0<=j<i} ((1+j)j r + i(i-1-2j) v).
///
/// Valid as a dimension only for 1 <= i <= a of an attached blow-up profile;
/// the function itself evaluates the formula for any i >= 1 and leaves range
/// enforcement to callers (the CLI refuses out-of-range i when a profile is
/// present).  Invariant under v -> r-v entry-wise.
Int rr_colength(const Basket& basket, Int i);

/// Sum of min(v, r-v) over the basket; equals dim_k f_*O(-2E)/m^2 and caps
/// the number of fictitious non-Gorenstein points at 3.
Int m2_quotient_dim(const Basket& basket);

/// Sum of the graded dimensions d(-j) = dim f_*O(-jE)/f_*O(-(j+1)E) for
/// 1 <= j < i, via (i^2-1)/2 * aE3 + B_i - B_1.  With aE3 taken from the
/// basket, 1 + this sum equals rr_colength.
Rational graded_dim_sum(const Basket& basket, const Rational& aE3, Int i);

} // namespace wbu3
