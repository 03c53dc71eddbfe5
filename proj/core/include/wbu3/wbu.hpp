#pragma once

#include <array>
#include <optional>
#include <vector>

#include "wbu3/basket.hpp"
#include "wbu3/monomial.hpp"

namespace wbu3 {

/// A nontrivial cyclic quotient chart of a weighted blow-up: raw toric form
/// (index + action weights) plus, when the type admits one, the terminal
/// presentation 1/r(1,-1,b').  Non-terminal charts may have no such form.
struct ChartQuotient {
    int axis;                        // 0 = x, 1 = y, 2 = z chart
    Int index;                       // order of the cyclic group
    std::array<Int, 3> raw_weights;  // action weights reduced mod index
    std::optional<QuotientSingularity> normalized;
};

/// Full invariant profile of the weighted blow-up of a smooth 3-fold point
/// with weights (1, a, b), gcd(a,b) = 1, a <= b:
/// discrepancy a+b, E^3 = 1/(ab), chart singularities, basket, and the
/// inverse e of the discrepancy mod the basket index.
struct WbuProfile {
    Int a = 1;
    Int b = 1;
    Int discrepancy = 2;
    Rational E3{1};
    std::vector<ChartQuotient> charts;
    Basket basket;
    Int e = 1;
};

/// Builds the profile and cross-validates the derived basket against the
/// degree-one identity 1 = discrepancy*E3/2 + B_1 before returning.
/// Throws std::domain_error on non-coprime or nonpositive input.
WbuProfile wbu_profile(Int a, Int b);

/// Nontrivial quotient charts of the blow-up inserting the ray w: chart j
/// has index w_j and action weights (w_i mod w_j for i != j, -1 at slot j).
std::vector<ChartQuotient> chart_quotients(const WeightTriple& w);

/// Terminality of the weighted blow-up with the given weights: true iff the
/// smallest weight is 1 and the other two are coprime.  Input is sorted
/// internally.
bool weighted_blowup_terminal(const WeightTriple& w);

/// Reid-Tai criterion for 1/r(w1,w2,w3) acting without quasi-reflections:
/// terminal iff every k in 1..r-1 has age sum
/// smallest_residue(k w1, r) + ... + smallest_residue(k w3, r) > r.
bool reid_tai_terminal(Int r, const std::array<Int, 3>& weights);

/// Independent terminality oracle: every nontrivial chart quotient of the
/// blow-up passes Reid-Tai.
bool terminal_by_charts(const WeightTriple& w);

enum class CenterKind { point, curve };

/// One step of the blow-up tower: step i blows up a point (i <= m) or a
/// curve (i > m) and its exceptional divisor carries the monomial valuation
/// with weights (1, min(i,m), i).
struct TowerStep {
    Int i;
    CenterKind kind;
    WeightTriple weights;
    Int discrepancy;            // min(i,m) + i
    Int coeff_final_pullback;   // coefficient of the last divisor in the
                                // pullback of this step's divisor; 1 here
};

/// The point-then-curve blow-up sequence whose last exceptional divisor is
/// the (1, m, n) weighted blow-up valuation.
struct TowerProfile {
    Int m = 1;
    Int n = 1;
    Int discrepancy = 2;  // m + n
    std::vector<TowerStep> steps;
};

/// Builds the tower for coprime 1 <= m <= n.  Certifies along the way that
/// the final divisor appears with coefficient 1 in the pullback of the first
/// (equivalently, the threshold-2 valuation ideal is not the maximal ideal)
/// and that n <= discrepancy - 1.
TowerProfile tower_profile(Int m, Int n);

} // namespace wbu3
