#pragma once

#include <array>
#include <string>
#include <vector>

#include "wbu3/arith.hpp"

namespace wbu3 {

/// Valuation weights of the local parameters x, y, z.  Entries are positive
/// but need not be sorted or coprime; canonicalize() reports the sorted form
/// together with the permutation that was applied.
struct WeightTriple {
    Int wx = 1;
    Int wy = 1;
    Int wz = 1;

    WeightTriple() = default;
    WeightTriple(Int x, Int y, Int z);

    Int operator[](int i) const { return i == 0 ? wx : (i == 1 ? wy : wz); }
    bool sorted() const { return wx <= wy && wy <= wz; }
    bool operator==(const WeightTriple&) const = default;
};

struct CanonicalWeights {
    WeightTriple weights;        // sorted ascending
    std::array<int, 3> perm;     // perm[i] = original axis placed at slot i
};

CanonicalWeights canonicalize(const WeightTriple& w);

/// Exponent triple of a monomial x^s y^t z^u.
struct Monomial {
    Int s = 0;
    Int t = 0;
    Int u = 0;

    Int total_degree() const { return s + t + u; }
    bool divides(const Monomial& o) const {
        return s <= o.s && t <= o.t && u <= o.u;
    }
    Int weight(const WeightTriple& w) const { return s * w.wx + t * w.wy + u * w.wz; }
    auto operator<=>(const Monomial&) const = default;
};

std::string to_string(const Monomial& m);

/// Monomial ideal in k[x,y,z] given by its minimal generators, which always
/// form an antichain under componentwise divisibility and are kept sorted
/// lexicographically by (s,t,u).
struct MonomialIdeal {
    std::vector<Monomial> generators;

    bool contains(const Monomial& m) const;
    bool operator==(const MonomialIdeal&) const = default;
};

/// Minimal generators of the ideal spanned by all monomials of weight
/// >= threshold.  Exponents of the generators stay below
/// ceil(threshold/weight)+1 per variable.
MonomialIdeal valuation_ideal(const WeightTriple& w, Int threshold);

/// Number of monomials of weight < threshold, i.e. the colength of
/// valuation_ideal(w, threshold).  Plain box enumeration.
Int colength_bruteforce(const WeightTriple& w, Int threshold);

/// Colength of (x^s y^t z^u | s + min{l,m} t + l u >= l) in closed form:
/// l - (1/2) min_{0<=j<l} ((1+j)m - 2l) j.
Int colength_closed_form(Int l, Int m);

/// True iff the ideal is exactly (x, y, z).
bool is_maximal_ideal(const MonomialIdeal& ideal);

/// True iff every minimal generator has total degree >= 2, i.e. the ideal
/// sits inside the square of the maximal ideal.
bool inside_squared_maximal(const MonomialIdeal& ideal);

/// dim_k I/m^2 for I inside the maximal ideal m: the count of degree-one
/// generators (distinct variables are independent mod m^2).
Int dim_mod_max_squared(const MonomialIdeal& ideal);

} // namespace wbu3
