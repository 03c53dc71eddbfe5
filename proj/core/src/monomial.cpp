#include "wbu3/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace wbu3 {

WeightTriple::WeightTriple(Int x, Int y, Int z) : wx(x), wy(y), wz(z) {
    if (wx < 1 || wy < 1 || wz < 1)
        throw std::domain_error("WeightTriple: weights must be positive");
}

CanonicalWeights canonicalize(const WeightTriple& w) {
    std::array<int, 3> perm{0, 1, 2};
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return w[a] < w[b]; });
    return {WeightTriple(w[perm[0]], w[perm[1]], w[perm[2]]), perm};
}

std::string to_string(const Monomial& m) {
    if (m.s == 0 && m.t == 0 && m.u == 0)
        return "1";
    std::string out;
    auto piece = [&](char var, Int e) {
        if (e == 0)
            return;
        if (!out.empty())
            out += '*';
        out += var;
        if (e > 1)
            out += '^' + std::to_string(e);
    };
    piece('x', m.s);
    piece('y', m.t);
    piece('z', m.u);
    return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(generators.begin(), generators.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal valuation_ideal(const WeightTriple& w, Int threshold) {
    if (threshold < 1)
        throw std::domain_error("valuation_ideal: threshold must be positive");
    auto bound = [&](Int weight) { return (threshold + weight - 1) / weight; };

    // The member set is upward closed, so a member is a minimal generator
    // exactly when every single-step decrement drops below the threshold.
    std::vector<Monomial> gens;
    for (Int s = 0; s <= bound(w.wx); ++s)
        for (Int t = 0; t <= bound(w.wy); ++t)
            for (Int u = 0; u <= bound(w.wz); ++u) {
                Monomial m{s, t, u};
                Int val = m.weight(w);
                if (val < threshold)
                    continue;
                if ((s > 0 && val - w.wx >= threshold) ||
                    (t > 0 && val - w.wy >= threshold) ||
                    (u > 0 && val - w.wz >= threshold))
                    continue;
                gens.push_back(m);
            }
    std::sort(gens.begin(), gens.end());
    return MonomialIdeal{std::move(gens)};
}

Int colength_bruteforce(const WeightTriple& w, Int threshold) {
    if (threshold < 1)
        throw std::domain_error("colength_bruteforce: threshold must be positive");
    Int count = 0;
    for (Int s = 0; s * w.wx < threshold; ++s)
        for (Int t = 0; s * w.wx + t * w.wy < threshold; ++t)
            for (Int u = 0; s * w.wx + t * w.wy + u * w.wz < threshold; ++u)
                ++count;
    return count;
}

Int colength_closed_form(Int l, Int m) {
    if (l < 1 || m < 1)
        throw std::domain_error("colength_closed_form: arguments must be positive");
    Wide best = 0;
    for (Int j = 0; j < l; ++j) {
        Wide v = (Wide(1 + j) * m - 2 * Wide(l)) * j;
        if (v < best)
            best = v;
    }
    // (1+j)mj - 2lj = mj(j+1) - 2lj is even for every j, so the half is exact.
    return narrow_checked(Wide(l) - best / 2, "colength_closed_form: overflow");
}

bool is_maximal_ideal(const MonomialIdeal& ideal) {
    return ideal.generators ==
           std::vector<Monomial>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
}

bool inside_squared_maximal(const MonomialIdeal& ideal) {
    return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                       [](const Monomial& g) { return g.total_degree() >= 2; });
}

Int dim_mod_max_squared(const MonomialIdeal& ideal) {
    return std::count_if(ideal.generators.begin(), ideal.generators.end(),
                         [](const Monomial& g) { return g.total_degree() == 1; });
}

} // namespace wbu3
