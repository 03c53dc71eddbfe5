#pragma once

#include <cstdint>
#include <stdexcept>

namespace wbu3 {

using Int = std::int64_t;
__extension__ typedef __int128 Wide;

/// Residue of j modulo r in [0, r-1], with floor semantics for negative j
/// (i.e. j - floor(j/r)*r, not the truncating % of C++).
inline Int smallest_residue(Int j, Int r) {
    if (r < 1)
        throw std::domain_error("smallest_residue: modulus must be positive");
    Int s = j % r;
    return s < 0 ? s + r : s;
}

inline Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

inline Wide wide_gcd(Wide a, Wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int gcd(Int a, Int b) { return static_cast<Int>(wide_gcd(a, b)); }

/// lcm of nonnegative operands; the results in scope are tiny but the
/// product is still checked rather than trusted.
inline Int lcm(Int a, Int b) {
    if (a == 0 || b == 0)
        return 0;
    Wide g = wide_gcd(a, b);
    Wide l = wide_abs(Wide(a) / g * Wide(b));
    if (l > Wide(INT64_MAX))
        throw std::overflow_error("lcm: result exceeds 64-bit range");
    return static_cast<Int>(l);
}

inline Int narrow_checked(Wide x, const char* what) {
    if (x > Wide(INT64_MAX) || x < Wide(INT64_MIN))
        throw std::overflow_error(what);
    return static_cast<Int>(x);
}

/// Least positive e with a*e == 1 (mod r).  r = 1 gives e = 1.
inline Int mod_inverse(Int a, Int r) {
    if (r < 1)
        throw std::domain_error("mod_inverse: modulus must be positive");
    if (r == 1)
        return 1;
    Int a0 = smallest_residue(a, r);
    Int old_r = r, cur_r = a0;
    Int old_s = 0, cur_s = 1;
    while (cur_r != 0) {
        Int q = old_r / cur_r;
        Int tmp = old_r - q * cur_r;
        old_r = cur_r;
        cur_r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
    }
    if (old_r != 1)
        throw std::domain_error("mod_inverse: operands are not coprime");
    return smallest_residue(old_s, r);
}

} // namespace wbu3
