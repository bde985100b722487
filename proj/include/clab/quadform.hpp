#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>

#include "clab/modular.hpp"

namespace clab {

// One representation N = a*x^2 + b*y^2 with N = p or 4p, x >= 0, y >= 0,
// smallest y first (and then smallest x), matching the exhaustive scan order.
struct QuadFormRep {
    i64 x = 0;
    i64 y = 0;
    u64 a = 1;
    u64 b = 1;
    bool four_p = false;
};

namespace detail {

inline u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square_u64(u64 n, u64& root) {
    root = isqrt_u64(n);
    return root * root == n;
}

}  // namespace detail

// Exhaustive ascending-y scan; the reference path and the tie-break oracle.
inline std::optional<QuadFormRep> represent_slow(u64 p, u64 a, u64 b, bool four_p) {
    u64 n = four_p ? 4 * p : p;
    for (u64 y = 0; b * y * y <= n; ++y) {
        u64 rem = n - b * y * y;
        if (rem % a) continue;
        u64 x;
        if (detail::is_square_u64(rem / a, x))
            return QuadFormRep{i64(x), i64(y), a, b, four_p};
    }
    return std::nullopt;
}

namespace detail {

// Cornacchia descent for N = x^2 + b*y^2 starting from a square root of -b
// mod N taken in (N/2, N).
inline std::optional<std::pair<u64, u64>> cornacchia_descend(u64 n, u64 b, u64 r) {
    u64 prev = n;
    while (u128(r) * r >= n) {
        u64 t = prev % r;
        prev = r;
        r = t;
        if (r == 0) return std::nullopt;
    }
    u64 rem = n - r * r;
    if (rem % b) return std::nullopt;
    u64 y;
    if (!is_square_u64(rem / b, y)) return std::nullopt;
    return std::make_pair(r, y);
}

}  // namespace detail

// Fast path for the a = 1 forms used here: Cornacchia on N = p, and for
// N = 4p (all with b odd, b % 4 == 3) square roots of -b mod 4p assembled
// from the mod-4 and mod-p components, plus doubling of any N = p solution.
// Ties between candidates are broken to the smallest y to agree with
// represent_slow.
inline std::optional<QuadFormRep> represent(u64 p, u64 a, u64 b, bool four_p) {
    if (a != 1) return represent_slow(p, a, b, four_p);
    auto rp = sqrt_mod_p(u64(reduce(-i64(b % p), p)), p);
    std::optional<QuadFormRep> best;
    auto offer = [&](u64 x, u64 y) {
        if (!best || i64(y) < best->y || (i64(y) == best->y && i64(x) < best->x))
            best = QuadFormRep{i64(x), i64(y), a, b, four_p};
    };
    if (!four_p) {
        if (b % p == 0) {
            u64 x;
            if (detail::is_square_u64(p, x)) offer(x, 0);
            return best ? best : represent_slow(p, a, b, four_p);
        }
        if (!rp) return std::nullopt;
        for (u64 r0 : {*rp, p - *rp}) {
            if (r0 == 0) continue;
            u64 r = r0 <= p / 2 ? p - r0 : r0;
            if (auto xy = detail::cornacchia_descend(p, b, r)) offer(xy->first, xy->second);
        }
        u64 x;
        if (p % b == 0 && detail::is_square_u64(p / b, x)) offer(0, x);
        return best;
    }
    u64 n = 4 * p;
    if (rp && b % 4 == 3 && b % p != 0) {
        u64 inv4 = inv_mod_p(4, p);
        for (u64 r4 : {u64(1), u64(3)}) {
            for (u64 rpp : {*rp, p - *rp}) {
                // CRT: r == r4 (mod 4), r == rpp (mod p)
                u64 k = mulmod(u64(reduce(i64(rpp % p) - i64(r4 % p), p)), inv4, p);
                u64 r = (r4 + 4 * k) % n;
                if (r == 0) continue;
                if (r <= n / 2) r = n - r;
                if (auto xy = detail::cornacchia_descend(n, b, r)) offer(xy->first, xy->second);
            }
        }
    }
    if (auto half = represent(p, a, b, false)) offer(u64(2 * half->x), u64(2 * half->y));
    u64 x;
    if (n % b == 0 && detail::is_square_u64(n / b, x)) offer(0, x);
    if (detail::is_square_u64(n, x)) offer(x, 0);
    return best;
}

// Flip the sign of v so that v % 3 == 1 (v must be coprime to 3).
inline i64 normalize_mod3(i64 v) {
    i64 r = ((v % 3) + 3) % 3;
    return r == 1 ? v : -v;
}

// Flip the sign of v so that v % 4 == 1 (v must be odd).
inline i64 normalize_mod4(i64 v) {
    i64 r = ((v % 4) + 4) % 4;
    return r == 1 ? v : -v;
}

}  // namespace clab
