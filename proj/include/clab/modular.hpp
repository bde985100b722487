#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace clab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

struct not_invertible : std::runtime_error {
    explicit not_invertible(const char* what) : std::runtime_error(what) {}
};

// Modulus p^e with word-size caps leaving headroom for double-width products.
struct Modulus {
    u64 p = 0;
    int e = 1;
    u64 pe = 0;

    Modulus() = default;
    Modulus(u64 p_, int e_) : p(p_), e(e_) {
        if (e < 1 || e > 3) throw std::invalid_argument("modulus exponent must be 1..3");
        u64 cap = e == 3 ? (u64(1) << 21) : e == 2 ? (u64(1) << 31) : (u64(1) << 40);
        if (p < 5 || p >= cap) throw std::invalid_argument("prime out of supported range");
        pe = p;
        for (int i = 1; i < e; ++i) pe *= p;
    }
};

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }
inline u64 addmod(u64 a, u64 b, u64 m) { u64 s = a + b; return s >= m ? s - m : s; }
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }
inline u64 negmod(u64 a, u64 m) { return a ? m - a : 0; }

// Reduce a possibly negative integer into [0, m).
inline u64 reduce(i64 a, u64 m) {
    i64 r = a % i64(m);
    return u64(r < 0 ? r + i64(m) : r);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace detail {
inline i64 egcd(i64 a, i64 b, i64& x, i64& y) {
    if (!b) { x = 1; y = 0; return a; }
    i64 x1, y1;
    i64 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}
}  // namespace detail

namespace detail {
// Sum streams invert one small denominator per term, so a per-prime table of
// all residue inverses beats the gcd path by a wide margin.  Thread-local:
// sweep workers each own one, keyed by p.
struct InverseCache {
    u64 p = 0;
    std::vector<u64> tab;
};
inline InverseCache& inverse_cache() {
    thread_local InverseCache c;
    return c;
}
}  // namespace detail

inline void warm_inverse_table(u64 p) {
    if (p >= (u64(1) << 21)) return;
    auto& c = detail::inverse_cache();
    if (c.p == p) return;
    c.p = p;
    c.tab.assign(p, 0);
    c.tab[1] = 1;
    for (u64 i = 2; i < p; ++i) c.tab[i] = mulmod(p - p / i, c.tab[p % i], p);
}

// Inverse mod a prime p (e=1 path).
inline u64 inv_mod_p(u64 a, u64 p) {
    a %= p;
    if (!a) throw not_invertible("inverse of multiple of p");
    const auto& c = detail::inverse_cache();
    if (c.p == p) return c.tab[a];
    i64 x, y;
    detail::egcd(i64(a), i64(p), x, y);
    return reduce(x, p);
}

// Inverse mod p^e: egcd at e=1, Newton-lifted once per extra exponent.
inline u64 mod_inv(u64 a, const Modulus& m) {
    a %= m.pe;
    if (a % m.p == 0) throw not_invertible("inverse of multiple of p");
    u64 x = inv_mod_p(a % m.p, m.p);
    u64 mod = m.p;
    for (int i = 1; i < m.e; ++i) {
        mod *= m.p;
        u64 t = mulmod(a % mod, x, mod);
        x = mulmod(x, submod(2 % mod, t, mod), mod);
    }
    return x % m.pe;
}

inline u64 mod_pow(u64 base, u64 exp, const Modulus& m) { return powmod(base, exp, m.pe); }

// num/den mod p^e for signed inputs.
inline u64 rational_residue(i64 num, i64 den, const Modulus& m) {
    return mulmod(reduce(num, m.pe), mod_inv(reduce(den, m.pe), m), m.pe);
}

inline int legendre_symbol(i64 a, u64 p) {
    u64 r = powmod(reduce(a, p), (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

inline int jacobi_symbol(i64 a, u64 n) {
    assert(n & 1);
    u64 ua = reduce(a, n);
    int t = 1;
    while (ua) {
        while ((ua & 1) == 0) {
            ua >>= 1;
            u64 r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(ua, n);
        if ((ua & 3) == 3 && (n & 3) == 3) t = -t;
        ua %= n;
    }
    return n == 1 ? t : 0;
}

// Tonelli-Shanks; returns the root in [0,(p-1)/2], or nullopt for non-residues.
inline std::optional<u64> sqrt_mod_p(u64 a, u64 p) {
    a %= p;
    if (a == 0) return u64(0);
    if (legendre_symbol(i64(a), p) != 1) return std::nullopt;
    u64 r;
    if (p % 4 == 3) {
        r = powmod(a, (p + 1) / 4, p);
    } else {
        u64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        u64 z = 2;
        while (legendre_symbol(i64(z), p) != -1) ++z;
        u64 c = powmod(z, q, p);
        r = powmod(a, (q + 1) / 2, p);
        u64 t = powmod(a, q, p);
        int m = s;
        while (t != 1) {
            u64 t2 = t;
            int i = 0;
            while (t2 != 1) { t2 = mulmod(t2, t2, p); ++i; }
            u64 b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
            r = mulmod(r, b, p);
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            m = i;
        }
    }
    if (r > (p - 1) / 2) r = p - r;
    return r;
}

// Linear-time table of inverses 1..n-1 mod p (n <= p).
inline void build_inverse_table(u64 p, u64 n, std::vector<u64>& inv) {
    inv.assign(n, 0);
    if (n > 1) inv[1] = 1;
    for (u64 i = 2; i < n; ++i) inv[i] = mulmod(p - p / i, inv[p % i], p);
}

// p-adic valuation of a nonzero integer.
inline int val_p(i64 a, u64 p) {
    assert(a != 0);
    u64 ua = a < 0 ? u64(-a) : u64(a);
    int v = 0;
    while (ua % p == 0) { ua /= p; ++v; }
    return v;
}

}  // namespace clab
