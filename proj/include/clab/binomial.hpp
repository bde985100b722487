#pragma once

#include <cstdint>

#include "clab/modular.hpp"
#include "clab/quadext.hpp"

namespace clab {

// p^val * unit with p not dividing unit; the unit is tracked mod p^e without
// intermediate normalization so products and exact quotients stay faithful.
// When val >= e the represented residue is 0 mod p^e.
struct PUnit {
    int val = 0;
    u64 unit = 1;

    u64 reconstruct(const Modulus& m) const {
        if (val >= m.e) return 0;
        u64 r = unit % m.pe;
        for (int i = 0; i < val; ++i) r = mulmod(r, m.p, m.pe);
        return r;
    }
};

// Multiply by integer n > 0, stripping its p-part into val.
inline void punit_mul(PUnit& x, u64 n, const Modulus& m) {
    while (n % m.p == 0) { n /= m.p; ++x.val; }
    x.unit = mulmod(x.unit, n % m.pe, m.pe);
}

// Exact division by integer n > 0 (valid when the represented value stays integral
// across a full update step).
inline void punit_div(PUnit& x, u64 n, const Modulus& m) {
    while (n % m.p == 0) { n /= m.p; --x.val; }
    x.unit = mulmod(x.unit, mod_inv(n % m.pe, m), m.pe);
}

inline PUnit punit_mul(const PUnit& a, const PUnit& b, const Modulus& m) {
    return PUnit{a.val + b.val, mulmod(a.unit, b.unit, m.pe)};
}

inline PUnit punit_div(const PUnit& a, const PUnit& b, const Modulus& m) {
    return PUnit{a.val - b.val, mulmod(a.unit, mod_inv(b.unit, m), m.pe)};
}

// n! as a PUnit, n <= 3(p-1): streamed product, Legendre valuation implicit.
inline PUnit factorial_punit(u64 n, const Modulus& m) {
    PUnit r;
    for (u64 i = 2; i <= n; ++i) punit_mul(r, i, m);
    return r;
}

inline PUnit binom_punit(u64 n, u64 k, const Modulus& m) {
    PUnit r = factorial_punit(n, m);
    r = punit_div(r, factorial_punit(k, m), m);
    r = punit_div(r, factorial_punit(n - k, m), m);
    return r;
}

namespace detail {

// Advance C(2k,k) and C(3k,k) to k+1:
//   C(2k+2,k+1) = C(2k,k) * 2(2k+1)/(k+1)
//   C(3k+3,k+1) = C(3k,k) * 3(3k+1)(3k+2) / (2(k+1)(2k+1))
struct CentralPair {
    PUnit c2;  // C(2k,k)
    PUnit c3;  // C(3k,k)

    void advance(u64 k, const Modulus& m) {
        punit_mul(c2, 2 * (2 * k + 1), m);
        punit_div(c2, k + 1, m);
        punit_mul(c3, 3 * (3 * k + 1), m);
        punit_mul(c3, 3 * k + 2, m);
        punit_div(c3, 2 * (k + 1), m);
        punit_div(c3, 2 * k + 1, m);
    }
};

}  // namespace detail

// sum_{k=0}^{p-1} C(2k,k)^2 C(3k,k) m_val^{-k} mod p^e.
inline u64 sum_central(i64 m_val, const Modulus& m) {
    u64 mv = reduce(m_val, m.pe);
    if (mv % m.p == 0) throw not_invertible("sum_central needs p-invertible m");
    u64 invm = mod_inv(mv, m);
    detail::CentralPair c;
    u64 pw = 1, acc = 0;
    for (u64 k = 0; k < m.p; ++k) {
        PUnit term = punit_mul(punit_mul(c.c2, c.c2, m), c.c3, m);
        acc = addmod(acc, mulmod(term.reconstruct(m), pw, m.pe), m.pe);
        if (k + 1 < m.p) {
            c.advance(k, m);
            pw = mulmod(pw, invm, m.pe);
        }
    }
    return acc;
}

// sum_{k=0}^{p-1} (a*k + b) C(2k,k)^2 C(3k,k) m_val^{-k} mod p^e.
inline u64 sum_central_weighted(i64 a, i64 b, i64 m_val, const Modulus& m) {
    u64 mv = reduce(m_val, m.pe);
    if (mv % m.p == 0) throw not_invertible("sum_central_weighted needs p-invertible m");
    u64 invm = mod_inv(mv, m);
    u64 ua = reduce(a, m.pe), ub = reduce(b, m.pe);
    detail::CentralPair c;
    u64 pw = 1, acc = 0;
    for (u64 k = 0; k < m.p; ++k) {
        PUnit term = punit_mul(punit_mul(c.c2, c.c2, m), c.c3, m);
        u64 w = addmod(mulmod(ua, k % m.pe, m.pe), ub, m.pe);
        acc = addmod(acc, mulmod(mulmod(term.reconstruct(m), pw, m.pe), w, m.pe), m.pe);
        if (k + 1 < m.p) {
            c.advance(k, m);
            pw = mulmod(pw, invm, m.pe);
        }
    }
    return acc;
}

// sum_{k=0}^{klim} C(2k,k) C(3k,k) x^k mod p^e; klim = p-1 gives the paper's
// full range, klim = [p/3] the truncated variant (equal mod p).
inline u64 sum_pair(u64 x, const Modulus& m, u64 klim) {
    x %= m.pe;
    detail::CentralPair c;
    u64 pw = 1, acc = 0;
    for (u64 k = 0; k <= klim; ++k) {
        PUnit term = punit_mul(c.c2, c.c3, m);
        acc = addmod(acc, mulmod(term.reconstruct(m), pw, m.pe), m.pe);
        if (k < klim) {
            c.advance(k, m);
            pw = mulmod(pw, x, m.pe);
        }
    }
    return acc;
}

inline u64 sum_pair(u64 x, const Modulus& m) { return sum_pair(x, m, m.p - 1); }

// Same sums with the argument in R[w]/(w^2-d), R = Z/p^e.
inline QuadExt sum_pair_ext(const QuadExt& x, u64 klim) {
    const Modulus& m = x.m;
    detail::CentralPair c;
    QuadExt pw = QuadExt::scalar(m, 1, x.d);
    QuadExt acc = QuadExt::scalar(m, 0, x.d);
    for (u64 k = 0; k <= klim; ++k) {
        PUnit term = punit_mul(c.c2, c.c3, m);
        acc = ext_add(acc, ext_scale(pw, term.reconstruct(m)));
        if (k < klim) {
            c.advance(k, m);
            pw = ext_mul(pw, x);
        }
    }
    return acc;
}

inline QuadExt sum_central_arg_ext(const QuadExt& x, u64 klim) {
    const Modulus& m = x.m;
    detail::CentralPair c;
    QuadExt pw = QuadExt::scalar(m, 1, x.d);
    QuadExt acc = QuadExt::scalar(m, 0, x.d);
    for (u64 k = 0; k <= klim; ++k) {
        PUnit term = punit_mul(punit_mul(c.c2, c.c2, m), c.c3, m);
        acc = ext_add(acc, ext_scale(pw, term.reconstruct(m)));
        if (k < klim) {
            c.advance(k, m);
            pw = ext_mul(pw, x);
        }
    }
    return acc;
}

// sum C(2k,k)^2 C(3k,k) (x(1-27x))^k == (sum C(2k,k) C(3k,k) x^k)^2 mod p^2.
inline bool check_thm21(u64 x, const Modulus& m) {
    assert(m.e == 2);
    u64 y = mulmod(x % m.pe, submod(1, mulmod(27 % m.pe, x % m.pe, m.pe), m.pe), m.pe);
    u64 lhs = 0;
    {
        detail::CentralPair c;
        u64 pw = 1;
        for (u64 k = 0; k < m.p; ++k) {
            PUnit term = punit_mul(punit_mul(c.c2, c.c2, m), c.c3, m);
            lhs = addmod(lhs, mulmod(term.reconstruct(m), pw, m.pe), m.pe);
            if (k + 1 < m.p) {
                c.advance(k, m);
                pw = mulmod(pw, y, m.pe);
            }
        }
    }
    u64 s = sum_pair(x, m);
    return lhs == mulmod(s, s, m.pe);
}

}  // namespace clab
