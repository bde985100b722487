#pragma once

#include <cstdint>
#include <vector>

#include "clab/binomial.hpp"
#include "clab/modular.hpp"
#include "clab/quadext.hpp"

namespace clab {

// Coefficients of the Legendre polynomial
//   P_n(x) = 2^{-n} sum_{k=0}^{[n/2]} C(n,k)(-1)^k C(2n-2k,n) x^{n-2k},
// returned in k order (descending exponent n-2k), with the 2^{-n} folded in.
// Works mod p^e for any n: p-divisible coefficients come out as the correct
// residues via the valuation tracking in PUnit.
inline std::vector<u64> legendre_poly_coeffs(u64 n, const Modulus& m) {
    std::vector<u64> c(n / 2 + 1);
    PUnit b = binom_punit(2 * n, n, m);
    bool neg = false;
    u64 scale = mod_inv(mod_pow(2, n, m), m);
    for (u64 k = 0;; ++k) {
        u64 v = mulmod(b.reconstruct(m), scale, m.pe);
        c[k] = neg ? negmod(v, m.pe) : v;
        if (k == n / 2) break;
        punit_mul(b, n - k, m);
        punit_mul(b, n - 2 * k, m);
        punit_mul(b, n - 2 * k - 1, m);
        punit_div(b, k + 1, m);
        punit_div(b, 2 * n - 2 * k, m);
        punit_div(b, 2 * n - 2 * k - 1, m);
        neg = !neg;
    }
    return c;
}

// Horner in x^2: sum_k c[k] x^{n-2k}, then a stray x when n is odd.
inline u64 legendre_eval(const std::vector<u64>& c, u64 n, u64 t, const Modulus& m) {
    t %= m.pe;
    u64 t2 = mulmod(t, t, m.pe);
    u64 acc = c[0];
    for (u64 k = 1; k < c.size(); ++k) acc = addmod(mulmod(acc, t2, m.pe), c[k], m.pe);
    if (n % 2) acc = mulmod(acc, t, m.pe);
    return acc;
}

inline QuadExt legendre_eval(const std::vector<u64>& c, u64 n, const QuadExt& t) {
    const Modulus& m = t.m;
    QuadExt t2 = ext_mul(t, t);
    QuadExt acc = QuadExt::scalar(m, c[0], t.d);
    for (u64 k = 1; k < c.size(); ++k)
        acc = ext_add(ext_mul(acc, t2), QuadExt::scalar(m, c[k], t.d));
    if (n % 2) acc = ext_mul(acc, t);
    return acc;
}

inline u64 legendre_poly(u64 n, u64 t, const Modulus& m) {
    return legendre_eval(legendre_poly_coeffs(n, m), n, t, m);
}

inline QuadExt legendre_poly(u64 n, const QuadExt& t) {
    return legendre_eval(legendre_poly_coeffs(n, t.m), n, t);
}

// Second evaluation path via (k+1)P_{k+1} = (2k+1)xP_k - kP_{k-1}, for
// cross-checking the explicit sum; needs n < p.
inline u64 legendre_poly_recurrence(u64 n, u64 t, const Modulus& m) {
    assert(n < m.p);
    t %= m.pe;
    if (n == 0) return 1 % m.pe;
    u64 prev = 1 % m.pe, cur = t;
    for (u64 k = 1; k < n; ++k) {
        u64 next = submod(mulmod(mulmod((2 * k + 1) % m.pe, t, m.pe), cur, m.pe),
                          mulmod(k % m.pe, prev, m.pe), m.pe);
        next = mulmod(next, mod_inv((k + 1) % m.pe, m), m.pe);
        prev = cur;
        cur = next;
    }
    return cur;
}

// W_n(x) = sum_k C(n,k)^2 x^k; coefficient vector and Horner evaluation.
inline std::vector<u64> deuring_coeffs(u64 n, const Modulus& m) {
    std::vector<u64> c(n + 1);
    PUnit b;
    for (u64 k = 0;; ++k) {
        u64 v = b.reconstruct(m);
        c[k] = mulmod(v, v, m.pe);
        if (k == n) break;
        punit_mul(b, n - k, m);
        punit_div(b, k + 1, m);
    }
    return c;
}

inline u64 deuring_eval(const std::vector<u64>& c, u64 x, const Modulus& m) {
    x %= m.pe;
    u64 acc = 0;
    for (u64 k = c.size(); k-- > 0;) acc = addmod(mulmod(acc, x, m.pe), c[k], m.pe);
    return acc;
}

inline u64 deuring_poly(u64 n, u64 x, const Modulus& m) {
    return deuring_eval(deuring_coeffs(n, m), x, m);
}

// Generalized binomial C(alpha, r) = alpha(alpha-1)...(alpha-r+1)/r! for a
// residue alpha; r < p.
inline u64 gen_binom(u64 alpha, u64 r, const Modulus& m) {
    assert(r < m.p);
    u64 num = 1 % m.pe, den = 1 % m.pe;
    for (u64 i = 0; i < r; ++i) {
        num = mulmod(num, submod(alpha % m.pe, i % m.pe, m.pe), m.pe);
        den = mulmod(den, (i + 1) % m.pe, m.pe);
    }
    return mulmod(num, mod_inv(den, m), m.pe);
}

// Jacobi polynomial P_k^{(alpha,beta)}(x)
//   = 2^{-k} sum_{r=0}^k C(k+alpha,r) C(k+beta,k-r) (x-1)^{k-r} (x+1)^r
// with residue parameters; k < p.
inline u64 jacobi_pk(u64 k, u64 alpha, u64 beta, u64 x, const Modulus& m) {
    assert(k < m.p);
    u64 pe = m.pe;
    u64 ka = addmod(k % pe, alpha % pe, pe), kb = addmod(k % pe, beta % pe, pe);
    std::vector<u64> ffa(k + 1), ffb(k + 1), fact(k + 1), pm(k + 1), pp(k + 1);
    ffa[0] = ffb[0] = fact[0] = pm[0] = pp[0] = 1 % pe;
    u64 xm = submod(x % pe, 1 % pe, pe), xp = addmod(x % pe, 1 % pe, pe);
    for (u64 r = 1; r <= k; ++r) {
        ffa[r] = mulmod(ffa[r - 1], submod(ka, (r - 1) % pe, pe), pe);
        ffb[r] = mulmod(ffb[r - 1], submod(kb, (r - 1) % pe, pe), pe);
        fact[r] = mulmod(fact[r - 1], r % pe, pe);
        pm[r] = mulmod(pm[r - 1], xm, pe);
        pp[r] = mulmod(pp[r - 1], xp, pe);
    }
    std::vector<u64> ifact(k + 1);
    ifact[k] = mod_inv(fact[k], m);
    for (u64 r = k; r > 0; --r) ifact[r - 1] = mulmod(ifact[r], r % pe, pe);
    u64 tot = 0;
    for (u64 r = 0; r <= k; ++r) {
        u64 term = mulmod(mulmod(ffa[r], ifact[r], pe), mulmod(ffb[k - r], ifact[k - r], pe), pe);
        tot = addmod(tot, mulmod(term, mulmod(pm[k - r], pp[r], pe), pe), pe);
    }
    return mulmod(tot, mod_inv(mod_pow(2, k, m), m), m.pe);
}

// J_p(t) = 1728^{[p/12]} P_{[p/12]}^{(-(1/3)(p|3), -(1/2)(-1|p))}(1 - t/864).
inline u64 jacobi_Jp(u64 t, const Modulus& m) {
    assert(m.p > 3);
    int s3 = jacobi_symbol(i64(m.p), 3);
    int s4 = legendre_symbol(-1, m.p);
    u64 alpha = rational_residue(-s3, 3, m);
    u64 beta = rational_residue(-s4, 2, m);
    u64 x = submod(1 % m.pe, mulmod(t % m.pe, mod_inv(864 % m.pe, m), m.pe), m.pe);
    return mulmod(mod_pow(1728 % m.pe, m.p / 12, m), jacobi_pk(m.p / 12, alpha, beta, x, m), m.pe);
}

// The p mod 12 case polynomial from the Brillhart-Morton supersingularity
// congruence: 1, -3(x-24), x^2-36x+216, or their product.
inline u64 u_p(u64 x, const Modulus& m) {
    x %= m.pe;
    u64 lin = negmod(mulmod(3 % m.pe, submod(x, 24 % m.pe, m.pe), m.pe), m.pe);
    u64 quad = addmod(submod(mulmod(x, x, m.pe), mulmod(36 % m.pe, x, m.pe), m.pe), 216 % m.pe, m.pe);
    switch (m.p % 12) {
        case 1: return 1 % m.pe;
        case 5: return lin;
        case 7: return quad;
        default: return mulmod(lin, quad, m.pe);
    }
}

// sum_{k=0}^{[p/3]} C(2k,k) C(3k,k) ((1-t)/54)^k.
inline u64 truncated_sum_13(u64 t, const Modulus& m) {
    u64 x = mulmod(submod(1 % m.pe, t % m.pe, m.pe), mod_inv(54 % m.pe, m), m.pe);
    return sum_pair(x, m, m.p / 3);
}

inline QuadExt truncated_sum_13(const QuadExt& t) {
    const Modulus& m = t.m;
    QuadExt x = ext_scale(ext_sub(QuadExt::scalar(m, 1, t.d), t), mod_inv(54 % m.pe, m));
    return sum_pair_ext(x, m.p / 3);
}

}  // namespace clab
