#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "clab/modular.hpp"
#include "clab/poly.hpp"
#include "clab/quadext.hpp"

namespace clab {

// Quadratic character table for one prime: chi[x] in {-1,0,1}, O(1) lookups
// for the O(p) sum loops.
struct QrTable {
    u64 p;
    std::vector<signed char> chi;

    explicit QrTable(u64 prime) : p(prime), chi(prime, -1) {
        chi[0] = 0;
        for (u64 y = 1; y <= (p - 1) / 2; ++y) chi[mulmod(y, y, p)] = 1;
    }

    int operator()(u64 x) const { return chi[x]; }
};

// sum_{x=0}^{p-1} chi(x^3 + mc*x + nc), as an exact integer.  The cubic is
// advanced by finite differences: three adds per x, no multiplications.
inline i64 char_sum_cubic(u64 mc, u64 nc, const QrTable& qr) {
    u64 p = qr.p;
    u64 f = nc % p;
    u64 d1 = addmod(1 % p, mc % p, p);
    u64 d2 = 6 % p;
    i64 acc = 0;
    for (u64 x = 0; x < p; ++x) {
        acc += qr(f);
        f = addmod(f, d1, p);
        d1 = addmod(d1, d2, p);
        d2 = addmod(d2, 6 % p, p);
    }
    return acc;
}

// sum_{x=0}^{p-1} f(x)^{(p-1)/2} over F_p(w), w^2 = d, for f = x^3 + mc*x + nc
// with extension coefficients.  For prime-subfield coefficients this reduces
// termwise to the Euler criterion, so the b part is 0 and the a part matches
// char_sum_cubic mod p.
inline QuadExt half_power_sum(const QuadExt& mc, const QuadExt& nc) {
    check_domain(mc, nc);
    const Modulus& m = mc.m;
    u64 p = m.p;
    u64 d = mc.b ? mc.d : nc.d;
    u64 fa = nc.a;
    u64 d1 = addmod(1 % p, mc.a, p);
    u64 d2 = 6 % p;
    u64 fb = nc.b;
    QuadExt acc = QuadExt::scalar(m, 0, d);
    for (u64 x = 0; x < p; ++x) {
        acc = ext_add(acc, ext_pow(QuadExt(m, d, fa, fb), (p - 1) / 2));
        fa = addmod(fa, d1, p);
        d1 = addmod(d1, d2, p);
        d2 = addmod(d2, 6 % p, p);
        fb = addmod(fb, mc.b, p);
    }
    return acc;
}

inline u64 point_count(u64 mc, u64 nc, const QrTable& qr) {
    return u64(i64(qr.p) + 1 + char_sum_cubic(mc, nc, qr));
}

// Affine enumeration plus the point at infinity; the slow cross-check.
inline u64 point_count_naive(u64 mc, u64 nc, u64 p) {
    u64 count = 1;
    for (u64 x = 0; x < p; ++x) {
        u64 f = addmod(mulmod(mulmod(x, x, p), x, p), addmod(mulmod(mc % p, x, p), nc % p, p), p);
        for (u64 y = 0; y < p; ++y)
            if (mulmod(y, y, p) == f) ++count;
    }
    return count;
}

// Twist covariance: the sums for x^3 + a^2 m x + a^3 n and x^3 + m x + n
// differ exactly by the factor chi(a); both the exact-integer identity and
// (termwise) the half-power congruence reduce to this.
inline bool check_scaling_lemma41(u64 a, u64 mc, u64 nc, const QrTable& qr) {
    u64 p = qr.p;
    a %= p;
    u64 a2 = mulmod(a, a, p);
    i64 s_scaled = char_sum_cubic(mulmod(a2, mc % p, p), mulmod(mulmod(a2, a, p), nc % p, p), qr);
    i64 s_base = char_sum_cubic(mc % p, nc % p, qr);
    return s_scaled == qr(a) * s_base;
}

inline bool check_thm31(u64 t, const QrTable& qr, const std::vector<u64>& pcoeffs, const Modulus& m) {
    u64 p = m.p;
    t %= p;
    u64 mc = submod(mulmod(12 % p, t, p), 15 % p, p);
    u64 t2 = mulmod(t, t, p);
    u64 nc = reduce(i64(4 * t2 % p) - i64(28 * t % p) + 22, p);
    i64 s = char_sum_cubic(mc, nc, qr);
    u64 rhs = reduce(-i64(jacobi_symbol(i64(p), 3)) * s, p);
    return legendre_eval(pcoeffs, p / 3, t, m) == rhs;
}

// The companion sum with t -> -t undoes the symbol: both character sums are
// equal as integers once p >= 17 forces the Weil bound below p/2.
inline bool check_cor32(u64 t, const QrTable& qr) {
    u64 p = qr.p;
    t %= p;
    u64 t2 = mulmod(t, t, p);
    u64 mc_a = submod(mulmod(12 % p, t, p), 15 % p, p);
    u64 nc_a = reduce(i64(4 * t2 % p) - i64(28 * t % p) + 22, p);
    u64 mc_b = reduce(-i64(12 * t % p) - 15, p);
    u64 nc_b = reduce(i64(4 * t2 % p) + i64(28 * t % p) + 22, p);
    i64 s_a = char_sum_cubic(mc_a, nc_a, qr);
    i64 s_b = char_sum_cubic(mc_b, nc_b, qr);
    return s_a == jacobi_symbol(i64(p), 3) * s_b;
}

inline bool check_weil(u64 mc, u64 nc, const QrTable& qr) {
    i64 s = char_sum_cubic(mc % qr.p, nc % qr.p, qr);
    return s * s <= 4 * i64(qr.p);
}

// Admissibility for the supersingular-polynomial congruence: nonzero
// discriminant, and nonzero m (resp. n) wherever a negative symbol puts it
// into a denominator-like exponent.
inline bool morton33_admissible(u64 mc, u64 nc, const Modulus& m) {
    u64 p = m.p;
    mc %= p;
    nc %= p;
    u64 disc = reduce(i64(4 * mod_pow(mc, 3, Modulus(p, 1)) % p) + i64(27 * mulmod(nc, nc, p) % p), p);
    if (disc == 0) return false;
    if (jacobi_symbol(i64(p), 3) == -1 && mc == 0) return false;
    if (legendre_symbol(-1, p) == -1 && nc == 0) return false;
    return true;
}

inline bool check_morton33(u64 mc, u64 nc, const QrTable& qr, const Modulus& m) {
    u64 p = m.p;
    mc %= p;
    nc %= p;
    int s3 = jacobi_symbol(i64(p), 3);
    int s4 = legendre_symbol(-1, p);
    u64 disc = addmod(mulmod(4 % p, mod_pow(mc, 3, m), p), mulmod(27 % p, mulmod(nc, nc, p), p), p);
    u64 lhs = reduce(char_sum_cubic(mc, nc, qr), p);
    u64 rhs = negmod(mod_pow(negmod(mulmod(16 % p, disc, p), p), p / 12, m), p);
    if (s3 == -1) rhs = mulmod(rhs, negmod(mulmod(48 % p, mc, p), p), p);
    if (s4 == -1) rhs = mulmod(rhs, mulmod(864 % p, nc, p), p);
    u64 arg = mulmod(mulmod((256 * 27) % p, mod_pow(mc, 3, m), p), mod_inv(disc, m), p);
    rhs = mulmod(rhs, jacobi_Jp(arg, m), p);
    return lhs == rhs;
}

// W_{[p/3]}(1 - x/27) against the u_p(x)-twisted J_p value; x != 27 mod p.
inline bool check_bm6(u64 x, const std::vector<u64>& wcoeffs, const Modulus& m) {
    u64 p = m.p;
    x %= p;
    u64 w = deuring_eval(wcoeffs, submod(1 % p, mulmod(x, mod_inv(27 % p, m), p), p), m);
    u64 xm27 = submod(x, 27 % p, p);
    u64 arg = mulmod(mulmod(x, mod_pow(submod(x, 24 % p, p), 3, m), p), mod_inv(xm27, m), p);
    u64 rhs = mulmod(mulmod(u_p(x, m), mod_pow(xm27, p / 12, m), p), jacobi_Jp(arg, m), p);
    return w == rhs;
}

}  // namespace clab
