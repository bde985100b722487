#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "clab/modular.hpp"

namespace clab {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

// C(n, k) over the integers, 0 outside 0 <= k <= n.
inline ExactInt exact_binom(i64 n, i64 k) {
    if (k < 0 || (n >= 0 && k > n)) return 0;
    ExactInt r = 1;
    for (i64 i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

enum class Side { left, right };

// Summand of the two convolution identities:
//   left  F(m,k) = C(2k,k)^2 C(3k,k) C(k,m-k) (-27)^{m-k}
//   right F(m,k) = C(2k,k) C(3k,k) C(2(m-k),m-k) C(3(m-k),m-k)
inline ExactInt hyper_term(Side side, i64 m, i64 k) {
    if (k < 0) return 0;
    ExactInt c2 = exact_binom(2 * k, k);
    ExactInt c3 = exact_binom(3 * k, k);
    if (side == Side::left) {
        ExactInt cb = exact_binom(k, m - k);
        if (cb == 0) return 0;
        ExactInt v = c2 * c2 * c3 * cb * pow(ExactInt(27), unsigned(m - k));
        return ((m - k) & 1) ? ExactInt(-v) : v;
    }
    if (m - k < 0) return 0;
    return c2 * c3 * exact_binom(2 * (m - k), m - k) * exact_binom(3 * (m - k), m - k);
}

inline ExactInt lemma21_side(i64 m, Side side) {
    ExactInt s = 0;
    for (i64 k = 0; k <= m; ++k) s += hyper_term(side, m, k);
    return s;
}

// All sums for m = 0..mmax in one pass, with running central binomials,
// a Pascal triangle for the inner C(k, m-k), and cached powers of 27.
inline std::vector<ExactInt> lemma21_values(Side side, i64 mmax) {
    std::vector<ExactInt> c2(mmax + 1), c3(mmax + 1), p27(mmax + 1);
    c2[0] = 1;
    c3[0] = 1;
    p27[0] = 1;
    for (i64 k = 0; k < mmax; ++k) {
        c2[k + 1] = c2[k] * 2 * (2 * k + 1) / (k + 1);
        c3[k + 1] = c3[k] * 3 * (3 * k + 1) * (3 * k + 2) / (2 * (k + 1) * (2 * k + 1));
        p27[k + 1] = p27[k] * 27;
    }
    std::vector<std::vector<ExactInt>> pas;
    if (side == Side::left) {
        pas.resize(mmax + 1);
        for (i64 n = 0; n <= mmax; ++n) {
            pas[n].assign(n + 1, 1);
            for (i64 j = 1; j < n; ++j) pas[n][j] = pas[n - 1][j - 1] + pas[n - 1][j];
        }
    }
    std::vector<ExactInt> out(mmax + 1);
    for (i64 m = 0; m <= mmax; ++m) {
        ExactInt s = 0;
        if (side == Side::left) {
            for (i64 k = (m + 1) / 2; k <= m; ++k) {
                ExactInt t = c2[k] * c2[k] * c3[k] * pas[k][m - k] * p27[m - k];
                s += ((m - k) & 1) ? ExactInt(-t) : t;
            }
        } else {
            for (i64 k = 0; k <= m; ++k) s += c2[k] * c3[k] * c2[m - k] * c3[m - k];
        }
        out[m] = s;
    }
    return out;
}

// Zeilberger recurrence shared by both sides:
//   a(m) S(m) + b(m) S(m+1) + c(m) S(m+2) = 0
inline ExactInt rec_coeff_a(i64 m) { return ExactInt(81) * (m + 1) * (3 * m + 2) * (3 * m + 4); }
inline ExactInt rec_coeff_b(i64 m) {
    return ExactInt(-3) * (2 * m + 3) * (ExactInt(9) * m * m + 27 * m + 22);
}
inline ExactInt rec_coeff_c(i64 m) {
    ExactInt t = m + 2;
    return t * t * t;
}

inline bool check_recurrence(Side side, i64 m) {
    return rec_coeff_a(m) * lemma21_side(m, side) + rec_coeff_b(m) * lemma21_side(m + 1, side) +
               rec_coeff_c(m) * lemma21_side(m + 2, side) ==
           0;
}

inline bool check_recurrence_all(Side side, i64 mmax) {
    auto vals = lemma21_values(side, mmax + 2);
    for (i64 m = 0; m <= mmax; ++m)
        if (rec_coeff_a(m) * vals[m] + rec_coeff_b(m) * vals[m + 1] + rec_coeff_c(m) * vals[m + 2] != 0)
            return false;
    return true;
}

// Certificate multiplier R(m,k) with G = R * F; the recurrence follows from
//   a(m)F(m,k) + b(m)F(m+1,k) + c(m)F(m+2,k) = G(m,k+1) - G(m,k)
// summed over k.
inline ExactRat wz_multiplier(Side side, i64 m, i64 k) {
    ExactInt den = ExactInt(m - k + 1) * (m - k + 2);
    if (side == Side::left) {
        ExactInt num = ExactInt(-729) * k * k * (m + 2) * (m - 2 * k) * (m - 2 * k + 1);
        return ExactRat(num, den);
    }
    ExactInt num = ExactInt(9) * k * k * (3 * m - 3 * k + 1) * (3 * m - 3 * k + 2) *
                   (ExactInt(9) * m * m - 9 * m * k + 30 * m - 14 * k + 24);
    return ExactRat(num, den * den);
}

struct WzReport {
    bool ok = true;
    int checked = 0;
    int poles = 0;
};

// Verify the certificate identity pointwise over k = 0..m+2, skipping the
// three k where R(m,k) or R(m,k+1) has a vanishing denominator.
inline WzReport check_wz_certificate(Side side, i64 m) {
    WzReport rep;
    for (i64 k = 0; k <= m + 2; ++k) {
        bool pole = (m - k + 1) * (m - k + 2) == 0 || (m - k) * (m - k + 1) == 0;
        if (pole) {
            ++rep.poles;
            continue;
        }
        ExactRat lhs(rec_coeff_a(m) * hyper_term(side, m, k) +
                     rec_coeff_b(m) * hyper_term(side, m + 1, k) +
                     rec_coeff_c(m) * hyper_term(side, m + 2, k));
        ExactRat rhs = wz_multiplier(side, m, k + 1) * ExactRat(hyper_term(side, m, k + 1)) -
                       wz_multiplier(side, m, k) * ExactRat(hyper_term(side, m, k));
        if (lhs != rhs) rep.ok = false;
        ++rep.checked;
    }
    return rep;
}

}  // namespace clab
