#include "clab/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "clab/binomial.hpp"
#include "clab/curve.hpp"
#include "clab/exact.hpp"
#include "clab/modular.hpp"
#include "clab/poly.hpp"
#include "clab/primes.hpp"
#include "clab/quadext.hpp"
#include "clab/quadform.hpp"

namespace clab {
namespace {

using json = nlohmann::ordered_json;

std::string ds(u64 v) { return std::to_string(v); }
std::string dsi(i64 v) { return std::to_string(v); }

struct Rng {
    u64 s;
    explicit Rng(u64 seed) : s(seed) {}
    u64 next() {
        s += 0x9e3779b97f4a7c15ULL;
        u64 z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    u64 below(u64 n) { return next() % n; }
};

u64 fnv1a(const std::string& s) {
    u64 h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

bool in_set(u64 v, std::initializer_list<u64> s) {
    for (u64 x : s)
        if (v == x) return true;
    return false;
}

i64 floordiv(i64 a, i64 b) {
    i64 q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// (2-adic valuation, signed odd part)
std::pair<int, i64> two_split(i64 x) {
    int a = 0;
    i64 sgn = x < 0 ? -1 : 1;
    x = x < 0 ? -x : x;
    while ((x & 1) == 0) {
        x >>= 1;
        ++a;
    }
    return {a, sgn * x};
}

// Everything expensive that more than one check needs at a given prime.
struct PrimeContext {
    Modulus m1;
    QrTable qr;
    u64 n13;
    std::vector<u64> pc;  // coefficients of the degree-[p/3] Legendre polynomial
    std::vector<u64> wc;  // squared-binomial coefficients, same degree
    std::map<std::pair<i64, int>, u64> central_memo;

    explicit PrimeContext(u64 p) : m1(p, 1), qr(p), n13(p / 3) {
        warm_inverse_table(p);
        pc = legendre_poly_coeffs(n13, m1);
        wc = deuring_coeffs(n13, m1);
    }

    u64 p() const { return m1.p; }

    u64 central(i64 mv, int e) {
        auto key = std::make_pair(mv, e);
        auto it = central_memo.find(key);
        if (it != central_memo.end()) return it->second;
        u64 v = sum_central(mv, Modulus(m1.p, e));
        central_memo.emplace(key, v);
        return v;
    }

    u64 poly_at(u64 t) const { return legendre_eval(pc, n13, t, m1); }
    QuadExt poly_at(const QuadExt& t) const { return legendre_eval(pc, n13, t); }
};

CheckResult base_row(const CheckInfo& info, u64 p) {
    CheckResult r;
    r.check = info.id;
    r.p = p;
    r.status = Status::pass;
    return r;
}

CheckResult skip_row(const CheckInfo& info, u64 p) {
    CheckResult r;
    r.check = info.id;
    r.p = p;
    r.status = Status::skipped;
    r.clause = "hypothesis not met: " + info.hypothesis;
    return r;
}

void fail_with(CheckResult& r, const char* clause, json witness) {
    r.status = Status::fail;
    r.clause = clause;
    r.witness = std::move(witness);
}

// ---- binomial-transform identities ----

CheckResult chk_thm21(const CheckInfo& info, PrimeContext& cx, Rng& rng) {
    auto r = base_row(info, cx.p());
    Modulus m2(cx.p(), 2);
    const int samples = 20;
    for (int i = 0; i < samples; ++i) {
        u64 x = rng.below(m2.pe);
        u64 y = mulmod(x, submod(1, mulmod(27 % m2.pe, x, m2.pe), m2.pe), m2.pe);
        u64 lhs = sum_central_arg_ext(QuadExt::scalar(m2, y), m2.p - 1).a;
        u64 s = sum_pair(x, m2);
        u64 rhs = mulmod(s, s, m2.pe);
        if (lhs != rhs) {
            fail_with(r, "square-transform", {{"x", ds(x)}, {"lhs", ds(lhs)}, {"rhs", ds(rhs)}});
            return r;
        }
    }
    r.clause = "square-transform";
    r.witness = {{"samples", ds(samples)}};
    return r;
}

CheckResult chk_cor21(const CheckInfo& info, PrimeContext& cx, Rng& rng) {
    auto r = base_row(info, cx.p());
    Modulus m2(cx.p(), 2);
    const int samples = 6;
    u64 i54 = mod_inv(54 % m2.pe, m2);
    for (int i = 0; i < samples; ++i) {
        u64 mv = 1 + rng.below(cx.p() - 1);
        u64 c = submod(1, mulmod(108 % m2.pe, mod_inv(mv, m2), m2.pe), m2.pe);
        QuadExt x(m2, c, i54, negmod(i54, m2.pe));
        QuadExt s = sum_pair_ext(x, cx.p() - 1);
        QuadExt sq = ext_mul(s, s);
        u64 lhs = sum_central(i64(mv), m2);
        if (sq.b != 0 || sq.a != lhs) {
            fail_with(r, "ring-square",
                      {{"m", ds(mv)}, {"sq_a", ds(sq.a)}, {"sq_b", ds(sq.b)}, {"lhs", ds(lhs)}});
            return r;
        }
    }
    r.clause = "ring-square";
    r.witness = {{"samples", ds(samples)}};
    return r;
}

// ---- degree-[p/3] Legendre values against curve character sums ----

void sample_or_all(PrimeContext& cx, Rng& rng, int nsamples, const std::function<bool(u64)>& body) {
    u64 p = cx.p();
    if (p <= 500) {
        for (u64 t = 0; t < p; ++t)
            if (!body(t)) return;
    } else {
        for (int i = 0; i < nsamples; ++i)
            if (!body(rng.below(p))) return;
    }
}

std::pair<u64, u64> thm31_coeffs(u64 t, u64 p) {
    u64 t2 = mulmod(t, t, p);
    u64 mc = reduce(i64(mulmod(12 % p, t, p)) - 15, p);
    u64 nc = reduce(i64(mulmod(4 % p, t2, p)) - i64(mulmod(28 % p, t, p)) + 22, p);
    return {mc, nc};
}

CheckResult chk_thm31(const CheckInfo& info, PrimeContext& cx, Rng& rng) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    int s3 = jacobi_symbol(i64(p), 3);
    int used = 0;
    sample_or_all(cx, rng, 20, [&](u64 t) {
        ++used;
        auto [mc, nc] = thm31_coeffs(t, p);
        i64 S = char_sum_cubic(mc, nc, cx.qr);
        u64 P = cx.poly_at(t);
        u64 rhs = reduce(-i64(s3) * S, p);
        if (P != rhs) {
            fail_with(r, "char-sum-match", {{"t", ds(t)}, {"P", ds(P)}, {"S", dsi(S)}, {"rhs", ds(rhs)}});
            return false;
        }
        return true;
    });
    if (r.status == Status::pass) {
        r.clause = "char-sum-match";
        r.witness = {{"points", ds(u64(used))}};
    }
    return r;
}

CheckResult chk_cor31(const CheckInfo& info, PrimeContext& cx, Rng& rng) {
    auto r = base_row(info, cx.p());
    int used = 0;
    sample_or_all(cx, rng, 20, [&](u64 t) {
        ++used;
        u64 T = truncated_sum_13(t, cx.m1);
        u64 P = cx.poly_at(t);
        if (T != P) {
            fail_with(r, "truncation-match", {{"t", ds(t)}, {"truncated", ds(T)}, {"P", ds(P)}});
            return false;
        }
        return true;
    });
    if (r.status == Status::pass) {
        r.clause = "truncation-match";
        r.witness = {{"points", ds(u64(used))}};
    }
    return r;
}

CheckResult chk_cor32(const CheckInfo& info, PrimeContext& cx, Rng& rng) {
    u64 p = cx.p();
    if (p < 17) return skip_row(info, p);
    auto r = base_row(info, p);
    int s3 = jacobi_symbol(i64(p), 3);
    int used = 0;
    sample_or_all(cx, rng, 20, [&](u64 t) {
        ++used;
        auto [mc, nc] = thm31_coeffs(t, p);
        u64 t2 = mulmod(t, t, p);
        u64 mc2 = reduce(-i64(mulmod(12 % p, t, p)) - 15, p);
        u64 nc2 = reduce(i64(mulmod(4 % p, t2, p)) + i64(mulmod(28 % p, t, p)) + 22, p);
        i64 S = char_sum_cubic(mc, nc, cx.qr);
        i64 S2 = char_sum_cubic(mc2, nc2, cx.qr);
        if (S != i64(s3) * S2) {
            fail_with(r, "exact-symmetry", {{"t", ds(t)}, {"S", dsi(S)}, {"S2", dsi(S2)}});
            return false;
        }
        return true;
    });
    if (r.status == Status::pass) {
        r.clause = "exact-symmetry";
        r.witness = {{"points", ds(u64(used))}};
    }
    return r;
}

CheckResult chk_cor33(const CheckInfo& info, PrimeContext& cx, Rng&) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    i64 S = char_sum_cubic(reduce(-120, p), 506 % p, cx.qr);
    if (p % 3 == 1) {
        auto rep = represent(p, 1, 27, true);
        if (!rep) {
            fail_with(r, "rep-value", {{"error", "no representation 4p = L^2 + 27M^2"}});
            return r;
        }
        i64 L = normalize_mod3(rep->x);
        i64 rhs = i64(legendre_symbol(2, p)) * L;
        if (S != rhs) {
            fail_with(r, "rep-value", {{"S", dsi(S)}, {"L", dsi(L)}, {"M", dsi(rep->y)}});
            return r;
        }
        r.clause = "rep-value";
        r.witness = {{"S", dsi(S)}, {"L", dsi(L)}, {"M", dsi(rep->y)}};
    } else {
        if (S != 0) {
            fail_with(r, "vanishes", {{"S", dsi(S)}});
            return r;
        }
        r.clause = "vanishes";
        r.witness = {{"S", "0"}};
    }
    return r;
}

CheckResult chk_thm32(const CheckInfo& info, PrimeContext& cx, Rng&) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    u64 T1 = sum_pair(mod_inv(reduce(-216, p), cx.m1), cx.m1, p / 3);
    u64 T2 = sum_pair(mod_inv(24 % p, cx.m1), cx.m1, p / 3);
    u64 P = cx.poly_at(rational_residue(5, 4, cx.m1));
    if (p % 3 == 2) {
        if (T1 != 0 || T2 != 0 || P != 0) {
            fail_with(r, "vanishes", {{"T1", ds(T1)}, {"T2", ds(T2)}, {"P", ds(P)}});
            return r;
        }
        r.clause = "vanishes";
    } else {
        auto rep = represent(p, 1, 27, true);
        i64 L = normalize_mod3(rep->x);
        u64 cb = binom_punit(2 * (p - 1) / 3, p / 12, cx.m1).reconstruct(cx.m1);
        u64 B = legendre_symbol(-2, p) == 1 ? cb : negmod(cb, p);
        u64 mL = reduce(-L, p);
        if (!(T1 == T2 && T2 == P && P == mL && mL == B)) {
            fail_with(r, "truncated-binomial",
                      {{"T1", ds(T1)}, {"T2", ds(T2)}, {"P", ds(P)}, {"L", dsi(L)}, {"B", ds(B)}});
            return r;
        }
        r.clause = "truncated-binomial";
        r.witness = {{"L", dsi(L)}, {"value", ds(B)}};
    }
    return r;
}

// ---- the nine-argument square law ----

constexpr i64 kNineArgs[] = {8, 64, 216, -27, -192, -8640, -1728, -110592, -27000000};

CheckResult chk_thm41(const CheckInfo& info, PrimeContext& cx, Rng&) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    r.ambiguity = "all-choices";
    std::string verified, skipped;
    auto append = [](std::string& s, i64 v) {
        if (!s.empty()) s += ",";
        s += dsi(v);
    };
    for (i64 mv : kNineArgs) {
        if (reduce(mv, p) == 0 || val_p(mv - 108, p) % 2 == 1) {
            append(skipped, mv);
            continue;
        }
        append(verified, mv);
        u64 c = submod(1, mulmod(108 % p, mod_inv(reduce(mv, p), cx.m1), p), p);
        u64 sum1 = cx.central(mv, 1);
        std::vector<QuadExt> roots;
        if (c == 0) {
            roots = {QuadExt::scalar(cx.m1, 0)};
        } else if (auto s = sqrt_mod_p(c, p)) {
            roots = {QuadExt::scalar(cx.m1, *s), QuadExt::scalar(cx.m1, p - *s)};
        } else {
            roots = {QuadExt(cx.m1, c, 0, 1), QuadExt(cx.m1, c, 0, p - 1)};
        }
        bool pzero = false;
        for (const auto& t : roots) {
            QuadExt P = cx.poly_at(t);
            QuadExt P2 = ext_mul(P, P);
            if (P2.b != 0 || P2.a != sum1) {
                fail_with(r, "square-matches-sum",
                          {{"m", dsi(mv)},
                           {"t_a", ds(t.a)},
                           {"t_b", ds(t.b)},
                           {"d", ds(t.d)},
                           {"P2_a", ds(P2.a)},
                           {"P2_b", ds(P2.b)},
                           {"sum", ds(sum1)}});
                return r;
            }
            if (P.a == 0 && P.b == 0) pzero = true;
        }
        // middle leg: half-power character sum built from t itself
        auto mid_matches = [&](const QuadExt& t) {
            QuadExt t2 = ext_mul(t, t);
            u64 mca = reduce(i64(mulmod(12 % p, t.a, p)) - 15, p);
            u64 mcb = mulmod(12 % p, t.b, p);
            u64 nca =
                reduce(i64(mulmod(4 % p, t2.a, p)) - i64(mulmod(28 % p, t.a, p)) + 22, p);
            u64 ncb = reduce(i64(mulmod(4 % p, t2.b, p)) - i64(mulmod(28 % p, t.b, p)), p);
            if (t.b == 0) {
                i64 S = char_sum_cubic(mca, nca, cx.qr);
                return mulmod(reduce(S, p), reduce(S, p), p) == sum1;
            }
            QuadExt S = half_power_sum(QuadExt(cx.m1, t.d, mca, mcb), QuadExt(cx.m1, t.d, nca, ncb));
            QuadExt S2 = ext_mul(S, S);
            return S2.b == 0 && S2.a == sum1;
        };
        if (roots[0].b == 0) {
            for (const auto& t : roots) {
                if (!mid_matches(t)) {
                    fail_with(r, "mid-term", {{"m", dsi(mv)}, {"t", ds(t.a)}, {"sum", ds(sum1)}});
                    return r;
                }
            }
        } else {
            // conjugation carries the second embedding's sum onto the first
            if (!mid_matches(roots[0])) {
                fail_with(r, "mid-term", {{"m", dsi(mv)}, {"d", ds(c)}, {"sum", ds(sum1)}});
                return r;
            }
        }
        if (pzero && cx.central(mv, 2) != 0) {
            fail_with(r, "vanishes-mod-p2", {{"m", dsi(mv)}, {"sum_p2", ds(cx.central(mv, 2))}});
            return r;
        }
    }
    r.clause = "all-m-verified";
    r.witness = {{"verified_m", verified}, {"skipped_m", skipped}};
    return r;
}

CheckResult chk_thm42(const CheckInfo& info, PrimeContext& cx, Rng&) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    if (p % 3 == 1) {
        auto rep = represent(p, 1, 27, true);
        u64 L = u64(rep->x);
        u64 want = mulmod(L % p, L % p, p);
        u64 got = cx.central(-192, 1);
        if (got != want) {
            fail_with(r, "rep-square", {{"L", ds(L)}, {"sum", ds(got)}, {"L2", ds(want)}});
            return r;
        }
        r.clause = "rep-square";
        r.witness = {{"L", ds(L)}, {"M", dsi(rep->y)}};
    } else {
        u64 got = cx.central(-192, 2);
        if (got != 0) {
            fail_with(r, "vanishes-mod-p2", {{"sum_p2", ds(got)}});
            return r;
        }
        r.clause = "vanishes-mod-p2";
    }
    return r;
}

CheckResult chk_thm43(const CheckInfo& info, PrimeContext& cx, Rng&) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    if (p % 8 == 1 || p % 8 == 3) {
        r.ambiguity = "all-choices";
        auto rep = represent(p, 1, 2, false);
        i64 c = normalize_mod4(rep->x);
        u64 s = sqrt_mod_p(reduce(-2, p), p).value();
        for (u64 root : {s, p - s}) {
            u64 t = mulmod(5 % p, mod_inv(root, cx.m1), p);
            u64 P = cx.poly_at(t);
            i64 rhs = i64(legendre_symbol(-2 - i64(root), p)) * 2 * c;
            if ((p / 8) % 2) rhs = -rhs;
            if (P != reduce(rhs, p)) {
                fail_with(r, "rep-value",
                          {{"root", ds(root)}, {"P", ds(P)}, {"rhs", ds(reduce(rhs, p))}, {"c", dsi(c)}});
                return r;
            }
        }
        u64 want = reduce(4 * c * c, p);
        u64 got = cx.central(8, 1);
        if (got != want) {
            fail_with(r, "rep-value", {{"sum", ds(got)}, {"4c2", ds(want)}, {"c", dsi(c)}});
            return r;
        }
        r.clause = "rep-value";
        r.witness = {{"c", dsi(c)}, {"d", dsi(rep->y)}};
    } else {
        QuadExt t(cx.m1, reduce(-2, p), 0, rational_residue(5, -2, cx.m1));
        QuadExt P = cx.poly_at(t);
        u64 got = cx.central(8, 2);
        if (P.a != 0 || P.b != 0 || got != 0) {
            fail_with(r, "vanishes-mod-p2", {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}, {"sum_p2", ds(got)}});
            return r;
        }
        r.clause = "vanishes-mod-p2";
    }
    return r;
}

CheckResult chk_thm44(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p == 11) return skip_row(info, p);
    auto r = base_row(info, p);
    if (jacobi_symbol(i64(p), 11) == 1) {
        r.ambiguity = "all-choices";
        auto rep = represent(p, 1, 11, true);
        i64 u = rep->x;
        u64 s = sqrt_mod_p(reduce(-11, p), p).value();
        u64 i4 = mod_inv(4 % p, cx.m1);
        for (u64 root : {s, p - s}) {
            u64 t = mulmod(root, i4, p);
            u64 P = cx.poly_at(t);
            i64 rhs = -i64(legendre_symbol(6, p)) * jacobi_symbol(i64(p), 3) *
                      legendre_symbol(-11 + i64(root), p) * jacobi_symbol(u, 11) * u;
            if (P != reduce(rhs, p)) {
                fail_with(r, "rep-value",
                          {{"root", ds(root)}, {"P", ds(P)}, {"rhs", ds(reduce(rhs, p))}, {"u", dsi(u)}});
                return r;
            }
        }
        u64 want = mulmod(reduce(u, p), reduce(u, p), p);
        u64 got = cx.central(64, 1);
        if (got != want) {
            fail_with(r, "rep-value", {{"sum", ds(got)}, {"u2", ds(want)}, {"u", dsi(u)}});
            return r;
        }
        r.clause = "rep-value";
        r.witness = {{"u", dsi(u)}, {"v", dsi(rep->y)}};
    } else {
        QuadExt t(cx.m1, reduce(-11, p), 0, mod_inv(4 % p, cx.m1));
        QuadExt P = cx.poly_at(t);
        u64 got = cx.central(64, 2);
        if (P.a != 0 || P.b != 0 || got != 0) {
            fail_with(r, "vanishes-mod-p2", {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}, {"sum_p2", ds(got)}});
            return r;
        }
        r.clause = "vanishes-mod-p2";
    }
    return r;
}

CheckResult chk_cor41(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p % 8 != 1 && p % 8 != 3) return skip_row(info, p);
    auto r = base_row(info, p);
    r.ambiguity = "some-choices";
    auto rep = represent(p, 1, 2, false);
    i64 c = normalize_mod4(rep->x);
    i64 d0 = rep->y;
    i64 passed_dd = 0;
    bool any = false;
    for (i64 dd : {d0, -d0}) {
        u64 t = mulmod(reduce(5 * dd, p), mod_inv(reduce(c, p), cx.m1), p);
        u64 P = cx.poly_at(t);
        i64 rhs = i64(jacobi_symbol(c - dd, 3)) * 2 * c;
        if (p % 8 == 3 && (floordiv(dd - 1, 2) & 1)) rhs = -rhs;
        if (P == reduce(rhs, p)) {
            any = true;
            passed_dd = dd;
            break;
        }
    }
    if (!any) {
        fail_with(r, "sign-choice", {{"c", dsi(c)}, {"d", dsi(d0)}});
        r.ambiguity = "some-choices";
        return r;
    }
    r.clause = "sign-choice";
    r.witness = {{"c", dsi(c)}, {"d", dsi(passed_dd)}};
    return r;
}

CheckResult chk_cor42(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p == 11 || jacobi_symbol(i64(p), 11) != 1) return skip_row(info, p);
    auto r = base_row(info, p);
    r.ambiguity = "some-choices";
    auto rep = represent(p, 1, 11, true);
    i64 u0 = rep->x, v0 = rep->y;
    bool any = false;
    i64 pu = 0, pv = 0;
    for (i64 su : {1, -1}) {
        for (i64 sv : {1, -1}) {
            i64 u = su * u0, v = sv * v0;
            if (u == 0 || v == 0) continue;
            auto [al, vo] = two_split(v);
            auto [be, w] = two_split(u - 11 * v);
            u64 t = mulmod(reduce(u, p), mod_inv(reduce(4 * v, p), cx.m1), p);
            u64 P = cx.poly_at(t);
            bool minus = (((p - 1) / 2) & 1) && (((vo - w) / 2) & 1);
            i64 j2 = ((al + be) & 1) ? legendre_symbol(2, p) : 1;
            i64 rhs = i64(legendre_symbol(6, p)) * (minus ? -1 : 1) * j2 * jacobi_symbol(v - u, 3) * u;
            if (P == reduce(rhs, p)) {
                any = true;
                pu = u;
                pv = v;
            }
        }
    }
    if (!any) {
        fail_with(r, "sign-choice", {{"u", dsi(u0)}, {"v", dsi(v0)}});
        r.ambiguity = "some-choices";
        return r;
    }
    r.clause = "sign-choice";
    r.witness = {{"u", dsi(pu)}, {"v", dsi(pv)}};
    return r;
}

// ---- the six CM evaluations sharing one pattern ----

struct CmSpec {
    i64 c1, c2, rval, mv;
    u64 fb;            // form x^2 + fb*y^2
    bool four_p;       // representing p or 4p
    std::initializer_list<u64> cls1;
    u64 mod;
    bool doubled;      // true: P = 2x(x|3), sum = 4x^2; false: P = -x(x|3), sum = x^2
};

CheckResult chk_cm(const CheckInfo& info, PrimeContext& cx, const CmSpec& sp) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    r.ambiguity = "all-choices";
    u64 s = sqrt_mod_p(reduce(sp.rval, p), p).value();
    u64 co = rational_residue(sp.c1, sp.c2, cx.m1);
    bool cls = in_set(p % sp.mod, sp.cls1);
    i64 x = 0, y = 0;
    if (cls) {
        auto rep = represent(p, 1, u64(sp.fb), sp.four_p);
        if (!rep) {
            fail_with(r, "rep-value", {{"error", "no representation"}});
            return r;
        }
        x = rep->x;
        y = rep->y;
    }
    for (u64 root : {s, p - s}) {
        u64 t = mulmod(co, root, p);
        u64 P = cx.poly_at(t);
        if (cls) {
            i64 want = sp.doubled ? 2 * x * jacobi_symbol(x, 3) : -x * jacobi_symbol(x, 3);
            if (P != reduce(want, p)) {
                fail_with(r, "rep-value",
                          {{"root", ds(root)}, {"P", ds(P)}, {"rhs", ds(reduce(want, p))}, {"x", dsi(x)}});
                return r;
            }
        } else if (P != 0) {
            fail_with(r, "vanishes-mod-p2", {{"root", ds(root)}, {"P", ds(P)}});
            return r;
        }
    }
    if (cls) {
        u64 want = reduce(sp.doubled ? 4 * x * x : x * x, p);
        u64 got = cx.central(sp.mv, 1);
        if (got != want) {
            fail_with(r, "rep-value", {{"sum", ds(got)}, {"rhs", ds(want)}, {"x", dsi(x)}});
            return r;
        }
        r.clause = "rep-value";
        r.witness = {{"x", dsi(x)}, {"y", dsi(y)}};
    } else {
        u64 got = cx.central(sp.mv, 2);
        if (got != 0) {
            fail_with(r, "vanishes-mod-p2", {{"sum_p2", ds(got)}});
            return r;
        }
        r.clause = "vanishes-mod-p2";
    }
    return r;
}

CheckResult chk_thm45(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p % 8 != 1 && p % 8 != 7) return skip_row(info, p);
    return chk_cm(info, cx, {1, 2, 2, 216, 6, false, {1, 7}, 24, true});
}

CheckResult chk_thm46(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p % 5 != 1 && p % 5 != 4) return skip_row(info, p);
    return chk_cm(info, cx, {1, 1, 5, -27, 15, false, {1, 4}, 15, true});
}

CheckResult chk_thm47(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p % 5 != 1 && p % 5 != 4) return skip_row(info, p);
    return chk_cm(info, cx, {9, 20, 5, -8640, 75, true, {1, 4}, 15, false});
}

CheckResult chk_thm48(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p == 17 || legendre_symbol(17, p) != 1) return skip_row(info, p);
    return chk_cm(info, cx, {1, 4, 17, -1728, 51, true, {1}, 3, false});
}

CheckResult chk_thm49(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p == 41 || legendre_symbol(41, p) != 1) return skip_row(info, p);
    return chk_cm(info, cx, {5, 32, 41, -110592, 123, true, {1}, 3, false});
}

CheckResult chk_thm410(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p <= 5 || p == 89 || legendre_symbol(89, p) != 1) return skip_row(info, p);
    return chk_cm(info, cx, {53, 500, 89, -27000000, 267, true, {1}, 3, false});
}

// ---- exact convolution identity ----

CheckResult chk_lem21(const CheckInfo& info, PrimeContext& cx, Rng&) {
    static std::once_flag flag;
    static bool sides_equal = false;
    std::call_once(flag, [] {
        auto L = lemma21_values(Side::left, 120);
        auto R = lemma21_values(Side::right, 120);
        sides_equal = (L == R);
    });
    auto r = base_row(info, cx.p());
    if (!sides_equal) {
        fail_with(r, "sides-equal", {{"m_max", "120"}});
        return r;
    }
    r.clause = "sides-equal";
    r.witness = {{"m_max", "120"}};
    return r;
}

// ---- character-sum lemmas ----

CheckResult chk_lem41(const CheckInfo& info, PrimeContext& cx, Rng& rng) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    const int samples = 100;
    for (int i = 0; i < samples; ++i) {
        u64 a = rng.below(p), mc = rng.below(p), nc = rng.below(p);
        if (!check_scaling_lemma41(a, mc, nc, cx.qr)) {
            fail_with(r, "twist-scaling", {{"a", ds(a)}, {"mc", ds(mc)}, {"nc", ds(nc)}});
            return r;
        }
    }
    r.clause = "twist-scaling";
    r.witness = {{"samples", ds(samples)}};
    return r;
}

CheckResult chk_lem42(const CheckInfo& info, PrimeContext& cx, Rng&) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    i64 S = char_sum_cubic(reduce(-30, p), reduce(-56, p), cx.qr);
    if (p % 8 == 1 || p % 8 == 3) {
        auto rep = represent(p, 1, 2, false);
        i64 c = normalize_mod4(rep->x);
        i64 rhs = ((p / 8 + 1) & 1 ? -1 : 1) * i64(legendre_symbol(3, p)) * 2 * c;
        if (S != rhs) {
            fail_with(r, "rep-value", {{"S", dsi(S)}, {"rhs", dsi(rhs)}, {"c", dsi(c)}});
            return r;
        }
        r.clause = "rep-value";
        r.witness = {{"S", dsi(S)}, {"c", dsi(c)}};
    } else {
        if (S != 0) {
            fail_with(r, "vanishes", {{"S", dsi(S)}});
            return r;
        }
        r.clause = "vanishes";
    }
    return r;
}

CheckResult chk_lem43(const CheckInfo& info, PrimeContext& cx, Rng&) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    if (p % 8 == 1 || p % 8 == 3) {
        r.ambiguity = "all-choices";
        auto rep = represent(p, 1, 2, false);
        i64 c = normalize_mod4(rep->x);
        u64 s = sqrt_mod_p(reduce(-2, p), p).value();
        for (u64 root : {s, p - s}) {
            i64 S = char_sum_cubic(reduce(-15 - 30 * i64(root), p), reduce(-28 + 70 * i64(root), p), cx.qr);
            i64 rhs = i64(legendre_symbol(2 + i64(root), p)) * ((p / 8 + 1) & 1 ? -1 : 1) *
                      legendre_symbol(3, p) * 2 * c;
            if (reduce(S, p) != reduce(rhs, p)) {
                fail_with(r, "rep-value", {{"root", ds(root)}, {"S", dsi(S)}, {"rhs", ds(reduce(rhs, p))}});
                return r;
            }
        }
        r.clause = "rep-value";
        r.witness = {{"c", dsi(c)}};
    } else {
        u64 d = reduce(-2, p);
        QuadExt S = half_power_sum(QuadExt(cx.m1, d, reduce(-15, p), reduce(-30, p)),
                                   QuadExt(cx.m1, d, reduce(-28, p), 70 % p));
        if (S.a != 0 || S.b != 0) {
            fail_with(r, "vanishes-ext", {{"S_a", ds(S.a)}, {"S_b", ds(S.b)}});
            return r;
        }
        r.clause = "vanishes-ext";
    }
    return r;
}

CheckResult chk_lem44(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p == 11) return skip_row(info, p);
    auto r = base_row(info, p);
    i64 S = char_sum_cubic(reduce(-264, p), 1694 % p, cx.qr);
    if (jacobi_symbol(i64(p), 11) == 1) {
        auto rep = represent(p, 1, 11, true);
        i64 u = rep->x;
        i64 rhs = i64(legendre_symbol(6, p)) * jacobi_symbol(u, 11) * u;
        if (S != rhs) {
            fail_with(r, "rep-value", {{"S", dsi(S)}, {"rhs", dsi(rhs)}, {"u", dsi(u)}});
            return r;
        }
        r.clause = "rep-value";
        r.witness = {{"S", dsi(S)}, {"u", dsi(u)}};
    } else {
        if (S != 0) {
            fail_with(r, "vanishes", {{"S", dsi(S)}});
            return r;
        }
        r.clause = "vanishes";
    }
    return r;
}

CheckResult chk_lem45(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p == 11) return skip_row(info, p);
    auto r = base_row(info, p);
    if (jacobi_symbol(i64(p), 11) == 1) {
        r.ambiguity = "all-choices";
        auto rep = represent(p, 1, 11, true);
        i64 u = rep->x;
        u64 s = sqrt_mod_p(reduce(-11, p), p).value();
        for (u64 root : {s, p - s}) {
            i64 S = char_sum_cubic(reduce(12 * (-5 + i64(root)), p), reduce(14 * (11 - 4 * i64(root)), p),
                                   cx.qr);
            i64 rhs = i64(legendre_symbol(6, p)) * legendre_symbol(-22 + 2 * i64(root), p) *
                      jacobi_symbol(u, 11) * u;
            if (reduce(S, p) != reduce(rhs, p)) {
                fail_with(r, "rep-value", {{"root", ds(root)}, {"S", dsi(S)}, {"rhs", ds(reduce(rhs, p))}});
                return r;
            }
        }
        r.clause = "rep-value";
        r.witness = {{"u", dsi(u)}};
    } else {
        u64 d = reduce(-11, p);
        QuadExt S = half_power_sum(QuadExt(cx.m1, d, reduce(-60, p), 12 % p),
                                   QuadExt(cx.m1, d, 154 % p, reduce(-56, p)));
        if (S.a != 0 || S.b != 0) {
            fail_with(r, "vanishes-ext", {{"S_a", ds(S.a)}, {"S_b", ds(S.b)}});
            return r;
        }
        r.clause = "vanishes-ext";
    }
    return r;
}

// shared shape of the sqrt-twisted character-sum lemmas
struct TwistSumSpec {
    i64 rval;                        // t built from sqrt(rval)
    i64 ma, mb, na, nb;              // f = x^3 + (ma + mb*root)x + (na + nb*root)
    std::initializer_list<u64> cls1; // residues mod `mod` with a representation clause
    u64 mod;
    u64 fa, fb;                      // form fa*x^2 + fb*y^2
    bool four_p;
    int rhs_kind;                    // 0: 2x(2x|3), 1: (2root|p)(x|3)x
};

CheckResult chk_twist_sum(const CheckInfo& info, PrimeContext& cx, const TwistSumSpec& sp) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    r.ambiguity = "all-choices";
    u64 s = sqrt_mod_p(reduce(sp.rval, p), p).value();
    bool cls = in_set(p % sp.mod, sp.cls1);
    i64 x = 0;
    if (cls) {
        auto rep = represent(p, sp.fa, sp.fb, sp.four_p);
        if (!rep) {
            fail_with(r, "rep-value", {{"error", "no representation"}});
            return r;
        }
        x = rep->x;
    }
    for (u64 root : {s, p - s}) {
        i64 rt = i64(root);
        i64 S = char_sum_cubic(reduce(sp.ma + sp.mb * rt, p), reduce(sp.na + sp.nb * rt, p), cx.qr);
        if (cls) {
            i64 rhs = sp.rhs_kind == 0 ? 2 * x * jacobi_symbol(2 * x, 3)
                                       : i64(legendre_symbol(2 * rt, p)) * jacobi_symbol(x, 3) * x;
            if (reduce(S, p) != reduce(rhs, p)) {
                fail_with(r, "rep-value",
                          {{"root", ds(root)}, {"S", dsi(S)}, {"rhs", ds(reduce(rhs, p))}, {"x", dsi(x)}});
                return r;
            }
        } else if (reduce(S, p) != 0) {
            fail_with(r, "vanishes", {{"root", ds(root)}, {"S", dsi(S)}});
            return r;
        }
    }
    r.clause = cls ? "rep-value" : "vanishes";
    if (cls) r.witness = {{"x", dsi(x)}};
    return r;
}

CheckResult chk_lem46(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p % 8 != 1 && p % 8 != 7) return skip_row(info, p);
    return chk_twist_sum(info, cx, {2, -15, 6, 24, -14, {1, 7}, 24, 1, 6, false, 0});
}

CheckResult chk_lem47(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p % 5 != 1 && p % 5 != 4) return skip_row(info, p);
    return chk_twist_sum(info, cx, {5, -15, 12, 42, -28, {1, 4}, 15, 1, 15, false, 0});
}

CheckResult chk_lem48(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p % 5 != 1 && p % 5 != 4) return skip_row(info, p);
    return chk_twist_sum(info, cx, {5, -300, 108, -2520, 1042, {1, 4}, 15, 1, 75, true, 1});
}

// ---- supersingular-polynomial identities ----

CheckResult chk_eq33(const CheckInfo& info, PrimeContext& cx, Rng& rng) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    const int wanted = 50;
    int got = 0, attempts = 0;
    while (got < wanted && attempts < 40 * wanted) {
        ++attempts;
        u64 mc = rng.below(p), nc = rng.below(p);
        if (!morton33_admissible(mc, nc, cx.m1)) continue;
        ++got;
        if (!check_morton33(mc, nc, cx.qr, cx.m1)) {
            fail_with(r, "jacobi-value", {{"mc", ds(mc)}, {"nc", ds(nc)}});
            return r;
        }
    }
    r.clause = "jacobi-value";
    r.witness = {{"samples", ds(u64(got))}};
    return r;
}

CheckResult chk_bm6(const CheckInfo& info, PrimeContext& cx, Rng& rng) {
    auto r = base_row(info, cx.p());
    u64 p = cx.p();
    const int wanted = 50;
    int got = 0, attempts = 0;
    while (got < wanted && attempts < 40 * wanted) {
        ++attempts;
        u64 x = rng.below(p);
        if (x == 27 % p) continue;
        ++got;
        if (!check_bm6(x, cx.wc, cx.m1)) {
            fail_with(r, "deuring-jacobi", {{"x", ds(x)}});
            return r;
        }
    }
    r.clause = "deuring-jacobi";
    r.witness = {{"samples", ds(u64(got))}};
    return r;
}

CheckResult chk_eq11(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    u64 r15 = p % 15;
    if (r15 == 1 || r15 == 4) {
        auto r = base_row(info, p);
        auto rep = represent(p, 1, 15, false);
        i64 x = rep->x;
        u64 want = reduce(4 * x * x, p);
        u64 got = cx.central(-27, 1);
        if (got != want) {
            fail_with(r, "rep-square", {{"sum", ds(got)}, {"4x2", ds(want)}, {"x", dsi(x)}});
            return r;
        }
        r.clause = "rep-square";
        r.witness = {{"x", dsi(x)}, {"y", dsi(rep->y)}};
        return r;
    }
    if (r15 == 11 || r15 == 14) {
        auto r = base_row(info, p);
        u64 got = cx.central(-27, 2);
        if (got != 0) {
            fail_with(r, "vanishes-mod-p2", {{"sum_p2", ds(got)}});
            return r;
        }
        r.clause = "vanishes-mod-p2";
        return r;
    }
    return skip_row(info, p);
}

// ---- conjecture scans ----

CheckResult chk_conj41(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (!in_set(p % 24, {5, 11, 13, 19})) return skip_row(info, p);
    auto r = base_row(info, p);
    QuadExt t(cx.m1, 2 % p, 0, mod_inv(2 % p, cx.m1));
    QuadExt P = cx.poly_at(t);
    if (in_set(p % 24, {13, 19})) {
        if (P.a != 0 || P.b != 0) {
            fail_with(r, "vanishes", {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}});
            return r;
        }
        r.clause = "vanishes";
    } else {
        auto rep = represent(p, 2, 3, false);
        i64 x = rep->x;
        u64 want = reduce(-2 * x * jacobi_symbol(x, 3), p);
        if (P.a != 0 || P.b != want) {
            fail_with(r, "rep-value", {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}, {"rhs", ds(want)}, {"x", dsi(x)}});
            return r;
        }
        r.clause = "rep-value";
        r.witness = {{"x", dsi(x)}, {"y", dsi(rep->y)}};
    }
    return r;
}

CheckResult chk_conj42(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (!in_set(p % 15, {2, 7, 8, 13})) return skip_row(info, p);
    auto r = base_row(info, p);
    QuadExt t(cx.m1, 5 % p, 0, 1);
    QuadExt P = cx.poly_at(t);
    if (in_set(p % 15, {7, 13})) {
        if (P.a != 0 || P.b != 0) {
            fail_with(r, "vanishes", {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}});
            return r;
        }
        r.clause = "vanishes";
    } else {
        auto rep = represent(p, 5, 3, false);
        i64 x = rep->x;
        u64 want = reduce(2 * x * jacobi_symbol(x, 3), p);
        if (P.a != 0 || P.b != want) {
            fail_with(r, "rep-value", {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}, {"rhs", ds(want)}, {"x", dsi(x)}});
            return r;
        }
        r.clause = "rep-value";
        r.witness = {{"x", dsi(x)}, {"y", dsi(rep->y)}};
    }
    return r;
}

CheckResult chk_weighted(const CheckInfo& info, PrimeContext& cx, i64 wa, i64 wb, i64 mv, i64 want) {
    auto r = base_row(info, cx.p());
    Modulus m3(cx.p(), 3);
    u64 rhs = reduce(want, m3.pe);
    u64 got = sum_central_weighted(wa, wb, mv, m3);
    if (got != rhs) {
        fail_with(r, "weighted-sum", {{"sum", ds(got)}, {"rhs", ds(rhs)}});
        return r;
    }
    r.clause = "weighted-sum";
    r.witness = {{"value", ds(got)}};
    return r;
}

CheckResult chk_conj43(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p <= 5) return skip_row(info, p);
    i64 want = jacobi_symbol(i64(p), 15) == 1 ? i64(p) : -i64(p);
    return chk_weighted(info, cx, 9, 1, -8640, want);
}

CheckResult chk_conj44(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (!in_set(p % 30, {7, 13, 17, 23})) return skip_row(info, p);
    auto r = base_row(info, p);
    QuadExt t(cx.m1, 5 % p, 0, rational_residue(9, 20, cx.m1));
    QuadExt P = cx.poly_at(t);
    if (in_set(p % 30, {7, 13})) {
        auto rep = represent(p, 3, 25, true);
        i64 y = rep->y;
        u64 want = reduce(5 * y * jacobi_symbol(y, 3), p);
        if (P.b != 0 || P.a != want) {
            fail_with(r, "rep-value", {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}, {"rhs", ds(want)}, {"y", dsi(y)}});
            return r;
        }
        r.clause = "rep-value";
        r.witness = {{"x", dsi(rep->x)}, {"y", dsi(y)}};
    } else {
        if (P.a != 0 || P.b != 0) {
            fail_with(r, "vanishes", {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}});
            return r;
        }
        r.clause = "vanishes";
    }
    return r;
}

CheckResult chk_conj456(const CheckInfo& info, PrimeContext& cx, i64 rval, i64 c1, i64 c2) {
    u64 p = cx.p();
    if (p % u64(rval) == 0 || legendre_symbol(rval, p) != -1) return skip_row(info, p);
    auto r = base_row(info, p);
    QuadExt t(cx.m1, u64(rval) % p, 0, rational_residue(c1, c2, cx.m1));
    QuadExt P = cx.poly_at(t);
    if (p % 3 == 1) {
        if (P.a != 0 || P.b != 0) {
            fail_with(r, "vanishes", {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}});
            return r;
        }
        r.clause = "vanishes";
    } else {
        auto rep = represent(p, 3, u64(rval), true);
        if (!rep) {
            fail_with(r, "rep-value", {{"error", "no representation"}});
            return r;
        }
        i64 y = rep->y;
        u64 want = reduce(-jacobi_symbol(y, 3) * y, p);
        if (P.a != 0 || P.b != want) {
            fail_with(r, "rep-value", {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}, {"rhs", ds(want)}, {"y", dsi(y)}});
            return r;
        }
        r.clause = "rep-value";
        r.witness = {{"x", dsi(rep->x)}, {"y", dsi(y)}};
    }
    return r;
}

CheckResult chk_conj45(const CheckInfo& info, PrimeContext& cx, Rng&) { return chk_conj456(info, cx, 17, 1, 4); }
CheckResult chk_conj46(const CheckInfo& info, PrimeContext& cx, Rng&) { return chk_conj456(info, cx, 41, 5, 32); }
CheckResult chk_conj47(const CheckInfo& info, PrimeContext& cx, Rng&) { return chk_conj456(info, cx, 89, 53, 500); }

CheckResult chk_conj48(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p % 5 != 1 && p % 5 != 4) return skip_row(info, p);
    return chk_twist_sum(info, cx, {5, -375, 132, 3234, -1540, {1, 4}, 15, 1, 15, false, 0});
}

CheckResult chk_conj49(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p <= 5) return skip_row(info, p);
    i64 want = jacobi_symbol(i64(p), 3) == 1 ? 4 * i64(p) : -4 * i64(p);
    return chk_weighted(info, cx, 33, 4, 3375, want);
}

CheckResult chk_conj410(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p <= 5) return skip_row(info, p);
    auto r = base_row(info, p);
    std::vector<QuadExt> ts;
    if (legendre_symbol(5, p) == 1) {
        u64 s = sqrt_mod_p(5 % p, p).value();
        u64 i25 = mod_inv(25 % p, cx.m1);
        ts = {QuadExt::scalar(cx.m1, mulmod(mulmod(11 % p, s, p), i25, p)),
              QuadExt::scalar(cx.m1, mulmod(mulmod(11 % p, p - s, p), i25, p))};
        r.ambiguity = "all-choices";
    } else {
        ts = {QuadExt(cx.m1, 5 % p, 0, rational_residue(11, 25, cx.m1))};
    }
    u64 r30 = p % 30;
    for (const auto& t : ts) {
        QuadExt P = cx.poly_at(t);
        if (r30 == 1 || r30 == 19) {
            auto rep = represent(p, 1, 15, false);
            i64 x = rep->x;
            u64 want = reduce(2 * x * jacobi_symbol(x, 3), p);
            if (P.a != want || P.b != 0) {
                fail_with(r, "rep-value",
                          {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}, {"rhs", ds(want)}, {"x", dsi(x)}});
                return r;
            }
            r.clause = "rep-value";
            r.witness = {{"x", dsi(x)}, {"y", dsi(rep->y)}};
        } else if (r30 == 17 || r30 == 23) {
            auto rep = represent(p, 3, 5, false);
            i64 y = rep->y;
            u64 want = reduce(-2 * y * jacobi_symbol(y, 3), p);
            if (P.a != 0 || P.b != want) {
                fail_with(r, "rep-value",
                          {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}, {"rhs", ds(want)}, {"y", dsi(y)}});
                return r;
            }
            r.clause = "rep-value";
            r.witness = {{"x", dsi(rep->x)}, {"y", dsi(y)}};
        } else {
            if (P.a != 0 || P.b != 0) {
                fail_with(r, "vanishes", {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}});
                return r;
            }
            r.clause = "vanishes";
        }
    }
    return r;
}

CheckResult chk_conj411(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    i64 want = ((p - 1) / 2) % 2 ? -2 * i64(p) : 2 * i64(p);
    return chk_weighted(info, cx, 15, 2, 1458, want);
}

CheckResult chk_conj412(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    auto r = base_row(info, p);
    r.ambiguity = "all-choices";
    std::vector<QuadExt> ts;
    if (legendre_symbol(3, p) == 1) {
        u64 s = sqrt_mod_p(3 % p, p).value();
        u64 i9 = mod_inv(9 % p, cx.m1);
        ts = {QuadExt::scalar(cx.m1, mulmod(mulmod(5 % p, s, p), i9, p)),
              QuadExt::scalar(cx.m1, mulmod(mulmod(5 % p, p - s, p), i9, p))};
    } else {
        u64 v = rational_residue(5, 9, cx.m1);
        ts = {QuadExt(cx.m1, 3 % p, 0, v), QuadExt(cx.m1, 3 % p, 0, negmod(v, p))};
    }
    for (const auto& t : ts) {
        QuadExt P = cx.poly_at(t);
        if (p % 3 == 1) {
            auto rep = represent(p, 1, 3, false);
            i64 x = rep->x;
            i64 sgn = ((p - 1) / 2) % 2 ? -1 : 1;
            u64 want = reduce(sgn * 2 * x * jacobi_symbol(x, 3), p);
            if (P.a != want || P.b != 0) {
                fail_with(r, "rep-value",
                          {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}, {"rhs", ds(want)}, {"x", dsi(x)}});
                return r;
            }
            r.clause = "rep-value";
            r.witness = {{"x", dsi(x)}, {"y", dsi(rep->y)}};
        } else {
            if (P.a != 0 || P.b != 0) {
                fail_with(r, "vanishes", {{"P_a", ds(P.a)}, {"P_b", ds(P.b)}});
                return r;
            }
            r.clause = "vanishes";
        }
    }
    return r;
}

CheckResult chk_conjA46(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    auto r = base_row(info, p);
    Modulus m2(p, 2);
    u64 A = sum_pair(mod_inv(24 % m2.pe, m2), m2);
    u64 B = sum_pair(mod_inv(reduce(-216, m2.pe), m2), m2);
    int s3 = jacobi_symbol(i64(p), 3);
    if (p % 3 == 1) {
        u64 C = binom_punit(2 * (p - 1) / 3, (p - 1) / 3, m2).reconstruct(m2);
        u64 sB = s3 == 1 ? B : negmod(B, m2.pe);
        if (A != sB || A != C) {
            fail_with(r, "binomial-match", {{"A", ds(A)}, {"B", ds(B)}, {"C", ds(C)}});
            return r;
        }
        r.clause = "binomial-match";
        r.witness = {{"value", ds(A)}};
    } else {
        u64 Ap = A % p, Bp = B % p;
        u64 sBp = s3 == 1 ? Bp : negmod(Bp, p);
        if (Ap != sBp || Ap != 0) {
            fail_with(r, "vanishes-mod-p", {{"A_mod_p", ds(Ap)}, {"B_mod_p", ds(Bp)}});
            return r;
        }
        r.clause = "vanishes-mod-p";
    }
    return r;
}

// trace-style mod p^2 conjectures: sum == coef*x^2 - 2p (or 2p - coef*x^2) on
// each residue class, 0 outside them
struct TraceBranch {
    std::initializer_list<u64> cls;
    u64 fa, fb;
    bool four_p;
    i64 coef;  // sum == coef*x^2 - 2p; negative coef means 2p - |coef|*x^2
};

CheckResult chk_trace(const CheckInfo& info, PrimeContext& cx, i64 mv, u64 mod,
                      std::initializer_list<TraceBranch> branches) {
    u64 p = cx.p();
    auto r = base_row(info, p);
    Modulus m2(p, 2);
    u64 S = cx.central(mv, 2);
    for (const auto& br : branches) {
        if (!in_set(p % mod, br.cls)) continue;
        auto rep = represent(p, br.fa, br.fb, br.four_p);
        if (!rep) {
            fail_with(r, "rep-square-mod-p2", {{"error", "no representation"}});
            return r;
        }
        i64 x = rep->x;
        u64 xx = mulmod(reduce(x, m2.pe), reduce(x, m2.pe), m2.pe);
        u64 want = br.coef > 0 ? submod(mulmod(u64(br.coef), xx, m2.pe), 2 * p % m2.pe, m2.pe)
                               : submod(2 * p % m2.pe, mulmod(u64(-br.coef), xx, m2.pe), m2.pe);
        if (S != want) {
            fail_with(r, "rep-square-mod-p2",
                      {{"sum", ds(S)}, {"rhs", ds(want)}, {"x", dsi(x)}, {"y", dsi(rep->y)}});
            return r;
        }
        r.clause = "rep-square-mod-p2";
        r.witness = {{"x", dsi(x)}, {"y", dsi(rep->y)}};
        return r;
    }
    if (S != 0) {
        fail_with(r, "vanishes-mod-p2", {{"sum_p2", ds(S)}});
        return r;
    }
    r.clause = "vanishes-mod-p2";
    return r;
}

CheckResult chk_conjA5(const CheckInfo& info, PrimeContext& cx, Rng&) {
    return chk_trace(info, cx, 8, 8, {{{1, 3}, 1, 2, false, 4}});
}

CheckResult chk_conjA4(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p == 11) return skip_row(info, p);
    if (jacobi_symbol(i64(p), 11) == 1) return chk_trace(info, cx, 64, 1, {{{0}, 1, 11, true, 1}});
    return chk_trace(info, cx, 64, 1, {});
}

CheckResult chk_conjA14(const CheckInfo& info, PrimeContext& cx, Rng&) {
    return chk_trace(info, cx, 216, 24, {{{1, 7}, 1, 6, false, 4}, {{5, 11}, 2, 3, false, 8}});
}

CheckResult chk_conj8640(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p <= 5) return skip_row(info, p);
    return chk_trace(info, cx, -8640, 15, {{{1, 4}, 1, 75, true, 1}, {{7, 13}, 3, 25, true, -3}});
}

CheckResult chk_conjA13(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p <= 5) return skip_row(info, p);
    return chk_trace(info, cx, -27, 15, {{{1, 4}, 1, 15, false, 4}, {{2, 8}, 5, 3, false, 20}});
}

CheckResult chk_conj15cubed(const CheckInfo& info, PrimeContext& cx, Rng&) {
    u64 p = cx.p();
    if (p <= 5) return skip_row(info, p);
    return chk_trace(info, cx, 3375, 15, {{{1, 4}, 1, 15, false, 4}, {{2, 8}, 3, 5, false, -12}});
}

CheckResult chk_conj1458(const CheckInfo& info, PrimeContext& cx, Rng&) {
    return chk_trace(info, cx, 1458, 3, {{{1}, 1, 3, false, 4}});
}

// ---- registry ----

using ChkFn = CheckResult (*)(const CheckInfo&, PrimeContext&, Rng&);

struct Entry {
    CheckInfo info;
    ChkFn fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> reg = {
        {{"thm-2.1", "theorem", "p >= 5"}, chk_thm21},
        {{"thm-3.1", "theorem", "p >= 5"}, chk_thm31},
        {{"thm-3.2", "theorem", "p >= 5"}, chk_thm32},
        {{"thm-4.1", "theorem", "p >= 5"}, chk_thm41},
        {{"thm-4.2", "theorem", "p >= 5"}, chk_thm42},
        {{"thm-4.3", "theorem", "p >= 5"}, chk_thm43},
        {{"thm-4.4", "theorem", "p != 11"}, chk_thm44},
        {{"thm-4.5", "theorem", "p % 8 in {1,7}"}, chk_thm45},
        {{"thm-4.6", "theorem", "p % 5 in {1,4}"}, chk_thm46},
        {{"thm-4.7", "theorem", "p % 5 in {1,4}"}, chk_thm47},
        {{"thm-4.8", "theorem", "p != 17 and (17|p) = 1"}, chk_thm48},
        {{"thm-4.9", "theorem", "p != 41 and (41|p) = 1"}, chk_thm49},
        {{"thm-4.10", "theorem", "p > 5 and p != 89 and (89|p) = 1"}, chk_thm410},
        {{"cor-2.1", "corollary", "p >= 5"}, chk_cor21},
        {{"cor-3.1", "corollary", "p >= 5"}, chk_cor31},
        {{"cor-3.2", "corollary", "p >= 17"}, chk_cor32},
        {{"cor-3.3", "corollary", "p >= 5"}, chk_cor33},
        {{"cor-4.1", "corollary", "p % 8 in {1,3}"}, chk_cor41},
        {{"cor-4.2", "corollary", "p != 11 and (p|11) = 1"}, chk_cor42},
        {{"lem-2.1", "lemma", "p >= 5"}, chk_lem21},
        {{"lem-4.1", "lemma", "p >= 5"}, chk_lem41},
        {{"lem-4.2", "lemma", "p >= 5"}, chk_lem42},
        {{"lem-4.3", "lemma", "p >= 5"}, chk_lem43},
        {{"lem-4.4", "lemma", "p != 11"}, chk_lem44},
        {{"lem-4.5", "lemma", "p != 11"}, chk_lem45},
        {{"lem-4.6", "lemma", "p % 8 in {1,7}"}, chk_lem46},
        {{"lem-4.7", "lemma", "p % 5 in {1,4}"}, chk_lem47},
        {{"lem-4.8", "lemma", "p % 5 in {1,4}"}, chk_lem48},
        {{"eq-3.3", "identity", "p >= 5"}, chk_eq33},
        {{"eq-3.5-bm6", "identity", "p >= 5"}, chk_bm6},
        {{"eq-1.1-proved-part", "identity", "p % 15 in {1,4,11,14}"}, chk_eq11},
        {{"conj-4.1", "conjecture", "p % 24 in {5,11,13,19}"}, chk_conj41},
        {{"conj-4.2", "conjecture", "p % 15 in {2,7,8,13}"}, chk_conj42},
        {{"conj-4.3", "conjecture", "p > 5"}, chk_conj43},
        {{"conj-4.4", "conjecture", "p % 30 in {7,13,17,23}"}, chk_conj44},
        {{"conj-4.5", "conjecture", "(17|p) = -1"}, chk_conj45},
        {{"conj-4.6", "conjecture", "(41|p) = -1"}, chk_conj46},
        {{"conj-4.7", "conjecture", "(89|p) = -1"}, chk_conj47},
        {{"conj-4.8", "conjecture", "p % 5 in {1,4}"}, chk_conj48},
        {{"conj-4.9", "conjecture", "p > 5"}, chk_conj49},
        {{"conj-4.10", "conjecture", "p > 5"}, chk_conj410},
        {{"conj-4.11", "conjecture", "p >= 5"}, chk_conj411},
        {{"conj-4.12", "conjecture", "p >= 5"}, chk_conj412},
        {{"conj-A46", "conjecture", "p >= 5"}, chk_conjA46},
        {{"conj-A5", "conjecture", "p >= 5"}, chk_conjA5},
        {{"conj-A4", "conjecture", "p != 11"}, chk_conjA4},
        {{"conj-A14", "conjecture", "p >= 5"}, chk_conjA14},
        {{"conj-A13-full", "conjecture", "p > 5"}, chk_conjA13},
        {{"conj-8640-full", "conjecture", "p > 5"}, chk_conj8640},
        {{"conj-15cubed", "conjecture", "p > 5"}, chk_conj15cubed},
        {{"conj-1458", "conjecture", "p >= 5"}, chk_conj1458},
    };
    return reg;
}

const Entry* find_entry(const std::string& id) {
    for (const auto& e : registry())
        if (e.info.id == id) return &e;
    return nullptr;
}

CheckResult run_one(const Entry& e, PrimeContext& cx, u64 seed) {
    Rng rng(seed ^ fnv1a(e.info.id) ^ (cx.p() * 0x9e3779b97f4a7c15ULL));
    CheckResult r;
    try {
        r = e.fn(e.info, cx, rng);
    } catch (const std::exception& ex) {
        r = CheckResult{};
        r.check = e.info.id;
        r.p = cx.p();
        r.status = Status::fail;
        r.clause = "internal-error";
        r.witness = {{"error", ex.what()}};
    }
    if (e.info.kind == "conjecture") {
        if (r.status == Status::pass) r.status = Status::conj_holds;
        else if (r.status == Status::fail) r.status = Status::conj_fails;
    }
    return r;
}

int resolve_workers(int requested) {
    if (requested > 0) return std::min(requested, 64);
    if (const char* env = std::getenv("CONGRUENCE_LAB_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return std::min(v, 64);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(std::min(hc, 64u)) : 1;
}

}  // namespace

const std::vector<CheckInfo>& list_checks() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

bool is_check_id(const std::string& id) { return find_entry(id) != nullptr; }

CheckResult run_check(const std::string& id, u64 p, u64 seed) {
    const Entry* e = find_entry(id);
    if (!e) throw std::invalid_argument("unknown check id: " + id);
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 5");
    PrimeContext cx(p);
    return run_one(*e, cx, seed);
}

SweepReport sweep(const SweepOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    SweepReport rep;
    rep.lo = std::max<u64>(opt.lo, 5);
    rep.hi = opt.hi;

    std::vector<const Entry*> selected;
    if (opt.ids.empty()) {
        for (const auto& e : registry()) selected.push_back(&e);
    } else {
        for (const auto& id : opt.ids) {
            const Entry* e = find_entry(id);
            if (!e) throw std::invalid_argument("unknown check id: " + id);
            selected.push_back(e);
        }
    }

    std::vector<u64> ps = prime_stream(rep.lo, rep.hi);
    std::vector<std::vector<CheckResult>> rows(ps.size());
    std::atomic<size_t> cursor{0};
    auto work = [&] {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= ps.size()) break;
            PrimeContext cx(ps[i]);
            rows[i].reserve(selected.size());
            for (const Entry* e : selected) rows[i].push_back(run_one(*e, cx, opt.seed));
        }
    };
    int workers = resolve_workers(opt.workers);
    if (workers <= 1 || ps.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers - 1; ++i) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
    }
    for (auto& chunk : rows)
        for (auto& row : chunk) rep.rows.push_back(std::move(row));
    sort_rows(rep);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace clab
