#include "clab/selftest.hpp"

#include <cstdio>

#include "clab/binomial.hpp"
#include "clab/curve.hpp"
#include "clab/exact.hpp"
#include "clab/poly.hpp"
#include "clab/primes.hpp"
#include "clab/quadext.hpp"
#include "clab/quadform.hpp"
#include "clab/verifier.hpp"

namespace clab {
namespace {

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

struct Section {
    SelftestResult& out;
    std::string name;
    bool failed = false;
    u64 cases = 0;

    Section(SelftestResult& o, std::string n) : out(o), name(std::move(n)) {}

    void fail(const std::string& detail) {
        if (!failed) {
            failed = true;
            out.ok = false;
            out.lines.push_back("FAIL " + name + ": " + detail);
        }
    }

    ~Section() {
        if (!failed) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "ok   %s (%llu cases)", name.c_str(), (unsigned long long)cases);
            out.lines.push_back(buf);
        }
    }
};

void section_symbols(SelftestResult& out, const std::vector<u64>& primes, Rng& rng) {
    Section s(out, "quadratic-symbol agreement");
    for (u64 p : primes) {
        QrTable qr(p);
        for (int i = 0; i < 200; ++i) {
            u64 a = rng.below(p);
            int l = legendre_symbol(i64(a), p);
            int j = jacobi_symbol(i64(a), p);
            int c = qr(a);
            ++s.cases;
            if (l != j || l != c) {
                s.fail("p=" + std::to_string(p) + " a=" + std::to_string(a));
                return;
            }
        }
    }
}

void section_sqrt(SelftestResult& out, const std::vector<u64>& primes, Rng& rng) {
    Section s(out, "square roots mod p");
    for (u64 p : primes) {
        if (sqrt_mod_p(0, p) != std::optional<u64>(0)) {
            s.fail("sqrt(0) != 0 at p=" + std::to_string(p));
            return;
        }
        for (int i = 0; i < 60; ++i) {
            u64 a = rng.below(p);
            auto r = sqrt_mod_p(a, p);
            ++s.cases;
            if (legendre_symbol(i64(a), p) == -1) {
                if (r) {
                    s.fail("root of non-residue p=" + std::to_string(p) + " a=" + std::to_string(a));
                    return;
                }
                continue;
            }
            if (!r || mulmod(*r, *r, p) != a || (a != 0 && *r > (p - 1) / 2)) {
                s.fail("bad root p=" + std::to_string(p) + " a=" + std::to_string(a));
                return;
            }
        }
    }
}

void section_frobenius(SelftestResult& out, const std::vector<u64>& primes, Rng& rng) {
    Section s(out, "frobenius is conjugation");
    for (u64 p : primes) {
        if (p > 500) break;
        Modulus m(p, 1);
        u64 d;
        do d = rng.below(p); while (d == 0 || legendre_symbol(i64(d), p) != -1);
        for (int i = 0; i < 25; ++i) {
            QuadExt z(m, d, rng.below(p), rng.below(p));
            ++s.cases;
            if (ext_pow(z, p) != ext_conj(z)) {
                s.fail("p=" + std::to_string(p));
                return;
            }
        }
    }
}

void section_sqrt_ext(SelftestResult& out, const std::vector<u64>& primes, Rng& rng) {
    Section s(out, "extension square roots");
    for (u64 p : primes) {
        if (p > 500) break;
        Modulus m(p, 1);
        for (int i = 0; i < 40; ++i) {
            u64 a = rng.below(p);
            QuadExt r = sqrt_in_ext(a, m);
            QuadExt sq = ext_mul(r, r);
            ++s.cases;
            if (sq.b != 0 || sq.a != a) {
                s.fail("p=" + std::to_string(p) + " a=" + std::to_string(a));
                return;
            }
        }
    }
}

void section_punit_binom(SelftestResult& out) {
    Section s(out, "prime-power binomials vs exact");
    for (u64 p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        warm_inverse_table(u64(p));
        for (int e = 1; e <= 3; ++e) {
            Modulus m(u64(p), e);
            for (u64 n = 0; n <= 150; n += (n < 30 ? 1 : 7)) {
                for (u64 k = 0; k <= n; ++k) {
                    u64 got = binom_punit(n, k, m).reconstruct(m);
                    u64 want = u64(exact_binom(i64(n), i64(k)) % ExactInt(m.pe));
                    ++s.cases;
                    if (got != want) {
                        s.fail("p=" + std::to_string(p) + " e=" + std::to_string(e) +
                               " C(" + std::to_string(n) + "," + std::to_string(k) + ")");
                        return;
                    }
                }
            }
        }
    }
}

void section_parity(SelftestResult& out, Rng& rng) {
    Section s(out, "polynomial parity");
    for (u64 p : {101, 499, 997}) {
        Modulus m(u64(p), 1);
        for (u64 n = 0; n <= 60; ++n) {
            auto c = legendre_poly_coeffs(n, m);
            u64 t = rng.below(p);
            u64 a = legendre_eval(c, n, t, m);
            u64 b = legendre_eval(c, n, negmod(t, p), m);
            ++s.cases;
            if ((n % 2 == 0 && a != b) || (n % 2 == 1 && a != negmod(b, p))) {
                s.fail("scalar n=" + std::to_string(n) + " p=" + std::to_string(p));
                return;
            }
            if (n % 2 == 1 && legendre_eval(c, n, 0, m) != 0) {
                s.fail("odd value at 0, n=" + std::to_string(n));
                return;
            }
            u64 d;
            do d = rng.below(p); while (d == 0 || legendre_symbol(i64(d), p) != -1);
            QuadExt te(m, d, rng.below(p), rng.below(p));
            QuadExt ea = legendre_eval(c, n, te);
            QuadExt eb = legendre_eval(c, n, ext_sub(QuadExt::scalar(m, 0, d), te));
            QuadExt want = n % 2 ? ext_sub(QuadExt::scalar(m, 0, d), eb) : eb;
            if (ea != want) {
                s.fail("ext n=" + std::to_string(n) + " p=" + std::to_string(p));
                return;
            }
        }
    }
}

void section_deuring(SelftestResult& out, const std::vector<u64>& primes, Rng& rng) {
    Section s(out, "squared-binomial transform");
    for (u64 p : primes) {
        if (p < 11 || p > 600) continue;
        Modulus m(p, 1);
        for (u64 n : {u64(5), u64(20), p / 3}) {
            auto wc = deuring_coeffs(n, m);
            auto pc = legendre_poly_coeffs(n, m);
            for (int i = 0; i < 10; ++i) {
                u64 x = rng.below(p);
                if (x == 1) continue;
                u64 lhs = deuring_eval(wc, x, m);
                u64 onemx = submod(1 % p, x, p);
                u64 arg = mulmod(addmod(1 % p, x, p), mod_inv(onemx, m), p);
                u64 rhs = mulmod(mod_pow(onemx, n, m), legendre_eval(pc, n, arg, m), p);
                ++s.cases;
                if (lhs != rhs) {
                    s.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) + " x=" + std::to_string(x));
                    return;
                }
            }
            for (int i = 0; i < 10; ++i) {
                u64 t = rng.below(p);
                if (t == p - 1) continue;
                u64 tp1 = addmod(t, 1 % p, p);
                u64 lhs = deuring_eval(wc, mulmod(submod(t, 1 % p, p), mod_inv(tp1, m), p), m);
                u64 rhs = mulmod(mod_pow(mulmod(2 % p, mod_inv(tp1, m), p), n, m),
                                 legendre_eval(pc, n, t, m), p);
                ++s.cases;
                if (lhs != rhs) {
                    s.fail("scaled p=" + std::to_string(p) + " t=" + std::to_string(t));
                    return;
                }
            }
        }
    }
}

void section_weil(SelftestResult& out, const std::vector<u64>& primes, Rng& rng) {
    Section s(out, "curve sums inside the Weil bound");
    for (u64 p : primes) {
        QrTable qr(p);
        for (int i = 0; i < 500; ++i) {
            u64 mc = rng.below(p), nc = rng.below(p);
            ++s.cases;
            if (!check_weil(mc, nc, qr)) {
                s.fail("p=" + std::to_string(p) + " mc=" + std::to_string(mc) + " nc=" + std::to_string(nc));
                return;
            }
        }
    }
}

void section_points(SelftestResult& out, const std::vector<u64>& primes) {
    Section s(out, "point counts vs naive");
    for (u64 p : primes) {
        if (p > 61) break;
        QrTable qr(p);
        for (u64 mc = 0; mc < p; ++mc)
            for (u64 nc = 0; nc < p; nc += 2) {
                ++s.cases;
                if (point_count(mc, nc, qr) != point_count_naive(mc, nc, p)) {
                    s.fail("p=" + std::to_string(p) + " mc=" + std::to_string(mc) + " nc=" + std::to_string(nc));
                    return;
                }
            }
    }
}

void section_represent(SelftestResult& out, u64 rep_max_prime) {
    Section s(out, "descent vs exhaustive representation");
    struct Form { u64 a, b; bool four_p; };
    const Form forms[] = {{1, 27, true}, {1, 2, false},  {1, 11, true},  {1, 15, false}, {1, 6, false},
                          {1, 75, true}, {1, 51, true},  {1, 123, true}, {1, 267, true}, {1, 3, false}};
    for (u64 p : prime_stream(5, rep_max_prime)) {
        for (const auto& f : forms) {
            auto fast = represent(p, f.a, f.b, f.four_p);
            auto slow = represent_slow(p, f.a, f.b, f.four_p);
            ++s.cases;
            if (fast.has_value() != slow.has_value() ||
                (fast && (fast->x != slow->x || fast->y != slow->y))) {
                s.fail("p=" + std::to_string(p) + " form (" + std::to_string(f.a) + "," +
                       std::to_string(f.b) + (f.four_p ? ",4p)" : ",p)"));
                return;
            }
        }
    }
}

void section_gen_binom(SelftestResult& out) {
    Section s(out, "falling-factorial binomials");
    for (u64 p : {13, 101, 997}) {
        for (int e = 1; e <= 2; ++e) {
            Modulus m(u64(p), e);
            for (u64 n = 0; n < std::min<u64>(p, 40); ++n) {
                for (u64 r = 0; r <= n + 3 && r < p; ++r) {
                    u64 got = gen_binom(n, r, m);
                    u64 want = u64(exact_binom(i64(n), i64(r)) % ExactInt(m.pe));
                    ++s.cases;
                    if (got != want) {
                        s.fail("p=" + std::to_string(p) + " e=" + std::to_string(e) + " (" +
                               std::to_string(n) + " choose " + std::to_string(r) + ")");
                        return;
                    }
                }
            }
        }
    }
}

void section_half_power(SelftestResult& out, const std::vector<u64>& primes, Rng& rng) {
    Section s(out, "half powers stay in the base field");
    for (u64 p : primes) {
        if (p > 300) break;
        Modulus m(p, 1);
        u64 d;
        do d = rng.below(p); while (d == 0 || legendre_symbol(i64(d), p) != -1);
        for (int i = 0; i < 30; ++i) {
            u64 a = 1 + rng.below(p - 1);
            QuadExt h = half_power(QuadExt(m, d, a, 0));
            ++s.cases;
            if (h.b != 0 || h.a != reduce(legendre_symbol(i64(a), p), p)) {
                s.fail("p=" + std::to_string(p) + " a=" + std::to_string(a));
                return;
            }
        }
    }
}

void section_poly_paths(SelftestResult& out, Rng& rng) {
    Section s(out, "polynomial coefficient vs recurrence path");
    for (u64 p : {89, 499, 2003}) {
        Modulus m(u64(p), 1);
        for (u64 n = 0; n <= 80; ++n) {
            u64 t = rng.below(p);
            ++s.cases;
            if (legendre_poly(n, t, m) != legendre_poly_recurrence(n, t, m)) {
                s.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) + " t=" + std::to_string(t));
                return;
            }
        }
    }
}

void section_desk_sweep(SelftestResult& out) {
    Section s(out, "desk-scale sweep is clean");
    SweepOptions opt;
    opt.lo = 5;
    opt.hi = 500;
    auto rep = sweep(opt);
    for (const auto& row : rep.rows) {
        ++s.cases;
        if (row.status == Status::fail || row.status == Status::conj_fails) {
            s.fail(row.check + " p=" + std::to_string(row.p) + " " + row.clause);
            return;
        }
        if (row.status == Status::skipped && row.clause.rfind("hypothesis not met", 0) != 0) {
            s.fail("non-hypothesis skip: " + row.check + " p=" + std::to_string(row.p));
            return;
        }
    }
}

}  // namespace

SelftestResult run_selftest(u64 max_prime, u64 rep_max_prime) {
    SelftestResult out;
    Rng rng(0x5e1f7e57);
    std::vector<u64> primes = prime_stream(5, max_prime);
    if (primes.empty()) {
        out.ok = false;
        out.lines.push_back("FAIL setup: no primes below " + std::to_string(max_prime));
        return out;
    }
    section_symbols(out, primes, rng);
    section_sqrt(out, primes, rng);
    section_frobenius(out, primes, rng);
    section_sqrt_ext(out, primes, rng);
    section_punit_binom(out);
    section_parity(out, rng);
    section_deuring(out, primes, rng);
    section_weil(out, primes, rng);
    section_points(out, primes);
    section_represent(out, rep_max_prime);
    section_gen_binom(out);
    section_half_power(out, primes, rng);
    section_poly_paths(out, rng);
    section_desk_sweep(out);
    return out;
}

}  // namespace clab
