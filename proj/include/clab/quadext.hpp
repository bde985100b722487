#pragma once

#include <stdexcept>

#include "clab/modular.hpp"

namespace clab {

struct domain_mismatch : std::runtime_error {
    explicit domain_mismatch(const char* what) : std::runtime_error(what) {}
};

// Element a + b*w of R[w]/(w^2 - d) over R = Z/p^e.  With e=1 and d a
// non-residue this is the field F_p(sqrt d); with b=0 it is the prime subring.
struct QuadExt {
    Modulus m;
    u64 d = 0;
    u64 a = 0;
    u64 b = 0;

    QuadExt() = default;
    QuadExt(Modulus mod, u64 dd, u64 aa, u64 bb) : m(mod), d(dd % mod.pe), a(aa % mod.pe), b(bb % mod.pe) {}

    static QuadExt scalar(Modulus mod, u64 aa, u64 dd = 0) { return QuadExt(mod, dd, aa, 0); }

    bool is_scalar() const { return b == 0; }
    bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }
};

inline void check_domain(const QuadExt& x, const QuadExt& y) {
    if (x.m.pe != y.m.pe || (x.b && y.b && x.d != y.d))
        throw domain_mismatch("mixed moduli or radicands");
}

inline QuadExt ext_add(const QuadExt& x, const QuadExt& y) {
    check_domain(x, y);
    return QuadExt(x.m, x.b ? x.d : y.d, addmod(x.a, y.a, x.m.pe), addmod(x.b, y.b, x.m.pe));
}

inline QuadExt ext_sub(const QuadExt& x, const QuadExt& y) {
    check_domain(x, y);
    return QuadExt(x.m, x.b ? x.d : y.d, submod(x.a, y.a, x.m.pe), submod(x.b, y.b, x.m.pe));
}

inline QuadExt ext_mul(const QuadExt& x, const QuadExt& y) {
    check_domain(x, y);
    u64 pe = x.m.pe;
    u64 d = x.b ? x.d : y.d;
    u64 aa = addmod(mulmod(x.a, y.a, pe), mulmod(d, mulmod(x.b, y.b, pe), pe), pe);
    u64 bb = addmod(mulmod(x.a, y.b, pe), mulmod(x.b, y.a, pe), pe);
    return QuadExt(x.m, d, aa, bb);
}

inline QuadExt ext_scale(const QuadExt& x, u64 c) {
    return QuadExt(x.m, x.d, mulmod(x.a, c % x.m.pe, x.m.pe), mulmod(x.b, c % x.m.pe, x.m.pe));
}

inline QuadExt ext_pow(QuadExt base, u64 exp) {
    QuadExt r = QuadExt::scalar(base.m, 1, base.d);
    while (exp) {
        if (exp & 1) r = ext_mul(r, base);
        base = ext_mul(base, base);
        exp >>= 1;
    }
    return r;
}

inline QuadExt ext_conj(const QuadExt& x) { return QuadExt(x.m, x.d, x.a, negmod(x.b, x.m.pe)); }

// z^((p-1)/2) -- the extension-field Euler criterion used by the half-power
// character sums.  Defined for e=1.
inline QuadExt half_power(const QuadExt& z) { return ext_pow(z, (z.m.p - 1) / 2); }

// Square root of a residue, embedded in F_p when a is a QR and in F_p(sqrt a)
// with b-coefficient 1 otherwise.  The radicand itself is used as d so paper
// style expressions keep their shape.
inline QuadExt sqrt_in_ext(u64 a, const Modulus& m) {
    a %= m.p;
    if (a == 0) return QuadExt::scalar(m, 0);
    if (auto r = sqrt_mod_p(a, m.p)) return QuadExt::scalar(m, *r);
    return QuadExt(m, a, 0, 1);
}

}  // namespace clab
