#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>

#include "clab/modular.hpp"

using namespace clab;

TEST_CASE("word_arithmetic_edges") {
    u64 m = (u64(1) << 40) - 87;
    u64 a = (u64(1) << 39) + 5, b = (u64(1) << 39) + 7;
    CHECK(mulmod(a, b, m) == u64((unsigned __int128)(a) * b % m));
    CHECK(addmod(m - 1, m - 1, m) == m - 2);
    CHECK(addmod(0, 0, m) == 0);
    CHECK(submod(0, 1, m) == m - 1);
    CHECK(submod(5, 5, m) == 0);
    CHECK(negmod(0, m) == 0);
    CHECK(negmod(1, m) == m - 1);
    CHECK(reduce(-1, 7) == 6);
    CHECK(reduce(-14, 7) == 0);
    CHECK(reduce(20, 7) == 6);
}

TEST_CASE("powmod_fermat") {
    u64 p = 1000000007;
    CHECK(powmod(3, p - 1, p) == 1);
    CHECK(powmod(123456, 0, p) == 1);
    CHECK(powmod(0, 5, p) == 0);
    CHECK(powmod(7, 3, 1) == 0);
    u64 x = 987654321;
    CHECK(mulmod(powmod(x, 10, p), x, p) == powmod(x, 11, p));
}

TEST_CASE("modulus_construction_caps") {
    Modulus m1(5, 1);
    CHECK(m1.pe == 5);
    Modulus m3(5, 3);
    CHECK(m3.pe == 125);
    Modulus big(1048573, 2);
    CHECK(big.pe == u64(1048573) * 1048573);
    CHECK_THROWS_AS(Modulus(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(u64(1) << 21, 3), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(u64(1) << 31, 2), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(u64(1) << 40, 1), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(7, 4), std::invalid_argument);
}

TEST_CASE("inverse_roundtrips_prime_and_prime_power") {
    for (u64 p : {u64(5), u64(1009), u64(999983)}) {
        for (u64 a : {u64(1), u64(2), p - 1, p / 2, u64(42) % p}) {
            if (a == 0) continue;
            CHECK(mulmod(a, inv_mod_p(a, p), p) == 1);
        }
    }
    Modulus m2(13, 2), m3(13, 3);
    for (u64 a = 1; a < 169; ++a) {
        if (a % 13 == 0) continue;
        CHECK(mulmod(a, mod_inv(a, m2), m2.pe) == 1);
        CHECK(mulmod(a, mod_inv(a, m3), m3.pe) == 1);
    }
    CHECK_THROWS_AS(inv_mod_p(0, 7), not_invertible);
    CHECK_THROWS_AS(mod_inv(49, Modulus(7, 2)), not_invertible);
    CHECK_THROWS_AS(mod_inv(0, Modulus(7, 1)), not_invertible);
}

TEST_CASE("warmed_inverse_table_agrees_with_direct_path") {
    // the thread-local table kicks in after warm_inverse_table; both the
    // cached and uncached paths must give the Fermat inverse
    warm_inverse_table(1009);
    for (u64 a = 1; a < 1009; ++a) CHECK(inv_mod_p(a, 1009) == powmod(a, 1007, 1009));
    // a different prime misses the cache and falls back to egcd
    for (u64 a = 1; a < 1013; ++a) CHECK(inv_mod_p(a, 1013) == powmod(a, 1011, 1013));
    std::vector<u64> inv;
    build_inverse_table(101, 101, inv);
    for (u64 i = 1; i < 101; ++i) CHECK(mulmod(i, inv[i], 101) == 1);
}

TEST_CASE("symbols_agree_and_multiply") {
    CHECK(legendre_symbol(2, 7) == 1);
    CHECK(legendre_symbol(3, 7) == -1);
    CHECK(legendre_symbol(7, 7) == 0);
    CHECK(legendre_symbol(-1, 13) == 1);
    CHECK(legendre_symbol(-1, 19) == -1);
    for (u64 p : {u64(7), u64(11), u64(13), u64(101)}) {
        for (i64 a = -5; a < i64(p) + 5; ++a) CHECK(jacobi_symbol(a, p) == legendre_symbol(a, p));
    }
    // multiplicativity in the top argument for a composite bottom
    for (i64 a = 1; a < 15; ++a)
        for (i64 b = 1; b < 15; ++b)
            CHECK(jacobi_symbol(a * b, 15) == jacobi_symbol(a, 15) * jacobi_symbol(b, 15));
    CHECK(jacobi_symbol(2, 15) == 1);
    CHECK(jacobi_symbol(3, 15) == 0);
    CHECK(jacobi_symbol(1, 1) == 1);
}

TEST_CASE("sqrt_mod_p_complete_and_canonical") {
    for (u64 p : {u64(13), u64(17), u64(97), u64(10007)}) {
        CHECK(sqrt_mod_p(0, p).value() == 0);
        int residues = 0;
        for (u64 a = 1; a < p; ++a) {
            auto r = sqrt_mod_p(a, p);
            if (legendre_symbol(i64(a), p) == 1) {
                REQUIRE(r.has_value());
                CHECK(mulmod(*r, *r, p) == a);
                CHECK(*r <= (p - 1) / 2);
                ++residues;
            } else {
                CHECK(!r.has_value());
            }
        }
        CHECK(residues == int((p - 1) / 2));
    }
}

TEST_CASE("rational_residue_values") {
    Modulus m7(7, 1);
    CHECK(rational_residue(5, 4, m7) == 3);
    CHECK(rational_residue(-1, 3, m7) == 2);
    Modulus m49(7, 2);
    CHECK(mulmod(rational_residue(3, 5, m49), 5, 49) == 3);
}

TEST_CASE("p_adic_valuation") {
    CHECK(val_p(50, 5) == 2);
    CHECK(val_p(-98, 7) == 2);
    CHECK(val_p(1, 5) == 0);
    CHECK(val_p(625, 5) == 4);
    CHECK(val_p(-7, 5) == 0);
}
