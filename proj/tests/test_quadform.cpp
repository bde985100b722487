#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "clab/primes.hpp"
#include "clab/quadform.hpp"

using namespace clab;

TEST_CASE("known_representations") {
    auto r = represent(7, 1, 3, false);
    REQUIRE(r.has_value());
    CHECK(r->x == 2);
    CHECK(r->y == 1);
    auto s = represent(31, 1, 11, true);  // 4*31 = 25 + 11*9
    REQUIRE(s.has_value());
    CHECK(s->x == 5);
    CHECK(s->y == 3);
    auto t = represent(31, 1, 15, false);
    REQUIRE(t.has_value());
    CHECK(t->x == 4);
    CHECK(t->y == 1);
    auto u = represent(13, 1, 27, true);  // 4*13 = 25 + 27
    REQUIRE(u.has_value());
    CHECK(u->x == 5);
    CHECK(u->y == 1);
}

TEST_CASE("solutions_actually_solve_the_form") {
    for (u64 p : prime_stream(5, 300)) {
        for (auto [a, b, four] : {std::tuple<u64, u64, bool>{1, 27, true}, {1, 2, false},
                                  {1, 11, true}, {1, 15, false}, {2, 3, false}, {5, 3, false},
                                  {3, 25, true}, {1, 75, true}}) {
            u64 target = four ? 4 * p : p;
            auto r = represent(p, a, b, four);
            if (!r) continue;
            CHECK(u64(i64(a) * r->x * r->x + i64(b) * r->y * r->y) == target);
            CHECK(r->x >= 0);
            CHECK(r->y >= 0);
        }
    }
}

TEST_CASE("fast_path_agrees_with_exhaustive_search") {
    for (u64 p : prime_stream(5, 2000)) {
        for (auto [a, b, four] : {std::tuple<u64, u64, bool>{1, 27, true}, {1, 2, false},
                                  {1, 11, true}, {1, 15, false}, {1, 6, false}, {1, 3, false},
                                  {1, 75, true}, {1, 51, true}, {1, 123, true}, {1, 267, true},
                                  {2, 3, false}, {5, 3, false}, {3, 5, false}, {3, 25, true}}) {
            auto fast = represent(p, a, b, four);
            auto slow = represent_slow(p, a, b, four);
            CHECK(fast.has_value() == slow.has_value());
            if (fast && slow) {
                CHECK(fast->x == slow->x);
                CHECK(fast->y == slow->y);
            }
        }
    }
}

TEST_CASE("existence_criterion_for_the_eisenstein_form") {
    // 4p = x^2 + 27 y^2 is solvable exactly when p = 1 mod 3
    for (u64 p : prime_stream(5, 500))
        CHECK(represent(p, 1, 27, true).has_value() == (p % 3 == 1));
}

TEST_CASE("sign_normalizations") {
    CHECK(normalize_mod3(1) == 1);
    CHECK(normalize_mod3(5) == -5);
    CHECK(normalize_mod3(-5) == -5);
    CHECK(normalize_mod3(7) == 7);
    CHECK(normalize_mod3(-7) == 7);
    CHECK(normalize_mod4(1) == 1);
    CHECK(normalize_mod4(3) == -3);
    CHECK(normalize_mod4(-3) == -3);
    CHECK(normalize_mod4(5) == 5);
    CHECK(normalize_mod4(-11) == -11);
    CHECK(normalize_mod4(11) == -11);
}

TEST_CASE("integer_square_root_edges") {
    CHECK(detail::isqrt_u64(0) == 0);
    CHECK(detail::isqrt_u64(1) == 1);
    CHECK(detail::isqrt_u64(3) == 1);
    CHECK(detail::isqrt_u64(4) == 2);
    CHECK(detail::isqrt_u64(99) == 9);
    CHECK(detail::isqrt_u64(100) == 10);
    CHECK(detail::isqrt_u64(u64(3037000499) * 3037000499) == 3037000499);
    u64 root = 0;
    CHECK(detail::is_square_u64(49, root));
    CHECK(root == 7);
    CHECK(!detail::is_square_u64(50, root));
}
