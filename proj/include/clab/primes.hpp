#pragma once

#include <cstdint>
#include <vector>

#include "clab/modular.hpp"

namespace clab {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Ascending primes in [lo, hi], segmented sieve.
inline std::vector<u64> prime_stream(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi < 2 || hi < lo) return out;
    if (lo < 2) lo = 2;
    u64 root = 1;
    while ((root + 1) * (root + 1) <= hi) ++root;
    std::vector<bool> base(root + 1, true);
    for (u64 i = 2; i * i <= root; ++i)
        if (base[i])
            for (u64 j = i * i; j <= root; j += i) base[j] = false;
    std::vector<u64> small;
    for (u64 i = 2; i <= root; ++i)
        if (base[i]) small.push_back(i);

    const u64 seg = 1 << 16;
    for (u64 start = lo; start <= hi; start += seg) {
        u64 end = start + seg - 1 < hi ? start + seg - 1 : hi;
        std::vector<bool> mark(end - start + 1, true);
        for (u64 q : small) {
            if (q * q > end) break;
            u64 first = ((start + q - 1) / q) * q;
            if (first < q * q) first = q * q;
            for (u64 j = first; j <= end; j += q) mark[j - start] = false;
        }
        for (u64 n = start; n <= end; ++n)
            if (mark[n - start] && n >= 2) out.push_back(n);
    }
    return out;
}

}  // namespace clab
