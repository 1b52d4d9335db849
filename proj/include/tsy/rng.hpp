#pragma once

#include <cstdint>

#include "tsy/rational.hpp"

namespace tsy {

// Deterministic splitmix64 generator. We roll our own so that seeded runs are
// byte-identical across platforms and standard library versions.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % bound;
    }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // Random rational with |numerator| <= bound, 1 <= denominator <= bound.
    Rat rational(long bound = 10000) {
        long num = range(-bound, bound);
        long den = range(1, bound);
        return rat_of(num, den);
    }

    Rat nonzero_rational(long bound = 10000) {
        Rat r;
        do { r = rational(bound); } while (r == 0);
        return r;
    }

    // A fresh generator for a named subtask; keeps sampling schedules stable
    // when independent steps draw in parallel.
    Rng fork(uint64_t salt) {
        Rng child(state_ ^ (salt * 0x9e3779b97f4a7c15ull + 0x7f4a7c15ull));
        child.next();
        return child;
    }

private:
    uint64_t state_;
};

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Random 31-bit prime (>= 2^30), deterministic in the generator state.
uint64_t random_prime31(Rng& rng);

}  // namespace tsy
