#pragma once

#include <stdexcept>

#include "tsy/rng.hpp"
#include "tsy/sparse.hpp"

namespace tsy {

// A rational entry has a denominator divisible by the chosen prime; the
// caller must re-draw the prime.
struct DenominatorDivisibleByP : std::runtime_error {
    explicit DenominatorDivisibleByP(uint64_t p)
        : std::runtime_error("denominator divisible by p=" + std::to_string(p)) {}
};

// Rank of m over F_p. Always <= the rational rank; equality holds with high
// probability for a random 31-bit prime, so this is a fast filter, never an
// exact certificate of the rank itself (a kernel of dimension 0 mod p is
// however a proof of a trivial rational kernel).
int64_t rank_modp(const SparseMatrix& m, uint64_t p);

// Serial reference for the OpenMP row-update kernel inside rank_modp.
int64_t rank_modp_serial(const SparseMatrix& m, uint64_t p);

uint64_t modp_reduce(const Rat& v, uint64_t p);  // throws DenominatorDivisibleByP

}  // namespace tsy
