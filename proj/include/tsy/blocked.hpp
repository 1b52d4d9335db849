#pragma once

#include <cstdint>
#include <vector>

#include "tsy/sparse.hpp"

namespace tsy {

// Integer weight vector; equivariant maps never mix columns of distinct
// weights, so a weighted problem splits into independent blocks.
using WeightKey = std::vector<int32_t>;

// A linear map given column by column. Row keys are opaque 64-bit labels
// (monomial ranks, constraint ids, ...); only columns are enumerated.
struct ColumnProblem {
    std::vector<SparseVec> cols;
    // Either empty (no grading available) or one key per column.
    std::vector<WeightKey> weights;
};

struct SolveOptions {
    bool use_blocks = true;  // false: serial reference path, single block
    bool parallel = true;    // OpenMP over blocks
    uint64_t modp = 0;       // rank only: nonzero p computes ranks mod p (a filter)
};

// Basis of {x : sum_i x_i col_i = 0}, each vector sparse over column indices.
// With weights, the basis is the concatenation of the per-block bases in
// block order; every basis vector is supported inside a single block.
std::vector<SparseVec> kernel_blocked(const ColumnProblem& p, const SolveOptions& opt = {});

int64_t rank_blocked(const ColumnProblem& p, const SolveOptions& opt = {});

}  // namespace tsy
