#pragma once

#include <optional>
#include <vector>

#include "tsy/sparse.hpp"

namespace tsy {

struct RrefResult {
    std::vector<int64_t> pivots;  // pivot columns, increasing
    SparseMatrix reduced;         // the unique reduced row echelon form
    int64_t rank() const { return static_cast<int64_t>(pivots.size()); }
};

// Reduced row echelon form over the rationals. Elimination is fraction-free
// (cross-multiplied integer rows, content stripped after every update) so
// intermediate entries stay bounded; pivot rows are rescaled to leading 1
// only at the end. Pivot choice: smallest column, then sparsest row, then
// smallest leading |value|, so the reduction path is deterministic.
RrefResult rref(const SparseMatrix& m);

int64_t rank(const SparseMatrix& m);

// Basis of the right kernel in standard form: one vector per free column,
// with a unit entry there and the complementary pivot-column entries.
std::vector<RatVec> kernel_basis(const SparseMatrix& m);

// Basis of span(a) ∩ span(b); all vectors share one ambient dimension.
// Computed from the kernel of the stacked matrix [A | -B].
std::vector<RatVec> intersect_subspaces(const std::vector<RatVec>& a,
                                        const std::vector<RatVec>& b);

// One solution x of A x = rhs (columns of A given sparsely), if any.
std::optional<RatVec> solve_columns(const SparseMatrix& a, const RatVec& rhs);

// Row-space reducer: reduce a vector against an RREF, returning the residue.
RatVec reduce_against(const RrefResult& rr, RatVec v);
SparseVec reduce_sparse(const RrefResult& rr, const SparseVec& v);

}  // namespace tsy
