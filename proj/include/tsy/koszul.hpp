#pragma once

#include "tsy/slice.hpp"

namespace tsy {

struct KoszulSpot {
    int p = 0;       // homological index
    int j = 1;       // weight
    Kind ambient = Kind::Ext;  // Ext: usual groups over Λ*(V); Sym unsupported here
};

// Dimension of the Koszul cohomology group of the ideal slice at the spot:
// middle cohomology of Λ^{p+1}V ⊗ I_{j-1} -> Λ^p V ⊗ I_j -> Λ^{p-1}V ⊗ I_{j+1},
// both differentials realized through coordinates in the provided bases. For
// bottom spots (j at the ideal's initial degree) the image term vanishes.
// A nonzero modp computes the underlying ranks mod p; the result is then a
// filter value (never below the exact dimension), not an exact certificate.
int64_t koszul_cohomology_dim(const GradedIdealSlice& ideal, const KoszulSpot& spot,
                              bool parallel = true, uint64_t modp = 0);

// Raw columns of Λ^p V ⊗ I_j -> Λ^{p-1} V ⊗ I_{j+1}, with weight keys when
// the slice is graded. Exposed for rank experiments and benchmarks.
ColumnProblem koszul_differential_columns(const GradedIdealSlice& ideal, int p, int j);

}  // namespace tsy
