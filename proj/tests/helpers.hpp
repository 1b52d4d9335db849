#pragma once

#include "tsy/rng.hpp"
#include "tsy/sparse.hpp"

namespace tsy::testing {

inline SparseMatrix random_matrix(Rng& rng, int64_t rows, int64_t cols,
                                  int density_pct = 60, long bound = 9) {
    SparseMatrix m(rows, cols);
    for (int64_t r = 0; r < rows; ++r)
        for (int64_t c = 0; c < cols; ++c)
            if (rng.below(100) < static_cast<uint64_t>(density_pct))
                m.set(r, c, rat_of(rng.range(-bound, bound)));
    m.finalize();
    return m;
}

// Product of full-rank-by-construction factors; rank equals `rank` almost
// surely, and the test constructions below only use cases where it does.
inline SparseMatrix random_matrix_of_rank(Rng& rng, int64_t rows, int64_t cols,
                                          int64_t rank) {
    std::vector<RatVec> a(rows, RatVec(rank, Rat(0)));
    std::vector<RatVec> b(rank, RatVec(cols, Rat(0)));
    for (auto& row : a)
        for (auto& x : row) x = rat_of(rng.range(-9, 9));
    for (auto& row : b)
        for (auto& x : row) x = rat_of(rng.range(-9, 9));
    SparseMatrix m(rows, cols);
    for (int64_t r = 0; r < rows; ++r)
        for (int64_t c = 0; c < cols; ++c) {
            Rat s(0);
            for (int64_t k = 0; k < rank; ++k) s += a[r][k] * b[k][c];
            m.set(r, c, s);
        }
    m.finalize();
    return m;
}

}  // namespace tsy::testing
