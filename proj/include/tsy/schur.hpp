#pragma once

#include <cstdint>
#include <vector>

#include "tsy/rational.hpp"

namespace tsy {

// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    int rows() const { return static_cast<int>(parts.size()); }
    Partition conjugate() const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
};

// (head, 1, ..., 1) with `legs` trailing ones.
Partition hook_partition(int head, int legs);

bool is_valid_partition(const Partition& p);

// dim of the Schur module S^lambda(C^n), by the hook content formula;
// zero as soon as lambda has more than n rows.
int64_t schur_dim(const Partition& lambda, int n);

std::vector<Partition> partitions_of(int t);

// Ordered partitions (compositions) of p into len nonnegative parts, colex.
std::vector<std::vector<int>> compositions_of(int p, int len);

// Totals of the two Cauchy-Littlewood decompositions of Λ^t(U⊗W) and
// S^t(U⊗W); they must match C(nU*nW, t) and C(nU*nW + t - 1, t).
struct CauchyLittlewoodDims {
    int64_t ext_total = 0;
    int64_t sym_total = 0;
};
CauchyLittlewoodDims cauchy_littlewood_dims(int t, int nU, int nW);

// Bottom syzygy space dimension of the q-secant variety to the (k-osculating
// variety of the) Segre product with the given factor dimensions: the sum
// over ordered partitions p* of p of products of hook Schur dimensions
// (p_i + 1, 1^{p+q-p_i}).
int64_t bottom_syzygy_dims_segre(int p, int q, const std::vector<int>& dims);

// Vanishing threshold for an even number 2k+2 of factors: the space above is
// zero for all p strictly above this bound.
Rat segre_vanishing_threshold(int q, const std::vector<int>& dims);

// Bottom row of the minimal free resolution of the 2-factor Segre secant:
// sum over a+b=p of dim S^(a+1,1^{b+q}) x dim S^(b+1,1^{a+q}).
int64_t lascoux_bottom_dims(int p, int q, int nU, int nW);

}  // namespace tsy
