#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tsy/blocked.hpp"

namespace tsy {

// A named vector space with a fixed ordered basis 0..dim-1. `weights` is an
// optional integer grading of the basis (one key per basis label); maps built
// from equivariant operations preserve it, which is what lets large kernel
// computations split into blocks.
struct Space {
    std::string name;
    int dim = 0;
    std::vector<WeightKey> weights;  // empty, or one key per basis label

    bool graded() const { return !weights.empty(); }
    bool operator==(const Space& o) const { return name == o.name && dim == o.dim; }
};

Space make_space(std::string name, int dim);

// Grading where every basis vector gets its own coordinate; the symmetry
// torus of the full general linear group.
Space standard_graded_space(std::string name, int dim);

Space make_graded_space(std::string name, int dim, std::vector<WeightKey> weights);

// Tensor product space with basis labels ordered lexicographically in the
// factor labels; gradings concatenate (all factors graded, or none).
Space tensor_space(const std::vector<Space>& factors);

// Splits a tensor-space label back into per-factor labels.
std::vector<int> tensor_label_split(const std::vector<int>& dims, int64_t label);

int64_t binomial(int64_t n, int64_t k);

// ---- basis labels of symmetric and exterior powers ----
//
// A label is a weakly increasing (Sym) or strictly increasing (Ext) list of
// basis indices; Sym labels enumerate in colex order, Ext labels in lex order.

using FactorLabel = std::vector<uint16_t>;

int64_t sym_dim(int n, int k);
int64_t ext_dim(int n, int k);

int64_t sym_rank(const FactorLabel& l);
int64_t ext_rank(int n, const FactorLabel& l);

FactorLabel sym_unrank(int n, int k, int64_t r);
FactorLabel ext_unrank(int n, int k, int64_t r);

void for_each_sym(int n, int k, const std::function<void(const FactorLabel&)>& fn);
void for_each_ext(int n, int k, const std::function<void(const FactorLabel&)>& fn);

}  // namespace tsy
