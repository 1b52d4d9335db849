#pragma once

#include <optional>

#include "tsy/jets.hpp"
#include "tsy/multilinear.hpp"

namespace tsy {

// A linear map V_1 (x) ... (x) V_l -> V given by its coefficient array: one
// vector of linear forms per source basis tuple.
struct LinearTensor {
    std::vector<int> source_dims;
    Space target;
    std::vector<SparseVec> coeffs;  // flat source index (lexicographic) -> vector in V

    int64_t source_size() const {
        int64_t s = 1;
        for (int d : source_dims) s *= d;
        return s;
    }
};

// Multiplication of binary-form spaces: H0(O(d1)) x ... x H0(O(dl)) into
// H0(O(d1+...+dl)) in the monomial bases; the tensor behind complete
// embeddings of the rational normal curve.
LinearTensor rnc_multiplication_tensor(const std::vector<int>& degs);

// The identity on V_1 (x) ... (x) V_l; its minor map gives the generic
// determinantal equations of the Segre product.
LinearTensor identity_tensor(const std::vector<Space>& sources);

// Matrix of the composition of the canonical embedding of the product of
// (q+1)-st exterior powers with S^{q+1} of the tensor: rows are monomials of
// S^{q+1}V, columns tuples of (q+1)-subsets per source. Zero columns count
// when any source is smaller than q+1 (the domain is the zero space).
SparseMatrix minor_map_matrix(const LinearTensor& t, int q);

// Column order of minor_map_matrix: mixed radix over per-source subset ranks.
std::vector<std::vector<FactorLabel>> minor_map_domain_labels(const LinearTensor& t, int q);

// Applies the map to one element of the domain product of exterior powers.
El minor_map_apply(const LinearTensor& t, const El& domain_element);

struct MultiplicativityReport {
    bool one_generic = true;
    // a simple tensor with T(v1 x ... x vl) = 0, flattened per factor
    std::optional<std::vector<RatVec>> one_generic_witness;
    bool x_simple = true;
    std::optional<RatVec> x_simple_witness;  // a point whose dual image is not simple
    int samples_run = 0;
};

// 1-genericity by randomized simple-vector substitution (a found zero is a
// definitive counterexample; absence over all trials is a pass), simplicity
// by the exact flattening-rank criterion at sampled points of the variety.
MultiplicativityReport check_x_multiplicative(const LinearTensor& t, const JetVariety& x,
                                              int samples, Rng& rng);

// <linear form, point>: evaluation of an ambient vector against a point of
// the dual cone.
Rat eval_linear(const SparseVec& form, const RatVec& point);

// Evaluates an element of S^d(V) at a point of V^* (monomial products).
Rat eval_element(const El& e, const RatVec& point);

}  // namespace tsy
