#pragma once

#include "tsy/element.hpp"
#include "tsy/rref.hpp"

namespace tsy {

struct SplitExceedsPower : std::invalid_argument {
    SplitExceedsPower() : std::invalid_argument("split exceeds factor power") {}
};
struct KindMismatch : std::invalid_argument {
    KindMismatch() : std::invalid_argument("factor kinds/spaces unsuitable") {}
};

// Coproduct on one factor of power a+b; the factor is replaced in place by
// two factors of powers a and b (same space and kind). Stores Delta(f)
// itself: the formula's binomial sits on the left, so the sum over splits
// carries a global 1/C(a+b,a).
El coproduct(const El& f, size_t factor, int a, int b);

// Partial derivative (Sym; no 1/alpha! weight) or signed contraction (Ext;
// multi-contractions compose in reverse order) against one factor.
El derive(const El& f, size_t factor, const FactorLabel& d);

// Koszul differential: moves degree one from factor `from` into factor `to`,
// both over the same space with opposite kinds. Ext->Sym gives the delta
// family, Sym->Ext the dual family.
El koszul_delta(const El& f, size_t from, size_t to);

// Pairs factors i and j (equal powers) into one factor over the tensor
// product space of the two, inserted at position min(i,j):
//   (Ext,Ext) -> Sym   signed permutation sum (the determinant map)
//   (Sym,Ext) -> Ext   unsigned permutation sum of wedges (exterior minor)
//   (Ext,Sym) -> Ext   ditto with the roles swapped
//   (Sym,Sym) -> Sym   unsigned permutation sum (permanent-like)
El pair_factors(const El& f, size_t i, size_t j);

// Whole-element wrappers for two-factor pieces.
El det_map(const El& f);
El edet_map(const El& f);

// Multiplies factor src into factor dst (same space and kind); wedge for Ext.
El merge_factors(const El& f, size_t dst, size_t src);

// Power-one factors of either kind are the space itself.
El reinterpret_degree_one(const El& f, size_t factor, Kind k);

// Concatenates the factor lists; coefficients multiply.
El tensor_product(const El& a, const El& b);

// x_var * f for f in a single symmetric-power piece.
El multiply_variable(const El& f, uint16_t var);

// Canonical embedding of a product of exterior powers (all of power q+1)
// into S^{q+1} of the tensor product of the factor spaces.
El wedge_embedding(const El& f);

// d-th prolongation of the span of B inside the degree-(power) piece: the
// preimage of (degree d) x span(B) under the coproduct. Returns a basis;
// empty when the preimage is trivial. use_weights may only be set when
// span(B) is stable under the factor space's grading torus.
std::vector<El> prolong(const std::vector<El>& B, int d, bool use_weights = false,
                        bool parallel = true);

// ---- small utilities over element lists ----

std::vector<El> enumerate_basis(const Piece& p);

// Rows = coordinate vectors of the elements.
SparseMatrix coordinate_matrix(const std::vector<El>& els);

int64_t span_dim(const std::vector<El>& els);

}  // namespace tsy
