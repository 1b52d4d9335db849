#pragma once

#include "tsy/multilinear.hpp"
#include "tsy/tensor.hpp"

namespace tsy {

struct GradingMismatch : std::invalid_argument {
    GradingMismatch() : std::invalid_argument("factor gradings do not match the product") {}
};
struct NotACycle : std::invalid_argument {
    NotACycle() : std::invalid_argument("input is not a Koszul cycle") {}
};

// Basis of the cycle space of the Koszul differential out of the two-factor
// piece over one space: first_kind == Sym gives ker on S^a U ⊗ Λ^b U (the
// hook S^(a+1,1,...) module), Ext gives ker on Λ^a U ⊗ S^b U.
std::vector<El> cycle_space_basis(const Space& u, int a, int b, Kind first_kind,
                                  bool parallel = true);

// Cycles of the two-space bottom syzygy space: kernel of the Koszul
// differential restricted to the det-embedded (kind Sym, inside
// Λ^p(U⊗W) ⊗ S^{q+1}(U⊗W)) or edet-embedded (kind Ext, inside
// S^p(U⊗W) ⊗ Λ^{q+1}(U⊗W)) middle subspace. The restriction computes the
// same space as intersecting the full cycle space with the embedded piece,
// since the embeddings are injective.
std::vector<El> bottom_cycles(const Space& u, const Space& w, int p, int q, Kind kind,
                              bool parallel = true);

// The raw product: for kind Sym maps (S^aU ⊗ Λ^{b+q+1}U) x (S^{b+1}W ⊗ Λ^{a+q}W)
// into Λ^{a+b+1}(U⊗W) ⊗ S^q(U⊗W) through coproducts, the pair maps, and the
// wedge; kind Ext is the interchanged variant landing in
// S^{a+b+1}(U⊗W) ⊗ Λ^q(U⊗W).
El box0_product(const El& f, const El& g_lift, Kind kind);

// The derived product on cycles: the image of box0 with any preimage of g
// under the incoming Koszul differential, pushed by the outgoing one. The
// result is checked to be a cycle with its middle factor inside the
// embedded subspace; it is independent of the chosen preimage.
El box_product(const El& f, const El& g, Kind kind);

// Applies Λ^p T ⊗ S^{q+1} T (or the Sym/Ext interchange) coordinatewise.
El pushforward_cycle(const LinearTensor& t, const El& cycle);

// The standard cycle generator u_0^{head} ⊗ (u_0 ∧ ... ∧ u_{tail-1}).
El standard_cycle_witness(const Space& v, int head, int tail);

// Iterated box products pairing the factors left to right; p_star lists the
// homological shares per factor and q the secant index of the target. For an
// even number of factors the result lies in Λ^p(⊗V_i) ⊗ S^{q+1}(⊗V_i).
El segre_bottom_syzygy(const std::vector<El>& fs, const std::vector<int>& p_star, int q);

}  // namespace tsy
