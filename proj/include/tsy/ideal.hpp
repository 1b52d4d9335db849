#pragma once

#include "tsy/jets.hpp"
#include "tsy/multilinear.hpp"

namespace tsy {

// The escalation budget ran out before the solution space stabilized.
struct DegenerateOracle : std::runtime_error {
    explicit DegenerateOracle(const std::string& m) : std::runtime_error(m) {}
};

enum class IdealMethod { Jets, Sampling };

// Constraint ranges for the osculating quadric conditions; both cut out the
// same space and the equivalence is property-tested.
enum class JetRange { R1, R3 };

struct EscalationOptions {
    int initial_points = 4;
    int max_points = 1024;
    int stable_doublings = 2;  // stop after this many unchanged doublings
    bool parallel = true;
};

Piece ideal_piece(const JetVariety& x, int degree);

// Exact degree-2 component of the ideal of the k-osculating variety: the
// quadrics whose polarization kills all jet pairs up to order k (range R3)
// or the single-sided range R1, over enough random chart points.
std::vector<El> osculating_quadrics(const JetVariety& x, int k, uint64_t seed,
                                    JetRange range = JetRange::R3,
                                    const EscalationOptions& opts = {});

// Degree-`degree` component of the ideal of the q-secant variety of the
// k-osculating variety, by evaluation at random points of the secant cone;
// probabilistic, seed-pinned.
std::vector<El> ideal_degree_slice_sampled(const JetVariety& x, int q, int k, int degree,
                                           uint64_t seed, const EscalationOptions& opts = {});

// Bottom-degree component I_{q+1}: exact jets route (osculating quadrics
// prolonged q-1 times) or the sampling route as a cross-check oracle.
std::vector<El> ideal_bottom_component(const JetVariety& x, int q, int k, IdealMethod method,
                                       uint64_t seed, const EscalationOptions& opts = {});

}  // namespace tsy
