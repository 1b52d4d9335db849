#include <catch2/catch_amalgamated.hpp>

#include "tsy/cycles.hpp"
#include "tsy/ideal.hpp"
#include "tsy/koszul.hpp"
#include "tsy/rng.hpp"
#include "tsy/schur.hpp"

using namespace tsy;

namespace {

std::map<int, std::vector<El>> degree_map(int d1, std::vector<El> b1, int d2,
                                          std::vector<El> b2) {
    std::map<int, std::vector<El>> m;
    m[d1] = std::move(b1);
    m[d2] = std::move(b2);
    return m;
}

int64_t hook_cycle_dim_dual(int a, int c, int n) {  // dim Z^{a,c} = S^(a+1,1^{c-1})
    if (c < 1) return a == 0 ? 1 : 0;
    return schur_dim(hook_partition(a + 1, c - 1), n);
}

int64_t hook_cycle_dim(int a, int c, int n) {  // dim Z_{a,c} = S^(c,1^a)
    if (c < 1) return 0;
    return schur_dim(hook_partition(c, a), n);
}

}  // namespace

TEST_CASE("cycle spaces carry hook module dimensions") {
    for (int n = 2; n <= 4; ++n) {
        Space u = standard_graded_space("u", n);
        for (int a = 0; a <= 2; ++a)
            for (int c = 1; c <= 3; ++c) {
                REQUIRE(static_cast<int64_t>(cycle_space_basis(u, a, c, Kind::Sym).size()) ==
                        hook_cycle_dim_dual(a, c, n));
                REQUIRE(static_cast<int64_t>(cycle_space_basis(u, a, c, Kind::Ext).size()) ==
                        hook_cycle_dim(a, c, n));
            }
    }
}

TEST_CASE("bottom cycles of two spaces") {
    SECTION("the 2x2 determinant is the only quadric") {
        Space u = standard_graded_space("u", 2), w = standard_graded_space("w", 2);
        REQUIRE(bottom_cycles(u, w, 0, 1, Kind::Sym).size() == 1);
    }
    SECTION("the Lascoux bottom row for 2x3") {
        Space u = standard_graded_space("u", 2), w = standard_graded_space("w", 3);
        REQUIRE(static_cast<int64_t>(bottom_cycles(u, w, 1, 1, Kind::Sym).size()) ==
                lascoux_bottom_dims(1, 1, 2, 3));
    }
    SECTION("both decompositions, all small shapes") {
        for (int du = 1; du <= 4; ++du)
            for (int dw = 1; dw <= 4; ++dw) {
                Space u = standard_graded_space("u", du), w = standard_graded_space("w", dw);
                for (int p = 0; p <= 2; ++p)
                    for (int q = 1; q <= 2; ++q) {
                        int64_t sym_expect = 0, ext_expect = 0;
                        for (int a = 0; a <= p; ++a) {
                            int b = p - a;
                            sym_expect += hook_cycle_dim_dual(a, b + q + 1, du) *
                                          hook_cycle_dim_dual(b, a + q + 1, dw);
                            ext_expect += hook_cycle_dim(a, b + q + 1, du) *
                                          hook_cycle_dim_dual(b, a + q + 1, dw);
                        }
                        REQUIRE(static_cast<int64_t>(
                                    bottom_cycles(u, w, p, q, Kind::Sym).size()) == sym_expect);
                        REQUIRE(static_cast<int64_t>(
                                    bottom_cycles(u, w, p, q, Kind::Ext).size()) == ext_expect);
                    }
            }
    }
}

TEST_CASE("box products") {
    Space u = standard_graded_space("u", 2), w = standard_graded_space("w", 2);
    SECTION("the base product recovers the determinant cycle") {
        El f = standard_cycle_witness(u, 0, 2);  // 1 ⊗ (u0 ∧ u1)
        El g = standard_cycle_witness(w, 0, 2);
        El out = box_product(f, g, Kind::Sym);
        REQUIRE(!out.zero());
        auto k = bottom_cycles(u, w, 0, 1, Kind::Sym);
        REQUIRE(k.size() == 1);
        std::vector<El> both{out, k[0]};
        REQUIRE(span_dim(both) == 1);
    }
    SECTION("output is independent of the preimage choice") {
        // shift g by a cycle of the lift spot: the product must not move
        Space u3 = standard_graded_space("u", 3), w3 = standard_graded_space("w", 3);
        El f = standard_cycle_witness(u3, 1, 3);
        El g = standard_cycle_witness(w3, 1, 3);
        El out1 = box_product(f, g, Kind::Sym);
        // rebuild with a different (but valid) preimage by adding a cycle of
        // the lift piece to the solved one: box0 then delta gives the same
        Piece lift{{Factor{w3, 2, Kind::Sym}, Factor{w3, 2, Kind::Ext}}};
        auto lift_cycles = cycle_space_basis(w3, 2, 2, Kind::Sym);
        REQUIRE(!lift_cycles.empty());
        // direct check at the box0 level
        El base_lift(lift);
        {
            auto basis = enumerate_basis(lift);
            std::vector<El> images;
            for (const auto& e : basis) images.push_back(koszul_delta(e, 0, 1));
            auto sol = solve_columns(coordinate_matrix(images).transpose(), g.coords());
            REQUIRE(sol.has_value());
            for (size_t i = 0; i < basis.size(); ++i) base_lift += (*sol)[i] * basis[i];
        }
        El shifted = base_lift + lift_cycles[0];
        El out2 = koszul_delta(box0_product(f, shifted, Kind::Sym), 0, 1);
        REQUIRE(out1 == out2);
    }
    SECTION("products span the bottom cycle spaces") {
        for (int du = 2; du <= 3; ++du)
            for (int dw = 2; dw <= 3; ++dw) {
                Space su = standard_graded_space("u", du), sw = standard_graded_space("w", dw);
                for (int p = 0; p <= 2; ++p)
                    for (int q = 1; q <= 2; ++q) {
                        auto cycles = bottom_cycles(su, sw, p, q, Kind::Sym);
                        std::vector<El> images;
                        for (int a = 0; a <= p; ++a) {
                            int b = p - a;
                            auto zf = cycle_space_basis(su, a, b + q + 1, Kind::Sym);
                            auto zg = cycle_space_basis(sw, b, a + q + 1, Kind::Sym);
                            for (const auto& f : zf)
                                for (const auto& g : zg)
                                    images.push_back(box_product(f, g, Kind::Sym));
                        }
                        if (cycles.empty()) {
                            for (const auto& e : images) REQUIRE(e.zero());
                            continue;
                        }
                        REQUIRE(span_dim(images) == static_cast<int64_t>(cycles.size()));
                    }
            }
    }
    SECTION("non-cycles are rejected") {
        Space u3 = standard_graded_space("u", 3);
        Piece p{{Factor{u3, 1, Kind::Sym}, Factor{u3, 2, Kind::Ext}}};
        El bad = basis_element(p, {{1}, {0, 2}});  // delta does not kill it
        El g = standard_cycle_witness(u3, 0, 2);
        REQUIRE_THROWS_AS(box_product(bad, g, Kind::Sym), NotACycle);
    }
}

TEST_CASE("cofactor structure of the raw product") {
    // (a,b,q) = (1,1,1), dim U = 3, dim W = 4, G = w0^2 ⊗ (w1 ∧ w2): the
    // cofactor of (u_i ⊗ w1) ∧ (u_j ⊗ w0) inside δ(f ⊠ G) is one common
    // nonzero multiple of det(∂_j f_{e_i} ⊗ (w0 ∧ w2)).
    Rng rng(606);
    Space u = standard_graded_space("u", 3), w = standard_graded_space("w", 4);
    Piece fp{{Factor{u, 1, Kind::Sym}, Factor{u, 3, Kind::Ext}}};
    El f(fp);
    for (uint16_t i = 0; i < 3; ++i)
        f.add({{i}, {0, 1, 2}}, rat_of(rng.range(1, 9)));
    Piece gp{{Factor{w, 2, Kind::Sym}, Factor{w, 2, Kind::Ext}}};
    El g = basis_element(gp, {{0, 0}, {1, 2}});

    El out = koszul_delta(box0_product(f, g, Kind::Sym), 0, 1);
    REQUIRE(!out.zero());

    Piece sq{{Factor{out.piece().factors[1]}}};
    Piece dets{{Factor{u, 2, Kind::Ext}, Factor{w, 2, Kind::Ext}}};
    std::optional<Rat> scalar;
    for (uint16_t i = 0; i < 3; ++i) {
        for (uint16_t j = 0; j < 3; ++j) {
            // wedge label of (u_i ⊗ w1) ∧ (u_j ⊗ w0), tracked to sorted order
            uint16_t x1 = static_cast<uint16_t>(i * 4 + 1), x0 = static_cast<uint16_t>(j * 4);
            FactorLabel lab{std::min(x0, x1), std::max(x0, x1)};
            Rat orient = x1 < x0 ? Rat(1) : Rat(-1);
            El cof(sq);
            for (const auto& [l, v] : out.terms())
                if (l[0] == lab) cof.add({l[1]}, orient * v);
            // expected: det of the contracted frame against (w0 ∧ w2)
            El fi(Piece{{Factor{u, 3, Kind::Ext}}});
            for (const auto& [l, v] : f.terms())
                if (l[0] == FactorLabel{i}) fi.add({l[1]}, v);
            El dfi = derive(fi, 0, {j});
            El expected = det_map(tensor_product(dfi, basis_element(
                Piece{{Factor{w, 2, Kind::Ext}}}, {{0, 2}})));
            if (expected.zero()) {
                REQUIRE(cof.zero());
                continue;
            }
            REQUIRE(!cof.zero());
            Rat c = cof.terms().begin()->second / expected.coeff(cof.terms().begin()->first);
            REQUIRE(c != 0);
            if (!scalar)
                scalar = c;
            else
                REQUIRE(*scalar == c);
            El diff = cof - c * expected;
            REQUIRE(diff.zero());
        }
    }
    REQUIRE(scalar.has_value());
}

TEST_CASE("Koszul cohomology of exact minor ideals") {
    SECTION("2x3: the Eagon-Northcott bottom row") {
        GradedIdealSlice slice = generic_matrix_minor_slice(2, 3);
        REQUIRE(koszul_cohomology_dim(slice, {0, 2, Kind::Ext}) == 3);
        REQUIRE(koszul_cohomology_dim(slice, {1, 2, Kind::Ext}) == 2);
        REQUIRE(koszul_cohomology_dim(slice, {2, 2, Kind::Ext}) == 0);
    }
    SECTION("2x4 matches the closed form for p <= 3") {
        GradedIdealSlice slice = generic_matrix_minor_slice(2, 4);
        for (int p = 0; p <= 3; ++p)
            REQUIRE(koszul_cohomology_dim(slice, {p, 2, Kind::Ext}) ==
                    lascoux_bottom_dims(p, 1, 2, 4));
    }
    SECTION("a slice with no quadrics has no bottom syzygies") {
        Space v = standard_graded_space("v", 3);
        std::map<int, std::vector<El>> degs;
        degs[2] = {};
        degs[3] = {};
        GradedIdealSlice slice(v, std::move(degs), Provenance::Exact);
        REQUIRE(koszul_cohomology_dim(slice, {0, 2, Kind::Ext}) == 0);
        REQUIRE(koszul_cohomology_dim(slice, {1, 2, Kind::Ext}) == 0);
    }
}

TEST_CASE("tangent ideal slice of the quartic curve") {
    JetVariety c = rational_normal_curve(4);
    auto quadrics = ideal_bottom_component(c, 1, 1, IdealMethod::Jets, 404);
    auto cubics = ideal_degree_slice_sampled(c, 1, 1, 3, 405);
    GradedIdealSlice slice(c.ambient(), degree_map(2, quadrics, 3, cubics),
                           Provenance::Sampled);
    REQUIRE(koszul_cohomology_dim(slice, {0, 2, Kind::Ext}) == 1);
}

TEST_CASE("pushforward of cycles") {
    SECTION("identity leaves cycles alone") {
        Space u = standard_graded_space("u", 2), w = standard_graded_space("w", 2);
        LinearTensor id = identity_tensor({u, w});
        auto cycles = bottom_cycles(u, w, 1, 1, Kind::Sym);
        for (const auto& cyc : cycles) {
            El out = pushforward_cycle(id, cyc);
            REQUIRE(out.coords() == cyc.coords());
        }
    }
    SECTION("the intro tensor pushes the wedge generator to the quadric") {
        LinearTensor t = rnc_multiplication_tensor({1, 1, 1, 1});
        std::vector<El> fs;
        std::vector<Space> sources;
        for (int i = 0; i < 4; ++i)
            sources.push_back(standard_graded_space("v" + std::to_string(i + 1), 2));
        for (int i = 0; i < 4; ++i) fs.push_back(standard_cycle_witness(sources[i], 0, 2));
        El cyc = segre_bottom_syzygy(fs, {0, 0, 0, 0}, 1);
        REQUIRE(!cyc.zero());
        El out = pushforward_cycle(t, cyc);
        REQUIRE(!out.zero());
        // degree-0 leg, quadric leg proportional to x0x4 - 4x1x3 + 3x2^2
        El expected(out.piece());
        expected.add({{}, {0, 4}}, Rat(1));
        expected.add({{}, {1, 3}}, Rat(-4));
        expected.add({{}, {2, 2}}, Rat(3));
        std::vector<El> both{out, expected};
        REQUIRE(span_dim(both) == 1);
    }
    SECTION("a nonzero first syzygy pushes forward for the octic") {
        LinearTensor t = rnc_multiplication_tensor({2, 2, 2, 2});
        std::vector<El> fs;
        std::vector<int> p_star{1, 0, 0, 0};
        int p = 1, q = 1;
        for (int i = 0; i < 4; ++i) {
            Space vi = standard_graded_space("v" + std::to_string(i + 1), 3);
            fs.push_back(standard_cycle_witness(vi, p_star[i], p - p_star[i] + q + 1));
        }
        El cyc = segre_bottom_syzygy(fs, p_star, q);
        REQUIRE(!cyc.zero());
        El out = pushforward_cycle(t, cyc);
        REQUIRE(!out.zero());
        // it is a cycle and its quadric legs vanish on the tangent cone
        REQUIRE(koszul_delta(out, 0, 1).zero());
        JetVariety c = rational_normal_curve(8);
        Rng rng(9);
        Piece qp{{Factor{c.ambient(), 2, Kind::Sym}}};
        for (int s = 0; s < 10; ++s) {
            RatVec z = sample_secant_osculating_point(c, 1, 1, rng);
            for (const auto& [l, v] : out.terms()) {
                // collect the quadric leg coefficients per wedge label once
            }
        }
        std::map<FactorLabel, El> legs;
        for (const auto& [l, v] : out.terms()) {
            auto it = legs.find(l[0]);
            if (it == legs.end()) it = legs.emplace(l[0], El(qp)).first;
            it->second.add({l[1]}, v);
        }
        for (int s = 0; s < 10; ++s) {
            RatVec z = sample_secant_osculating_point(c, 1, 1, rng);
            for (const auto& [fl, leg] : legs) REQUIRE(eval_element(leg, z) == 0);
        }
    }
}
