#include "tsy/verify.hpp"

#include <sstream>

#include "tsy/cycles.hpp"
#include "tsy/ideal.hpp"
#include "tsy/koszul.hpp"
#include "tsy/modp.hpp"
#include "tsy/schur.hpp"

namespace tsy::verify {

namespace {

std::string str(int64_t v) { return std::to_string(v); }

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

Check make_check(std::string name, std::string expected, std::string got, int64_t instances = 1) {
    Check c;
    c.name = std::move(name);
    c.expected = std::move(expected);
    c.got = std::move(got);
    c.pass = c.expected == c.got;
    c.instances = instances;
    return c;
}

El random_element(Rng& rng, const Piece& p, int terms = 6, long bound = 5) {
    El e(p);
    int64_t d = p.dim();
    if (d == 0) return e;
    for (int t = 0; t < terms; ++t)
        e.add(p.label_of(static_cast<int64_t>(rng.below(d))), rat_of(rng.range(-bound, bound)));
    return e;
}

// ---- property suites ----

Suite multilinear_core(uint64_t seed) {
    Rng rng(seed);
    Suite out;
    int64_t euler_fail = 0, euler_n = 0;
    for (int iter = 0; iter < 120; ++iter) {
        int dim = 1 + iter % 5, total = 1 + iter % 4, a = iter % (total + 1);
        Space u = make_space("u", dim);
        for (Kind kind : {Kind::Sym, Kind::Ext}) {
            Piece p{{Factor{u, total, kind}}};
            if (p.dim() == 0) continue;
            El f = random_element(rng, p);
            if (!(merge_factors(coproduct(f, 0, a, total - a), 0, 1) == f)) ++euler_fail;
            ++euler_n;
        }
    }
    out.push_back(make_check("euler-product-coproduct", "0 failures of " + str(euler_n),
                             str(euler_fail) + " failures of " + str(euler_n), euler_n));

    int64_t leib_fail = 0, leib_n = 0;
    Space u5 = make_space("u", 5);
    for (int iter = 0; iter < 120; ++iter) {
        int b = 1 + iter % 3, c = 1 + (iter / 3) % 3;
        Piece pb{{Factor{u5, b, Kind::Ext}}}, pc{{Factor{u5, c, Kind::Ext}}};
        El f = random_element(rng, pb), g = random_element(rng, pc);
        uint16_t i = static_cast<uint16_t>(rng.below(5));
        El lhs = derive(merge_factors(tensor_product(f, g), 0, 1), 0, {i});
        El rhs = merge_factors(tensor_product(derive(f, 0, {i}), g), 0, 1);
        rhs += Rat(b % 2 == 0 ? 1 : -1) * merge_factors(tensor_product(f, derive(g, 0, {i})), 0, 1);
        if (!(lhs == rhs)) ++leib_fail;
        ++leib_n;
    }
    out.push_back(make_check("leibniz-contraction", "0 failures of " + str(leib_n),
                             str(leib_fail) + " failures of " + str(leib_n), leib_n));

    int64_t dd_fail = 0, dd_n = 0;
    Space u4 = make_space("u", 4);
    for (int iter = 0; iter < 200; ++iter) {
        Piece p{{Factor{u4, 3, Kind::Ext}, Factor{u4, 2, Kind::Sym}}};
        Piece pd{{Factor{u4, 3, Kind::Sym}, Factor{u4, 2, Kind::Ext}}};
        if (!koszul_delta(koszul_delta(random_element(rng, p), 0, 1), 0, 1).zero()) ++dd_fail;
        if (!koszul_delta(koszul_delta(random_element(rng, pd), 0, 1), 0, 1).zero()) ++dd_fail;
        dd_n += 2;
    }
    out.push_back(make_check("koszul-delta-squared", "0 failures of " + str(dd_n),
                             str(dd_fail) + " failures of " + str(dd_n), dd_n));
    return out;
}

Suite jacobi(uint64_t seed) {
    Rng rng(seed);
    int64_t fail = 0, n = 0;
    for (int q = 0; q <= 2; ++q)
        for (int du = q + 1; du <= 4; ++du)
            for (int dw = q + 1; dw <= 4; ++dw) {
                Space u = make_space("u", du), w = make_space("w", dw);
                Piece pu{{Factor{u, q + 1, Kind::Ext}}}, ps{{Factor{u, q + 1, Kind::Sym}}};
                Piece pw{{Factor{w, q + 1, Kind::Ext}}};
                for (int iter = 0; iter < 2; ++iter) {
                    El f = random_element(rng, pu), fs = random_element(rng, ps);
                    El g = random_element(rng, pw);
                    El dd = det_map(tensor_product(f, g));
                    El ee = edet_map(tensor_product(fs, g));
                    for (uint16_t i = 0; i < du; ++i)
                        for (uint16_t j = 0; j < dw; ++j) {
                            uint16_t x = static_cast<uint16_t>(i * dw + j);
                            if (!(derive(dd, 0, {x}) ==
                                  det_map(tensor_product(derive(f, 0, {i}), derive(g, 0, {j})))))
                                ++fail;
                            if (!(derive(ee, 0, {x}) ==
                                  edet_map(tensor_product(derive(fs, 0, {i}), derive(g, 0, {j})))))
                                ++fail;
                            n += 2;
                        }
                }
            }
    return {make_check("jacobi-det-edet", "0 failures of " + str(n),
                       str(fail) + " failures of " + str(n), n)};
}

Suite wedge_prolong(uint64_t) {
    Suite out;
    int64_t fail = 0, n = 0;
    const int64_t ambient_cap = 4200;  // keeps the largest solves in budget
    for (int q = 1; q <= 3; ++q)
        for (int d = 0; q + d + 1 <= 4; ++d) {
            for (int du = 2; du <= 5; ++du)
                for (int dw = 2; dw <= 5; ++dw) {
                    if (sym_dim(du * dw, q + d + 1) > ambient_cap) continue;
                    Space u = standard_graded_space("u", du);
                    Space w = standard_graded_space("w", dw);
                    Piece dets{{Factor{u, q + 1, Kind::Ext}, Factor{w, q + 1, Kind::Ext}}};
                    if (dets.dim() > 0) {
                        std::vector<El> b;
                        for (const auto& e : enumerate_basis(dets)) b.push_back(det_map(e));
                        int64_t got = static_cast<int64_t>(prolong(b, d, true).size());
                        int64_t expect = ext_dim(du, q + d + 1) * ext_dim(dw, q + d + 1);
                        fail += got != expect;
                        ++n;
                    }
                    Piece edets{{Factor{u, q + 1, Kind::Sym}, Factor{w, q + 1, Kind::Ext}}};
                    if (edets.dim() > 0) {
                        std::vector<El> b;
                        for (const auto& e : enumerate_basis(edets)) b.push_back(edet_map(e));
                        int64_t got = static_cast<int64_t>(prolong(b, d, true).size());
                        int64_t expect = sym_dim(du, q + d + 1) * ext_dim(dw, q + d + 1);
                        fail += got != expect;
                        ++n;
                    }
                }
            for (const auto& dims : {std::vector<int>{2, 2, 2}, std::vector<int>{3, 2, 2},
                                     std::vector<int>{2, 2, 2, 2}}) {
                int64_t prod = 1;
                for (int di : dims) prod *= di;
                if (sym_dim(prod, q + d + 1) > ambient_cap) continue;
                std::vector<Space> spaces;
                for (size_t i = 0; i < dims.size(); ++i)
                    spaces.push_back(standard_graded_space("v" + std::to_string(i), dims[i]));
                Piece p;
                for (const auto& s : spaces) p.factors.push_back({s, q + 1, Kind::Ext});
                if (p.dim() == 0) continue;
                std::vector<El> b;
                for (const auto& e : enumerate_basis(p)) b.push_back(wedge_embedding(e));
                int64_t got = static_cast<int64_t>(prolong(b, d, true).size());
                int64_t expect = 1;
                for (const auto& s : spaces) expect *= ext_dim(s.dim, q + d + 1);
                fail += got != expect;
                ++n;
            }
        }
    out.push_back(make_check("wedge-prolongation-grid", "0 failures of " + str(n),
                             str(fail) + " failures of " + str(n), n));
    return out;
}

Suite bottom_range(uint64_t seed) {
    int64_t fail = 0, n = 0;
    for (int d = 2; d <= 8; ++d)
        for (int k = 1; k <= 2; ++k)
            for (int sub = 0; sub < 8; ++sub) {
                JetVariety c = rational_normal_curve(d);
                uint64_t s1 = Rng(seed).fork(d * 100 + k * 10 + sub).next();
                auto r3 = osculating_quadrics(c, k, s1, JetRange::R3);
                auto r1 = osculating_quadrics(c, k, s1 ^ 0x5a5a, JetRange::R1);
                bool same = r1.size() == r3.size();
                if (same && !r1.empty()) {
                    auto all = r1;
                    all.insert(all.end(), r3.begin(), r3.end());
                    same = span_dim(all) == static_cast<int64_t>(r1.size());
                }
                fail += !same;
                ++n;
            }
    return {make_check("osculating-range-equivalence", "0 failures of " + str(n),
                       str(fail) + " failures of " + str(n), n)};
}

Suite linalg_modp(uint64_t seed) {
    Rng rng(seed);
    int64_t fail = 0, n = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        int rows = 4 + iter % 4, cols = 5 + iter % 3, rk = 1 + iter % 4;
        std::vector<RatVec> a(rows, RatVec(rk)), b(rk, RatVec(cols));
        for (auto& r : a)
            for (auto& x : r) x = rat_of(rng.range(-9, 9));
        for (auto& r : b)
            for (auto& x : r) x = rat_of(rng.range(-9, 9));
        SparseMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                Rat s(0);
                for (int t = 0; t < rk; ++t) s += a[r][t] * b[t][c];
                m.set(r, c, s);
            }
        m.finalize();
        int64_t exact = rank(m);
        int64_t filtered;
        try {
            filtered = rank_modp(m, random_prime31(rng));
        } catch (const DenominatorDivisibleByP&) {
            filtered = rank_modp(m, random_prime31(rng));
        }
        if (filtered != exact) {
            // re-draw rather than accept silently
            if (rank_modp(m, random_prime31(rng)) != exact) ++fail;
        }
        ++n;
    }
    return {make_check("rank-filter-random-primes", "0 failures of " + str(n),
                       str(fail) + " failures of " + str(n), n)};
}

// ---- geometry / syzygy suites ----

struct EksCase {
    int q, k, d;
    std::vector<int> degs;
};

const std::vector<EksCase>& eks_cases() {
    static const std::vector<EksCase> cases = {
        {1, 1, 4, {1, 1, 1, 1}}, {1, 1, 8, {2, 2, 2, 2}}, {2, 0, 4, {2, 2}},
        {2, 0, 6, {3, 3}},       {3, 0, 6, {3, 3}},
    };
    return cases;
}

Suite eks_genus0(uint64_t seed) {
    Suite out;
    for (const auto& c : eks_cases()) {
        JetVariety curve = rational_normal_curve(c.d);
        auto ideal = ideal_bottom_component(curve, c.q, c.k, IdealMethod::Jets,
                                            Rng(seed).fork(c.d * 10 + c.q).next());
        LinearTensor t = rnc_multiplication_tensor(c.degs);
        int64_t image_rank = rank(minor_map_matrix(t, c.q));
        std::ostringstream name;
        name << "surjective-q" << c.q << "-k" << c.k << "-d" << c.d << "-(" << join(c.degs) << ")";
        out.push_back(make_check(name.str(), "rank " + str(ideal.size()),
                                 "rank " + str(image_rank)));
    }
    return out;
}

Suite minor_membership(uint64_t seed) {
    Suite out;
    const int npoints = 50;
    for (int d = 2; d <= 8; ++d)
        for (int k = 0; k <= 1; ++k) {
            int parts = 2 * k + 2;
            if (d < parts) continue;
            std::vector<int> degs(parts, d / parts);
            for (int i = 0; i < d % parts; ++i) ++degs[i];
            LinearTensor t = rnc_multiplication_tensor(degs);
            JetVariety curve = rational_normal_curve(d);
            for (int q = 1; q <= 3; ++q) {
                auto labels = minor_map_domain_labels(t, q);
                if (labels.empty()) continue;
                Piece dom;
                for (size_t f = 0; f < degs.size(); ++f)
                    dom.factors.push_back(
                        {make_space("s" + std::to_string(f), degs[f] + 1), q + 1, Kind::Ext});
                Rng rng(Rng(seed).fork(d * 100 + k * 10 + q).next());
                int64_t fail = 0, n = 0;
                std::vector<RatVec> pts;
                for (int s = 0; s < npoints; ++s)
                    pts.push_back(sample_secant_osculating_point(curve, q, k, rng));
                for (const auto& lab : labels) {
                    El col = minor_map_apply(t, basis_element(dom, lab));
                    for (const auto& z : pts) {
                        fail += eval_element(col, z) != 0;
                        ++n;
                    }
                }
                std::ostringstream name;
                name << "membership-d" << d << "-k" << k << "-q" << q;
                out.push_back(make_check(name.str(), "0 nonzero of " + str(n),
                                         str(fail) + " nonzero of " + str(n), n));
            }
        }
    return out;
}

Suite fulton_hansen(uint64_t seed) {
    Suite out;
    Rng rng(seed);
    JetVariety x = pencil_product_surface(2, 2);
    out.push_back(make_check("pencil-product-tangent-dim", "4",
                             str(dim_estimate(x, 1, 1, 3, rng))));
    out.push_back(make_check("pencil-product-secant-dim", "5",
                             str(dim_estimate(x, 2, 0, 3, rng))));
    for (int d = 4; d <= 8; ++d) {
        JetVariety c = rational_normal_curve(d);
        out.push_back(make_check("curve-d" + str(d) + "-tangent-dim", "2",
                                 str(dim_estimate(c, 1, 1, 3, rng))));
        out.push_back(make_check("curve-d" + str(d) + "-secant-dim", "3",
                                 str(dim_estimate(c, 2, 0, 3, rng))));
    }
    return out;
}

Suite segre_decomposition(uint64_t seed) {
    Suite out;
    struct Case {
        std::vector<int> dims;
        int p_max;
    };
    for (const Case& c : {Case{{2, 2, 2, 2}, 1}, Case{{3, 3, 3, 2}, 2}}) {
        std::vector<int64_t> expect;
        for (int p = 0; p <= c.p_max; ++p)
            expect.push_back(bottom_syzygy_dims_segre(p, 1, c.dims));
        for (int s = 0; s < 3; ++s) {
            uint64_t sub = Rng(seed).fork(101 + s).next();
            JetVariety y = segre_variety(c.dims);
            auto quadrics = ideal_bottom_component(y, 1, 1, IdealMethod::Jets, sub);
            auto cubics = ideal_degree_slice_sampled(y, 1, 1, 3, sub ^ 0xbeef);
            std::map<int, std::vector<El>> degs;
            degs[2] = std::move(quadrics);
            degs[3] = std::move(cubics);
            GradedIdealSlice slice(y.ambient(), std::move(degs), Provenance::Sampled);
            std::vector<int64_t> got;
            for (int p = 0; p <= c.p_max; ++p)
                got.push_back(koszul_cohomology_dim(slice, {p, 2, Kind::Ext}));
            std::ostringstream name;
            name << "koszul-row-(" << join(c.dims) << ")-seed" << s;
            out.push_back(make_check(name.str(), join(expect), join(got), c.p_max + 1));
        }
    }
    return out;
}

Suite green_lazarsfeld(uint64_t) {
    Suite out;
    int64_t dim_fail = 0, dim_n = 0, span_fail = 0, span_n = 0;
    for (int du = 1; du <= 4; ++du)
        for (int dw = 1; dw <= 4; ++dw) {
            Space u = standard_graded_space("u", du), w = standard_graded_space("w", dw);
            for (int p = 0; p <= 2; ++p)
                for (int q = 1; q <= 2; ++q) {
                    auto sym = bottom_cycles(u, w, p, q, Kind::Sym);
                    auto ext = bottom_cycles(u, w, p, q, Kind::Ext);
                    int64_t sym_expect = 0, ext_expect = 0;
                    for (int a = 0; a <= p; ++a) {
                        int b = p - a;
                        auto zdual = [](int aa, int cc, int nn) {
                            return cc < 1 ? (aa == 0 ? int64_t{1} : int64_t{0})
                                          : schur_dim(hook_partition(aa + 1, cc - 1), nn);
                        };
                        auto zplain = [](int aa, int cc, int nn) {
                            return cc < 1 ? int64_t{0}
                                          : schur_dim(hook_partition(cc, aa), nn);
                        };
                        sym_expect += zdual(a, b + q + 1, du) * zdual(b, a + q + 1, dw);
                        ext_expect += zplain(a, b + q + 1, du) * zdual(b, a + q + 1, dw);
                    }
                    dim_fail += static_cast<int64_t>(sym.size()) != sym_expect;
                    dim_fail += static_cast<int64_t>(ext.size()) != ext_expect;
                    dim_n += 2;

                    // products span the cycle space (symmetric kind)
                    std::vector<El> images;
                    for (int a = 0; a <= p; ++a) {
                        int b = p - a;
                        auto zf = cycle_space_basis(u, a, b + q + 1, Kind::Sym);
                        auto zg = cycle_space_basis(w, b, a + q + 1, Kind::Sym);
                        for (const auto& f : zf)
                            for (const auto& g : zg) images.push_back(box_product(f, g, Kind::Sym));
                    }
                    int64_t got = images.empty() ? 0 : span_dim(images);
                    span_fail += got != static_cast<int64_t>(sym.size());
                    ++span_n;
                }
        }
    out.push_back(make_check("cycle-space-decompositions", "0 failures of " + str(dim_n),
                             str(dim_fail) + " failures of " + str(dim_n), dim_n));
    out.push_back(make_check("box-products-span", "0 failures of " + str(span_n),
                             str(span_fail) + " failures of " + str(span_n), span_n));
    return out;
}

Suite lascoux(uint64_t) {
    Suite out;
    for (int nw : {3, 4}) {
        GradedIdealSlice slice = generic_matrix_minor_slice(2, nw);
        std::vector<int64_t> expect, got;
        for (int p = 0; p <= 3; ++p) {
            expect.push_back(lascoux_bottom_dims(p, 1, 2, nw));
            got.push_back(koszul_cohomology_dim(slice, {p, 2, Kind::Ext}));
        }
        out.push_back(make_check("minor-ideal-row-2x" + str(nw), join(expect), join(got), 4));
    }
    return out;
}

Suite jets_vs_sampling(uint64_t seed) {
    Suite out;
    int64_t fail = 0, n = 0;
    for (int d = 3; d <= 6; ++d)
        for (int q = 1; q <= 2; ++q)
            for (int k = 0; k <= 1; ++k) {
                JetVariety c = rational_normal_curve(d);
                uint64_t s = Rng(seed).fork(d * 100 + q * 10 + k).next();
                auto jets = ideal_bottom_component(c, q, k, IdealMethod::Jets, s);
                auto samp = ideal_bottom_component(c, q, k, IdealMethod::Sampling, s ^ 0xfeed);
                bool same = jets.size() == samp.size();
                if (same && !jets.empty()) {
                    auto all = jets;
                    all.insert(all.end(), samp.begin(), samp.end());
                    same = span_dim(all) == static_cast<int64_t>(jets.size());
                }
                fail += !same;
                ++n;
            }
    std::vector<JetVariety> others;
    others.push_back(segre_variety({2, 2}));
    others.push_back(segre_variety({2, 3}));
    others.push_back(segre_variety({2, 2, 2}));
    others.push_back(segre_veronese_variety({2, 2}, {2, 1}));
    others.push_back(pencil_product_surface(2, 2));
    for (size_t i = 0; i < others.size(); ++i) {
        const JetVariety& y = others[i];
        for (auto [q, k] : {std::pair{1, 1}, std::pair{2, 0}}) {
            uint64_t s = Rng(seed).fork(1000 + i * 10 + q).next();
            auto jets = ideal_bottom_component(y, q, k, IdealMethod::Jets, s);
            auto samp = ideal_bottom_component(y, q, k, IdealMethod::Sampling, s ^ 0xfeed);
            bool same = jets.size() == samp.size();
            if (same && !jets.empty()) {
                auto all = jets;
                all.insert(all.end(), samp.begin(), samp.end());
                same = span_dim(all) == static_cast<int64_t>(jets.size());
            }
            fail += !same;
            ++n;
        }
    }
    out.push_back(make_check("jets-vs-sampling-agreement", "0 failures of " + str(n),
                             str(fail) + " failures of " + str(n), n));
    return out;
}

Suite x_multiplicative(uint64_t seed) {
    Suite out;
    Rng rng(seed);
    {
        JetVariety c = rational_normal_curve(2);
        auto rep = check_x_multiplicative(rnc_multiplication_tensor({1, 1}), c, 50, rng);
        out.push_back(make_check("multiplication-2way", "1-generic and simple",
                                 rep.one_generic && rep.x_simple ? "1-generic and simple"
                                                                 : "failed"));
    }
    {
        JetVariety c = rational_normal_curve(4);
        auto rep = check_x_multiplicative(rnc_multiplication_tensor({1, 1, 1, 1}), c, 100, rng);
        out.push_back(make_check("multiplication-4way", "1-generic and simple",
                                 rep.one_generic && rep.x_simple ? "1-generic and simple"
                                                                 : "failed"));
    }
    {
        Space u = make_space("u", 2), w = make_space("w", 2);
        LinearTensor t = identity_tensor({u, w});
        t.coeffs[0].clear();
        JetVariety c = rational_normal_curve(3);
        t.target = c.ambient();
        auto rep = check_x_multiplicative(t, c, 50, rng);
        out.push_back(make_check("killed-direction-detected", "not 1-generic",
                                 rep.one_generic ? "1-generic" : "not 1-generic"));
    }
    return out;
}

}  // namespace

const std::map<std::string, std::function<Suite(uint64_t)>>& registry() {
    static const std::map<std::string, std::function<Suite(uint64_t)>> reg = {
        {"multilinear-core", multilinear_core},
        {"jacobi", jacobi},
        {"wedge-prolong", wedge_prolong},
        {"bottom-range", bottom_range},
        {"linalg-modp", linalg_modp},
        {"eks-genus0", eks_genus0},
        {"minor-membership", minor_membership},
        {"fulton-hansen", fulton_hansen},
        {"segre-decomposition", segre_decomposition},
        {"green-lazarsfeld", green_lazarsfeld},
        {"lascoux", lascoux},
        {"jets-vs-sampling", jets_vs_sampling},
        {"x-multiplicative", x_multiplicative},
    };
    return reg;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

bool suite_passed(const Suite& s) {
    for (const auto& c : s)
        if (!c.pass) return false;
    return true;
}

}  // namespace tsy::verify
