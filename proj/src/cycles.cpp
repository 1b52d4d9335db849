#include "tsy/cycles.hpp"

#include <mutex>

namespace tsy {

namespace {

std::optional<WeightKey> element_weight(const El& e) {
    std::optional<WeightKey> w;
    for (const auto& [l, v] : e.terms()) {
        WeightKey lw = label_weight(e.piece(), l);
        if (lw.empty()) return std::nullopt;
        if (!w)
            w = lw;
        else if (*w != lw)
            return std::nullopt;
    }
    return w;
}

// Kernel of delta restricted to the span of the (independent) column
// elements; returns combinations of the columns.
std::vector<El> kernel_of_columns(const std::vector<El>& cols, bool parallel) {
    if (cols.empty()) return {};
    ColumnProblem prob;
    bool graded = true;
    for (const auto& c : cols) {
        El img = koszul_delta(c, 0, 1);
        prob.cols.push_back(img.sparse_coords());
        if (graded) {
            auto w = element_weight(c);
            if (w)
                prob.weights.push_back(*w);
            else
                graded = false;
        }
    }
    if (!graded) prob.weights.clear();
    SolveOptions opt{.use_blocks = graded, .parallel = parallel};
    std::vector<El> out;
    for (const auto& k : kernel_blocked(prob, opt)) {
        El e(cols[0].piece());
        for (const auto& [ci, v] : k) e += v * cols[ci];
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::vector<El> cycle_space_basis(const Space& u, int a, int b, Kind first_kind,
                                  bool parallel) {
    Kind second = first_kind == Kind::Sym ? Kind::Ext : Kind::Sym;
    Piece p{{Factor{u, a, first_kind}, Factor{u, b, second}}};
    if (p.dim() == 0) return {};
    if (a == 0) return enumerate_basis(p);  // the differential out of power 0 is zero
    return kernel_of_columns(enumerate_basis(p), parallel);
}

std::vector<El> bottom_cycles(const Space& u, const Space& w, int p, int q, Kind kind,
                              bool parallel) {
    Space x = tensor_space({u, w});
    std::vector<El> cols;
    if (kind == Kind::Sym) {
        Piece dets{{Factor{u, q + 1, Kind::Ext}, Factor{w, q + 1, Kind::Ext}}};
        Piece wedge{{Factor{x, p, Kind::Ext}}};
        if (dets.dim() == 0 || wedge.dim() == 0) return {};
        for (const auto& va : enumerate_basis(wedge))
            for (const auto& st : enumerate_basis(dets))
                cols.push_back(tensor_product(va, det_map(st)));
    } else {
        Piece edets{{Factor{u, q + 1, Kind::Sym}, Factor{w, q + 1, Kind::Ext}}};
        Piece sym{{Factor{x, p, Kind::Sym}}};
        if (edets.dim() == 0 || sym.dim() == 0) return {};
        for (const auto& ma : enumerate_basis(sym))
            for (const auto& st : enumerate_basis(edets))
                cols.push_back(tensor_product(ma, edet_map(st)));
    }
    if (p == 0) return cols;  // everything is a cycle at homological index 0
    return kernel_of_columns(cols, parallel);
}

namespace {

struct BoxGrading {
    int a, b, q;
};

BoxGrading box_grading(const El& f, const El& g_lift, Kind kind) {
    const auto& ff = f.piece().factors;
    const auto& gf = g_lift.piece().factors;
    if (ff.size() != 2 || gf.size() != 2) throw GradingMismatch();
    Kind f0 = kind == Kind::Sym ? Kind::Sym : Kind::Ext;
    Kind f1 = kind == Kind::Sym ? Kind::Ext : Kind::Sym;
    if (ff[0].kind != f0 || ff[1].kind != f1 || gf[0].kind != Kind::Sym ||
        gf[1].kind != Kind::Ext)
        throw GradingMismatch();
    BoxGrading g;
    g.a = ff[0].power;
    g.b = gf[0].power - 1;
    g.q = ff[1].power - g.b - 1;
    if (g.b < 0 || g.q < 0 || gf[1].power != g.a + g.q) throw GradingMismatch();
    return g;
}

// det/edet-image reducers, cached per (U, W, power, kind).
const RrefResult& embedded_image_reducer(const Space& u, const Space& w, int power,
                                         Kind kind) {
    static std::map<std::string, RrefResult> cache;
    static std::mutex mu;
    std::string key = u.name + "|" + w.name + "|" + std::to_string(u.dim) + "x" +
                      std::to_string(w.dim) + "|" + std::to_string(power) +
                      (kind == Kind::Sym ? "|det" : "|edet");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Piece dom{{Factor{u, power, kind == Kind::Sym ? Kind::Ext : Kind::Sym},
               Factor{w, power, Kind::Ext}}};
    std::vector<El> images;
    for (const auto& e : enumerate_basis(dom))
        images.push_back(kind == Kind::Sym ? det_map(e) : edet_map(e));
    return cache.emplace(key, rref(coordinate_matrix(images))).first->second;
}

void check_middle_membership(const El& cycle, const Space& u, const Space& w, int q1,
                             Kind kind) {
    if (cycle.zero()) return;
    const RrefResult& red = embedded_image_reducer(u, w, q1, kind);
    const Piece& p = cycle.piece();
    Piece middle{{p.factors[1]}};
    std::map<FactorLabel, SparseVec> legs;
    for (const auto& [l, v] : cycle.terms())
        legs[l[0]].emplace_back(middle.index_of({l[1]}), v);
    for (auto& [first, vec] : legs) {
        sort_and_combine(vec);
        if (!reduce_sparse(red, vec).empty())
            throw std::logic_error("product left the embedded middle subspace");
    }
}

}  // namespace

El box0_product(const El& f, const El& g_lift, Kind kind) {
    BoxGrading g = box_grading(f, g_lift, kind);
    El s1 = coproduct(f, 1, g.b + 1, g.q);
    El s2 = coproduct(g_lift, 1, g.a, g.q);
    El t = tensor_product(s1, s2);  // [0:f0, 1:f1(b+1), 2:f1(q), 3:S^{b+1}W, 4:Λ^aW, 5:Λ^qW]
    t = pair_factors(t, 0, 4);
    t = pair_factors(t, 1, 3);
    t = pair_factors(t, 2, 3);
    return merge_factors(t, 0, 1);
}

El box_product(const El& f, const El& g, Kind kind) {
    if (!koszul_delta(f, 0, 1).zero() || !koszul_delta(g, 0, 1).zero()) throw NotACycle();
    const auto& gf = g.piece().factors;
    if (gf.size() != 2 || gf[0].kind != Kind::Sym || gf[1].kind != Kind::Ext)
        throw GradingMismatch();
    const Space& w = gf[0].space;
    int b = gf[0].power;
    int aq1 = gf[1].power;

    // a preimage of g under the incoming differential on S^{b+1}W ⊗ Λ^{a+q}W
    Piece lift_piece{{Factor{w, b + 1, Kind::Sym}, Factor{w, aq1 - 1, Kind::Ext}}};
    auto lift_basis = enumerate_basis(lift_piece);
    std::vector<El> images;
    images.reserve(lift_basis.size());
    for (const auto& e : lift_basis) images.push_back(koszul_delta(e, 0, 1));
    auto sol = solve_columns(coordinate_matrix(images).transpose(), g.coords());
    if (!sol) throw std::logic_error("no Koszul preimage found for a valid cycle");
    El lift(lift_piece);
    for (size_t i = 0; i < lift_basis.size(); ++i) lift += (*sol)[i] * lift_basis[i];

    El out = koszul_delta(box0_product(f, lift, kind), 0, 1);

    if (!koszul_delta(out, 0, 1).zero())
        throw std::logic_error("box product output failed the cycle check");
    BoxGrading bg = box_grading(f, lift, kind);
    check_middle_membership(out, f.piece().factors[0].space, w, bg.q + 1, kind);
    return out;
}

El pushforward_cycle(const LinearTensor& t, const El& cycle) {
    const auto& facs = cycle.piece().factors;
    if (facs.size() != 2) throw GradingMismatch();
    if (facs[0].space.dim != t.source_size()) throw GradingMismatch();
    Piece target{{Factor{t.target, facs[0].power, facs[0].kind},
                  Factor{t.target, facs[1].power, facs[1].kind}}};
    El out(target);

    // substitute each slot variable by its image linear form
    std::function<void(const FactorLabel&, size_t, FactorLabel&, Rat,
                       const std::function<void(const FactorLabel&, const Rat&)>&)>
        expand = [&](const FactorLabel& src, size_t pos, FactorLabel& picked, Rat acc,
                     const std::function<void(const FactorLabel&, const Rat&)>& emit) {
            if (pos == src.size()) {
                emit(picked, acc);
                return;
            }
            for (const auto& [var, c] : t.coeffs[src[pos]]) {
                picked.push_back(static_cast<uint16_t>(var));
                expand(src, pos + 1, picked, acc * c, emit);
                picked.pop_back();
            }
        };

    for (const auto& [l, v] : cycle.terms()) {
        FactorLabel pick0;
        expand(l[0], 0, pick0, v, [&](const FactorLabel& w0, const Rat& c0) {
            FactorLabel leg0 = w0;
            Rat coeff = c0;
            if (facs[0].kind == Kind::Ext) {
                int sign = 1;
                for (size_t i = 1; i < leg0.size(); ++i)
                    for (size_t j = i; j > 0 && leg0[j - 1] >= leg0[j]; --j) {
                        if (leg0[j - 1] == leg0[j]) return;
                        std::swap(leg0[j - 1], leg0[j]);
                        sign = -sign;
                    }
                coeff *= sign;
            } else {
                std::sort(leg0.begin(), leg0.end());
            }
            FactorLabel pick1;
            expand(l[1], 0, pick1, coeff, [&](const FactorLabel& w1, const Rat& c1) {
                FactorLabel leg1 = w1;
                Rat cc = c1;
                if (facs[1].kind == Kind::Ext) {
                    int sign = 1;
                    for (size_t i = 1; i < leg1.size(); ++i)
                        for (size_t j = i; j > 0 && leg1[j - 1] >= leg1[j]; --j) {
                            if (leg1[j - 1] == leg1[j]) return;
                            std::swap(leg1[j - 1], leg1[j]);
                            sign = -sign;
                        }
                    cc *= sign;
                } else {
                    std::sort(leg1.begin(), leg1.end());
                }
                out.add({leg0, leg1}, cc);
            });
        });
    }
    return out;
}

El standard_cycle_witness(const Space& v, int head, int tail) {
    Piece p{{Factor{v, head, Kind::Sym}, Factor{v, tail, Kind::Ext}}};
    FactorLabel h(head, 0);
    FactorLabel t(tail);
    for (int i = 0; i < tail; ++i) t[i] = static_cast<uint16_t>(i);
    return basis_element(p, {h, t});
}

El segre_bottom_syzygy(const std::vector<El>& fs, const std::vector<int>& p_star, int q) {
    if (fs.size() != p_star.size() || fs.empty()) throw GradingMismatch();
    int p = 0;
    for (int x : p_star) p += x;
    El cur = fs[0];
    for (size_t m = 1; m < fs.size(); ++m) {
        Kind kind = (m % 2 == 1) ? Kind::Sym : Kind::Ext;
        cur = box_product(cur, fs[m], kind);
    }
    const auto& facs = cur.piece().factors;
    if (facs[0].power != p || facs[1].power != q + 1) throw GradingMismatch();
    return cur;
}

}  // namespace tsy
