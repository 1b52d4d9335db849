#include "tsy/tensor.hpp"

#include <functional>
#include <numeric>

namespace tsy {

LinearTensor rnc_multiplication_tensor(const std::vector<int>& degs) {
    int d = 0;
    for (int x : degs) d += x;
    JetVariety curve = rational_normal_curve(d);
    LinearTensor t;
    t.target = curve.ambient();
    for (int x : degs) t.source_dims.push_back(x + 1);
    int64_t n = t.source_size();
    t.coeffs.resize(n);
    std::vector<int> dims = t.source_dims;
    for (int64_t flat = 0; flat < n; ++flat) {
        auto idx = tensor_label_split(dims, flat);
        int total = std::accumulate(idx.begin(), idx.end(), 0);
        t.coeffs[flat] = {{total, Rat(1)}};
    }
    return t;
}

LinearTensor identity_tensor(const std::vector<Space>& sources) {
    LinearTensor t;
    for (const auto& s : sources) t.source_dims.push_back(s.dim);
    t.target = tensor_space(sources);
    int64_t n = t.source_size();
    t.coeffs.resize(n);
    for (int64_t flat = 0; flat < n; ++flat) t.coeffs[flat] = {{flat, Rat(1)}};
    return t;
}

std::vector<std::vector<FactorLabel>> minor_map_domain_labels(const LinearTensor& t, int q) {
    size_t ell = t.source_dims.size();
    std::vector<std::vector<FactorLabel>> out;
    for (int d : t.source_dims)
        if (d < q + 1) return out;  // zero domain
    std::vector<int64_t> counts(ell);
    int64_t total = 1;
    for (size_t f = 0; f < ell; ++f) {
        counts[f] = ext_dim(t.source_dims[f], q + 1);
        total *= counts[f];
    }
    out.reserve(total);
    for (int64_t flat = 0; flat < total; ++flat) {
        std::vector<FactorLabel> tuple(ell);
        int64_t rest = flat;
        for (size_t f = ell; f-- > 0;) {
            tuple[f] = ext_unrank(t.source_dims[f], q + 1, rest % counts[f]);
            rest /= counts[f];
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

namespace {

// Expands one column: sum over permutation tuples (first factor fixed) of
// the product of the q+1 linear forms selected by the slots.
void expand_column(const LinearTensor& t, int q,
                   const std::vector<FactorLabel>& subsets,
                   const std::function<void(const FactorLabel&, const Rat&)>& emit) {
    size_t ell = t.source_dims.size();
    int q1 = q + 1;
    std::vector<std::vector<int>> perms(ell);
    perms[0].resize(q1);
    std::iota(perms[0].begin(), perms[0].end(), 0);

    std::function<void(size_t, int)> rec_perm = [&](size_t m, int sgn) {
        if (m == ell) {
            // product over slots r of the linear form T(e_{j_1(r)},...)
            std::vector<const SparseVec*> forms(q1);
            for (int r = 0; r < q1; ++r) {
                int64_t flat = 0;
                for (size_t f = 0; f < ell; ++f)
                    flat = flat * t.source_dims[f] + subsets[f][perms[f][r]];
                forms[r] = &t.coeffs[flat];
            }
            FactorLabel mono(q1);
            std::function<void(int, Rat)> rec_mul = [&](int r, Rat acc) {
                if (r == q1) {
                    FactorLabel sorted = mono;
                    std::sort(sorted.begin(), sorted.end());
                    emit(sorted, acc * sgn);
                    return;
                }
                for (const auto& [var, c] : *forms[r]) {
                    mono[r] = static_cast<uint16_t>(var);
                    rec_mul(r + 1, acc * c);
                }
            };
            rec_mul(0, Rat(1));
            return;
        }
        std::vector<int> perm(q1);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inv = 0;
            for (int i = 0; i < q1; ++i)
                for (int j = i + 1; j < q1; ++j) inv += perm[i] > perm[j];
            perms[m] = perm;
            rec_perm(m + 1, sgn * (inv % 2 ? -1 : 1));
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec_perm(1, 1);
}

}  // namespace

SparseMatrix minor_map_matrix(const LinearTensor& t, int q) {
    auto labels = minor_map_domain_labels(t, q);
    SparseMatrix m(sym_dim(t.target.dim, q + 1), static_cast<int64_t>(labels.size()));
    for (size_t c = 0; c < labels.size(); ++c) {
        std::map<FactorLabel, Rat> acc;
        expand_column(t, q, labels[c], [&](const FactorLabel& mono, const Rat& v) {
            acc[mono] += v;
        });
        for (const auto& [mono, v] : acc)
            if (v != 0) m.set(sym_rank(mono), static_cast<int64_t>(c), v);
    }
    m.finalize();
    return m;
}

El minor_map_apply(const LinearTensor& t, const El& domain_element) {
    int q1 = domain_element.piece().factors.empty()
                 ? 0
                 : domain_element.piece().factors[0].power;
    Piece target{{Factor{t.target, q1, Kind::Sym}}};
    El out(target);
    for (const auto& [l, v] : domain_element.terms()) {
        expand_column(t, q1 - 1, l, [&](const FactorLabel& mono, const Rat& c) {
            out.add({mono}, v * c);
        });
    }
    return out;
}

Rat eval_linear(const SparseVec& form, const RatVec& point) {
    Rat s(0);
    for (const auto& [i, c] : form) s += c * point[i];
    return s;
}

Rat eval_element(const El& e, const RatVec& point) {
    Rat total(0);
    for (const auto& [l, v] : e.terms()) {
        Rat m = v;
        for (const auto& fl : l)
            for (uint16_t var : fl) m *= point[var];
        total += m;
    }
    return total;
}

MultiplicativityReport check_x_multiplicative(const LinearTensor& t, const JetVariety& x,
                                              int samples, Rng& rng) {
    MultiplicativityReport rep;
    rep.samples_run = samples;
    size_t ell = t.source_dims.size();

    // Basis tuples first: a zero there is the cheapest counterexample, and
    // catches tensors with a killed coordinate direction outright.
    if (t.source_size() <= 4096) {
        for (int64_t flat = 0; flat < t.source_size() && rep.one_generic; ++flat) {
            if (!t.coeffs[flat].empty()) continue;
            auto ix = tensor_label_split(t.source_dims, flat);
            std::vector<RatVec> vs(ell);
            for (size_t f = 0; f < ell; ++f) {
                vs[f].assign(t.source_dims[f], Rat(0));
                vs[f][ix[f]] = 1;
            }
            rep.one_generic = false;
            rep.one_generic_witness = vs;
        }
    }

    for (int s = 0; s < samples && rep.one_generic; ++s) {
        std::vector<RatVec> vs(ell);
        for (size_t f = 0; f < ell; ++f) {
            vs[f].resize(t.source_dims[f]);
            bool nonzero = false;
            for (auto& c : vs[f]) {
                c = rng.rational(20);
                nonzero = nonzero || c != 0;
            }
            if (!nonzero) vs[f][0] = 1;
        }
        // T(v1 x ... x vl)
        RatVec image(t.target.dim, Rat(0));
        std::vector<int> idx(ell, 0);
        for (int64_t flat = 0; flat < t.source_size(); ++flat) {
            auto ix = tensor_label_split(t.source_dims, flat);
            Rat prod(1);
            for (size_t f = 0; f < ell; ++f) prod *= vs[f][ix[f]];
            if (prod == 0) continue;
            for (const auto& [i, c] : t.coeffs[flat]) image[i] += prod * c;
        }
        if (is_zero(image)) {
            rep.one_generic = false;
            rep.one_generic_witness = vs;
        }
    }

    for (int s = 0; s < samples && rep.x_simple; ++s) {
        RatVec z = sample_secant_osculating_point(x, 1, 0, rng);
        // dual image: A[j1..jl] = <T_{j1..jl}, z>
        std::vector<Rat> a(t.source_size());
        for (int64_t flat = 0; flat < t.source_size(); ++flat)
            a[flat] = eval_linear(t.coeffs[flat], z);
        // every flattening must have rank <= 1: check all 2x2 minors
        for (size_t f = 0; f < ell && rep.x_simple; ++f) {
            int df = t.source_dims[f];
            int64_t rest = t.source_size() / df;
            auto entry = [&](int r, int64_t c) -> const Rat& {
                // rebuild the flat index with coordinate f set to r
                int64_t before = 1;
                for (size_t g = f + 1; g < ell; ++g) before *= t.source_dims[g];
                int64_t hi = c / before, lo = c % before;
                return a[(hi * df + r) * before + lo];
            };
            for (int r1 = 0; r1 < df && rep.x_simple; ++r1)
                for (int r2 = r1 + 1; r2 < df && rep.x_simple; ++r2)
                    for (int64_t c1 = 0; c1 < rest && rep.x_simple; ++c1)
                        for (int64_t c2 = c1 + 1; c2 < rest; ++c2) {
                            if (entry(r1, c1) * entry(r2, c2) !=
                                entry(r1, c2) * entry(r2, c1)) {
                                rep.x_simple = false;
                                rep.x_simple_witness = z;
                                break;
                            }
                        }
        }
    }
    return rep;
}

}  // namespace tsy
