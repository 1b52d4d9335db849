#include "tsy/ideal.hpp"

#include <omp.h>

#include <deque>
#include <functional>

#include "tsy/tensor.hpp"

namespace tsy {

Piece ideal_piece(const JetVariety& x, int degree) {
    return Piece{{Factor{x.ambient(), degree, Kind::Sym}}};
}

namespace {

// Deterministic lazily-extended list: item i depends only on (seed, i).
// Backed by a deque so references stay valid while other workers append.
template <class T>
class IndexedPool {
public:
    IndexedPool(uint64_t seed, std::function<T(Rng&)> make)
        : seed_(seed), make_(std::move(make)) {}
    const T& at(size_t i) {
        std::lock_guard<std::mutex> lock(mu_);
        while (items_.size() <= i) {
            Rng r = Rng(seed_).fork(items_.size() + 1);
            items_.push_back(make_(r));
        }
        return items_[i];
    }

private:
    uint64_t seed_;
    std::function<T(Rng&)> make_;
    std::deque<T> items_;
    std::mutex mu_;
};

struct MonomialBlock {
    WeightKey weight;
    std::vector<FactorLabel> monomials;  // labels of S^d(V)
};

std::vector<MonomialBlock> monomial_blocks(const Space& v, int degree) {
    std::map<WeightKey, std::vector<FactorLabel>> by_weight;
    Piece p{{Factor{v, degree, Kind::Sym}}};
    for_each_sym(v.dim, degree, [&](const FactorLabel& l) {
        WeightKey w = v.graded() ? label_weight(p, {l}) : WeightKey{};
        by_weight[w].push_back(l);
    });
    std::vector<MonomialBlock> out;
    out.reserve(by_weight.size());
    for (auto& [w, ls] : by_weight) out.push_back({w, std::move(ls)});
    return out;
}

// Escalating kernel of constraint rows against one block of monomials.
// `coeff(row, monomial)` must be a pure function; rows come in batches of
// `rows_per_point` per point.
std::vector<SparseVec> escalate_block(
    const std::vector<FactorLabel>& monos, int rows_per_point,
    const std::function<Rat(int64_t, const FactorLabel&)>& coeff,
    const EscalationOptions& opts, const char* what) {
    int npoints = opts.initial_points;
    int64_t prev = -1;
    int stable = 0;
    for (;;) {
        SparseMatrix m(static_cast<int64_t>(npoints) * rows_per_point,
                       static_cast<int64_t>(monos.size()));
        for (int64_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < monos.size(); ++c) m.set(r, c, coeff(r, monos[c]));
        m.finalize();
        auto ker = kernel_basis(m);
        int64_t dim = static_cast<int64_t>(ker.size());
        if (prev >= 0 && dim > prev)
            throw std::logic_error("solution space grew under extra constraints");
        stable = (dim == prev) ? stable + 1 : 0;
        prev = dim;
        if (dim == 0 || stable >= opts.stable_doublings) {
            std::vector<SparseVec> out;
            for (const auto& k : ker) {
                SparseVec v;
                for (size_t c = 0; c < k.size(); ++c)
                    if (k[c] != 0) v.emplace_back(static_cast<int64_t>(c), k[c]);
                out.push_back(std::move(v));
            }
            return out;
        }
        if (npoints >= opts.max_points)
            throw DegenerateOracle(std::string(what) + ": solution space failed to stabilize");
        npoints *= 2;
    }
}

std::vector<El> solve_blocks(const JetVariety& x, int degree, int rows_per_point,
                             const std::function<Rat(int64_t, const FactorLabel&)>& coeff,
                             const EscalationOptions& opts, const char* what) {
    auto blocks = monomial_blocks(x.ambient(), degree);
    std::vector<std::vector<SparseVec>> per_block(blocks.size());
    std::exception_ptr err;

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (size_t b = 0; b < blocks.size(); ++b) {
        try {
            per_block[b] = escalate_block(blocks[b].monomials, rows_per_point, coeff, opts, what);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    Piece piece = ideal_piece(x, degree);
    std::vector<El> out;
    for (size_t b = 0; b < blocks.size(); ++b)
        for (const auto& v : per_block[b]) {
            El e(piece);
            for (const auto& [c, val] : v) e.add({blocks[b].monomials[c]}, val);
            out.push_back(std::move(e));
        }
    return out;
}

std::vector<std::vector<int>> jet_orders(int n, int upto) {
    std::vector<std::vector<int>> out;
    for (int d = 0; d <= upto; ++d)
        for_each_sym(n, d, [&](const FactorLabel& l) {
            std::vector<int> alpha(n, 0);
            for (uint16_t v : l) ++alpha[v];
            out.push_back(std::move(alpha));
        });
    return out;
}

}  // namespace

std::vector<El> osculating_quadrics(const JetVariety& x, int k, uint64_t seed, JetRange range,
                                    const EscalationOptions& opts) {
    int n = x.intrinsic_dim();
    // constraint pairs (beta, gamma)
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    if (range == JetRange::R3) {
        auto orders = jet_orders(n, k);
        for (size_t i = 0; i < orders.size(); ++i)
            for (size_t j = i; j < orders.size(); ++j) pairs.emplace_back(orders[i], orders[j]);
    } else {
        std::vector<int> zero(n, 0);
        for (const auto& gamma : jet_orders(n, 2 * k + 1)) pairs.emplace_back(zero, gamma);
    }

    auto points = std::make_shared<IndexedPool<RatVec>>(
        seed, [&x](Rng& r) { return x.random_chart_point(r); });

    int rows_per_point = static_cast<int>(pairs.size());
    auto coeff = [&x, points, pairs, rows_per_point](int64_t row,
                                                     const FactorLabel& mono) -> Rat {
        const RatVec& t = points->at(static_cast<size_t>(row / rows_per_point));
        const auto& [beta, gamma] = pairs[static_cast<size_t>(row % rows_per_point)];
        RatVec a = x.jet(t, beta), b = x.jet(t, gamma);
        int i = mono[0], j = mono[1];
        if (i == j) return Rat(2 * a[i] * b[i]);
        return Rat(a[i] * b[j] + a[j] * b[i]);
    };
    return solve_blocks(x, 2, rows_per_point, coeff, opts, "osculating quadrics");
}

std::vector<El> ideal_degree_slice_sampled(const JetVariety& x, int q, int k, int degree,
                                           uint64_t seed, const EscalationOptions& opts) {
    auto points = std::make_shared<IndexedPool<RatVec>>(seed, [&x, q, k](Rng& r) {
        return sample_secant_osculating_point(x, q, k, r);
    });
    auto coeff = [points](int64_t row, const FactorLabel& mono) -> Rat {
        const RatVec& z = points->at(static_cast<size_t>(row));
        Rat v(1);
        for (uint16_t var : mono) v *= z[var];
        return v;
    };
    return solve_blocks(x, degree, 1, coeff, opts, "sampled ideal slice");
}

std::vector<El> ideal_bottom_component(const JetVariety& x, int q, int k, IdealMethod method,
                                       uint64_t seed, const EscalationOptions& opts) {
    if (method == IdealMethod::Sampling)
        return ideal_degree_slice_sampled(x, q, k, q + 1, seed, opts);
    std::vector<El> quadrics = osculating_quadrics(x, k, seed, JetRange::R3, opts);
    if (q == 1) return quadrics;
    return prolong(quadrics, q - 1, /*use_weights=*/x.ambient().graded(), opts.parallel);
}

}  // namespace tsy
