#include "tsy/koszul.hpp"

namespace tsy {

namespace {

std::optional<WeightKey> element_weight(const El& e) {
    std::optional<WeightKey> w;
    for (const auto& [l, v] : e.terms()) {
        WeightKey lw = label_weight(e.piece(), l);
        if (lw.empty()) return std::nullopt;
        if (!w) {
            w = lw;
        } else if (*w != lw) {
            return std::nullopt;
        }
    }
    return w;
}

// Columns of the differential Λ^p V ⊗ I_j -> Λ^{p-1} V ⊗ I_{j+1}, rows keyed
// by (rank of the reduced wedge label, coordinate in the degree-(j+1) basis).
ColumnProblem koszul_columns(const GradedIdealSlice& ideal, int p, int j) {
    const Space& v = ideal.ambient();
    const auto& basis = ideal.basis(j);

    // weight keys usable only if every basis element is homogeneous
    std::vector<WeightKey> fw(basis.size());
    bool graded = v.graded();
    for (size_t i = 0; i < basis.size() && graded; ++i) {
        auto w = element_weight(basis[i]);
        if (!w)
            graded = false;
        else
            fw[i] = *w;
    }

    // products x_a * f_i in degree-(j+1) coordinates, shared across columns
    std::vector<std::vector<SparseVec>> prod(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
        prod[i].resize(v.dim);
        for (uint16_t a = 0; a < static_cast<uint16_t>(v.dim); ++a)
            prod[i][a] = ideal.project(j + 1, multiply_variable(basis[i], a));
    }

    int64_t njp1 = ideal.provided(j + 1) ? static_cast<int64_t>(ideal.basis(j + 1).size()) : 0;
    int64_t nb = static_cast<int64_t>(basis.size());

    ColumnProblem prob;
    int64_t ext_count = ext_dim(v.dim, p);
    prob.cols.reserve(ext_count * nb);
    if (graded) prob.weights.reserve(ext_count * nb);

    // Columns drop the overall 1/p coproduct normalization; ranks and
    // kernels are scale-free.
    Piece wedge{{Factor{v, p, Kind::Ext}}};
    for (int64_t ar = 0; ar < ext_count; ++ar) {
        FactorLabel A = ext_unrank(v.dim, p, ar);
        WeightKey aw = graded ? label_weight(wedge, {A}) : WeightKey{};
        for (int64_t i = 0; i < nb; ++i) {
            SparseVec col;
            for (size_t pos = 0; pos < A.size(); ++pos) {
                // sign of contracting everything but A[pos], increasing order
                int sign = ((A.size() - 1 - pos) % 2 == 0) ? 1 : -1;
                FactorLabel rest;
                rest.reserve(A.size() - 1);
                for (size_t t = 0; t < A.size(); ++t)
                    if (t != pos) rest.push_back(A[t]);
                int64_t rrank = ext_rank(v.dim, rest);
                for (const auto& [ci, val] : prod[i][A[pos]])
                    col.emplace_back(rrank * njp1 + ci, sign * val);
            }
            sort_and_combine(col);
            prob.cols.push_back(std::move(col));
            if (graded) {
                WeightKey key = aw;
                for (size_t t = 0; t < key.size(); ++t) key[t] += fw[i][t];
                prob.weights.push_back(std::move(key));
            }
        }
    }
    return prob;
}

}  // namespace

ColumnProblem koszul_differential_columns(const GradedIdealSlice& ideal, int p, int j) {
    return koszul_columns(ideal, p, j);
}

int64_t koszul_cohomology_dim(const GradedIdealSlice& ideal, const KoszulSpot& spot,
                              bool parallel, uint64_t modp) {
    if (spot.ambient != Kind::Ext)
        throw std::invalid_argument("only exterior-ambient Koszul spots are computed here");
    int p = spot.p, j = spot.j;
    if (p < 0 || j < 1) throw std::invalid_argument("bad Koszul spot");

    int64_t dim_j = ideal.provided(j) ? ideal.dim(j) : (j < ideal.min_provided() ? 0 : -1);
    if (dim_j < 0) throw MissingDegree(j);
    if (dim_j == 0) return 0;

    // kernel of the outgoing differential
    SolveOptions opt{.use_blocks = true, .parallel = parallel, .modp = modp};
    int64_t kernel_dim;
    if (p == 0) {
        kernel_dim = dim_j;  // the outgoing map lands in Λ^{-1} = 0
    } else {
        ColumnProblem out = koszul_columns(ideal, p, j);
        kernel_dim = static_cast<int64_t>(out.cols.size()) - rank_blocked(out, opt);
    }

    // image of the incoming differential
    int64_t image_dim = 0;
    int64_t dim_prev = ideal.provided(j - 1) ? ideal.dim(j - 1)
                                             : (j - 1 < ideal.min_provided() ? 0 : -1);
    if (dim_prev < 0) throw MissingDegree(j - 1);
    if (dim_prev > 0) {
        ColumnProblem in = koszul_columns(ideal, p + 1, j - 1);
        image_dim = rank_blocked(in, opt);
    }
    return kernel_dim - image_dim;
}

}  // namespace tsy
