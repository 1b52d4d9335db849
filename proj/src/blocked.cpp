#include "tsy/blocked.hpp"

#include <map>

#include "tsy/modp.hpp"
#include "tsy/rref.hpp"

namespace tsy {

namespace {

std::vector<std::vector<int64_t>> column_groups(const ColumnProblem& p,
                                                const SolveOptions& opt) {
    std::vector<std::vector<int64_t>> groups;
    if (!opt.use_blocks || p.weights.empty()) {
        groups.emplace_back();
        groups.back().resize(p.cols.size());
        for (size_t i = 0; i < p.cols.size(); ++i) groups.back()[i] = i;
        return groups;
    }
    std::map<WeightKey, std::vector<int64_t>> by_weight;
    for (size_t i = 0; i < p.cols.size(); ++i) by_weight[p.weights[i]].push_back(i);
    groups.reserve(by_weight.size());
    for (auto& [w, g] : by_weight) groups.push_back(std::move(g));
    return groups;
}

// Matrix of one block, rows renumbered densely in row-key order.
SparseMatrix block_matrix(const ColumnProblem& p, const std::vector<int64_t>& group) {
    std::map<int64_t, int64_t> row_index;
    for (int64_t c : group)
        for (const auto& [rk, v] : p.cols[c]) row_index.emplace(rk, 0);
    int64_t n = 0;
    for (auto& [rk, idx] : row_index) idx = n++;
    SparseMatrix m(n, static_cast<int64_t>(group.size()));
    for (size_t j = 0; j < group.size(); ++j)
        for (const auto& [rk, v] : p.cols[group[j]])
            m.set(row_index[rk], static_cast<int64_t>(j), v);
    m.finalize();
    return m;
}

}  // namespace

std::vector<SparseVec> kernel_blocked(const ColumnProblem& p, const SolveOptions& opt) {
    auto groups = column_groups(p, opt);
    std::vector<std::vector<SparseVec>> per_group(groups.size());

#pragma omp parallel for schedule(dynamic) if (opt.parallel)
    for (size_t g = 0; g < groups.size(); ++g) {
        SparseMatrix m = block_matrix(p, groups[g]);
        std::vector<SparseVec> local;
        for (const auto& k : kernel_basis(m)) {
            SparseVec v;
            for (size_t j = 0; j < groups[g].size(); ++j)
                if (k[j] != 0) v.emplace_back(groups[g][j], k[j]);
            local.push_back(std::move(v));
        }
        per_group[g] = std::move(local);
    }

    std::vector<SparseVec> out;
    for (auto& g : per_group)
        for (auto& v : g) out.push_back(std::move(v));
    return out;
}

int64_t rank_blocked(const ColumnProblem& p, const SolveOptions& opt) {
    auto groups = column_groups(p, opt);
    std::vector<int64_t> per_group(groups.size(), 0);

#pragma omp parallel for schedule(dynamic) if (opt.parallel)
    for (size_t g = 0; g < groups.size(); ++g) {
        SparseMatrix m = block_matrix(p, groups[g]);
        per_group[g] = opt.modp ? rank_modp(m, opt.modp) : rank(m);
    }

    int64_t total = 0;
    for (int64_t r : per_group) total += r;
    return total;
}

}  // namespace tsy
