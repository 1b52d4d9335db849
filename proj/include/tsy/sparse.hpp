#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "tsy/rational.hpp"

namespace tsy {

// Sparse vector: (index, value) pairs sorted by index, no zero values stored.
template <class S>
using SparseVecT = std::vector<std::pair<int64_t, S>>;

using SparseVec = SparseVecT<Rat>;

inline void sort_and_combine(SparseVec& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(v.size());
    for (auto& e : v) {
        if (!out.empty() && out.back().first == e.first)
            out.back().second += e.second;
        else
            out.push_back(std::move(e));
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    v = std::move(out);
}

// Row-major sparse matrix over the exact rationals. Rows and columns may be
// far larger than the stored entry count; zero entries are never stored.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int64_t rows, int64_t cols) : rows_(rows), cols_(cols), row_(rows) {}

    int64_t rows() const { return rows_; }
    int64_t cols() const { return cols_; }

    void set(int64_t r, int64_t c, Rat v) {
        if (v == 0) return;
        row_[r].emplace_back(c, std::move(v));
        dirty_ = true;
    }

    void add(int64_t r, int64_t c, const Rat& v) { set(r, c, v); }

    void finalize() {
        if (!dirty_) return;
        for (auto& r : row_) sort_and_combine(r);
        dirty_ = false;
    }

    const SparseVec& row(int64_t r) const { return row_[r]; }
    SparseVec& mutable_row(int64_t r) { return row_[r]; }

    int64_t entry_count() const {
        int64_t n = 0;
        for (const auto& r : row_) n += static_cast<int64_t>(r.size());
        return n;
    }

    Rat at(int64_t r, int64_t c) const {
        for (const auto& [j, v] : row_[r])
            if (j == c) return v;
        return Rat(0);
    }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows_);
        for (int64_t r = 0; r < rows_; ++r)
            for (const auto& [c, v] : row_[r]) t.set(c, r, v);
        t.finalize();
        return t;
    }

    // m * v with v dense of length cols().
    RatVec apply(const RatVec& v) const {
        RatVec out(rows_, Rat(0));
        for (int64_t r = 0; r < rows_; ++r)
            for (const auto& [c, val] : row_[r]) out[r] += val * v[c];
        return out;
    }

    static SparseMatrix identity(int64_t n) {
        SparseMatrix m(n, n);
        for (int64_t i = 0; i < n; ++i) m.set(i, i, Rat(1));
        m.finalize();
        return m;
    }

    static SparseMatrix from_dense(const std::vector<RatVec>& rows) {
        int64_t nc = rows.empty() ? 0 : static_cast<int64_t>(rows[0].size());
        SparseMatrix m(static_cast<int64_t>(rows.size()), nc);
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
        m.finalize();
        return m;
    }

    static SparseMatrix from_columns(const std::vector<RatVec>& cols, int64_t ambient) {
        SparseMatrix m(ambient, static_cast<int64_t>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c)
            for (int64_t r = 0; r < ambient; ++r) m.set(r, c, cols[c][r]);
        m.finalize();
        return m;
    }

private:
    int64_t rows_ = 0, cols_ = 0;
    std::vector<SparseVec> row_;
    bool dirty_ = false;
};

}  // namespace tsy
