#include "tsy/rref.hpp"

#include <cassert>
#include <map>

namespace tsy {

namespace {

// Working row: primitive integer entries, sorted by column.
using IRow = std::vector<std::pair<int64_t, Int>>;

IRow to_integer_row(const SparseVec& r) {
    Int lcm = 1;
    for (const auto& [c, v] : r)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    IRow out;
    out.reserve(r.size());
    Int gcd = 0;
    for (const auto& [c, v] : r) {
        Int x = Int(v * lcm);
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_mpz_t());
        out.emplace_back(c, std::move(x));
    }
    if (gcd > 1)
        for (auto& [c, x] : out) x /= gcd;
    return out;
}

void strip_content(IRow& r) {
    Int gcd = 0;
    for (const auto& [c, x] : r) {
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_mpz_t());
        if (gcd == 1) return;
    }
    if (gcd > 1)
        for (auto& [c, x] : r) x /= gcd;
}

// r <- pa*r - ra*p, combined on sorted columns, then made primitive again.
void eliminate(IRow& r, const Int& ra, const IRow& p, const Int& pa) {
    IRow out;
    out.reserve(r.size() + p.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, pa * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -ra * p[j].second);
            ++j;
        } else {
            Int v = pa * r[i].second - ra * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    strip_content(out);
    r = std::move(out);
}

}  // namespace

RrefResult rref(const SparseMatrix& m) {
    SparseMatrix mm = m;
    mm.finalize();
    std::vector<IRow> rows;
    rows.reserve(mm.rows());
    for (int64_t r = 0; r < mm.rows(); ++r)
        if (!mm.row(r).empty()) rows.push_back(to_integer_row(mm.row(r)));

    std::vector<IRow> pivot_rows;
    std::vector<int64_t> pivot_cols;

    while (!rows.empty()) {
        int64_t col = INT64_MAX;
        for (const auto& r : rows) col = std::min(col, r.front().first);
        // candidates lead at `col`; pick sparsest, then smallest |lead|
        size_t best = SIZE_MAX;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].front().first != col) continue;
            if (best == SIZE_MAX) { best = i; continue; }
            if (rows[i].size() < rows[best].size() ||
                (rows[i].size() == rows[best].size() &&
                 mpz_cmpabs(rows[i].front().second.get_mpz_t(),
                            rows[best].front().second.get_mpz_t()) < 0))
                best = i;
        }
        IRow piv = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        Int pa = piv.front().second;
        std::vector<IRow> next;
        next.reserve(rows.size());
        for (auto& r : rows) {
            if (r.front().first == col) {
                eliminate(r, r.front().second, piv, pa);
                if (!r.empty()) next.push_back(std::move(r));
            } else {
                next.push_back(std::move(r));
            }
        }
        rows = std::move(next);
        pivot_rows.push_back(std::move(piv));
        pivot_cols.push_back(col);
    }

    // Back-substitution to reach the reduced form.
    std::map<int64_t, size_t> col_to_row;
    for (size_t i = 0; i < pivot_cols.size(); ++i) col_to_row[pivot_cols[i]] = i;
    for (size_t i = pivot_rows.size(); i-- > 0;) {
        auto& r = pivot_rows[i];
        bool again = true;
        while (again) {
            again = false;
            for (const auto& [c, v] : r) {
                if (c == pivot_cols[i]) continue;
                auto it = col_to_row.find(c);
                if (it != col_to_row.end()) {
                    eliminate(r, v, pivot_rows[it->second],
                              pivot_rows[it->second].front().second);
                    again = true;
                    break;
                }
            }
        }
    }

    // Order rows by pivot column and normalize pivots to 1.
    std::vector<size_t> order(pivot_cols.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivot_cols[a] < pivot_cols[b]; });

    RrefResult res;
    res.reduced = SparseMatrix(static_cast<int64_t>(order.size()), mm.cols());
    for (size_t k = 0; k < order.size(); ++k) {
        const auto& r = pivot_rows[order[k]];
        Rat lead(r.front().second);
        for (const auto& [c, v] : r) res.reduced.set(k, c, Rat(v) / lead);
        res.pivots.push_back(pivot_cols[order[k]]);
    }
    res.reduced.finalize();
    return res;
}

int64_t rank(const SparseMatrix& m) { return rref(m).rank(); }

std::vector<RatVec> kernel_basis(const SparseMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int64_t p : rr.pivots) is_pivot[p] = true;

    std::vector<RatVec> basis;
    for (int64_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec v(m.cols(), Rat(0));
        v[f] = 1;
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.reduced.at(static_cast<int64_t>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RatVec> intersect_subspaces(const std::vector<RatVec>& a,
                                        const std::vector<RatVec>& b) {
    if (a.empty() || b.empty()) return {};
    int64_t dim = static_cast<int64_t>(a[0].size());
    SparseMatrix m(dim, static_cast<int64_t>(a.size() + b.size()));
    for (size_t j = 0; j < a.size(); ++j)
        for (int64_t i = 0; i < dim; ++i) m.set(i, static_cast<int64_t>(j), a[j][i]);
    for (size_t j = 0; j < b.size(); ++j)
        for (int64_t i = 0; i < dim; ++i)
            m.set(i, static_cast<int64_t>(a.size() + j), -b[j][i]);
    m.finalize();

    std::vector<RatVec> raw;
    for (const auto& k : kernel_basis(m)) {
        RatVec v(dim, Rat(0));
        for (size_t j = 0; j < a.size(); ++j)
            for (int64_t i = 0; i < dim; ++i) v[i] += k[j] * a[j][i];
        if (!is_zero(v)) raw.push_back(std::move(v));
    }
    if (raw.empty()) return {};
    // Deduplicate to an actual basis of the span.
    RrefResult rr = rref(SparseMatrix::from_dense(raw));
    std::vector<RatVec> out;
    for (int64_t r = 0; r < rr.rank(); ++r) {
        RatVec v(dim, Rat(0));
        for (const auto& [c, val] : rr.reduced.row(r)) v[c] = val;
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<RatVec> solve_columns(const SparseMatrix& a, const RatVec& rhs) {
    SparseMatrix aug(a.rows(), a.cols() + 1);
    for (int64_t r = 0; r < a.rows(); ++r)
        for (const auto& [c, v] : a.row(r)) aug.set(r, c, v);
    for (int64_t r = 0; r < a.rows(); ++r) aug.set(r, a.cols(), rhs[r]);
    aug.finalize();
    RrefResult rr = rref(aug);
    RatVec x(a.cols(), Rat(0));
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == a.cols()) return std::nullopt;  // inconsistent
        x[rr.pivots[i]] = rr.reduced.at(static_cast<int64_t>(i), a.cols());
    }
    return x;
}

RatVec reduce_against(const RrefResult& rr, RatVec v) {
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        const Rat& c = v[rr.pivots[i]];
        if (c == 0) continue;
        Rat scale = c;  // pivot entries are 1
        for (const auto& [col, val] : rr.reduced.row(static_cast<int64_t>(i)))
            v[col] -= scale * val;
    }
    return v;
}

SparseVec reduce_sparse(const RrefResult& rr, const SparseVec& v) {
    // RREF rows touch their own pivot plus free columns only, so one pass
    // over the pivots suffices.
    std::map<int64_t, Rat> acc;
    for (const auto& [c, val] : v) acc[c] += val;
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        auto it = acc.find(rr.pivots[i]);
        if (it == acc.end() || it->second == 0) continue;
        Rat scale = it->second;
        for (const auto& [col, val] : rr.reduced.row(static_cast<int64_t>(i)))
            acc[col] -= scale * val;
    }
    SparseVec out;
    for (const auto& [c, val] : acc)
        if (val != 0) out.emplace_back(c, val);
    return out;
}

}  // namespace tsy
