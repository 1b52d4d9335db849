#include "tsy/multilinear.hpp"

#include <algorithm>
#include <numeric>

namespace tsy {

namespace {

// Multiplicity runs of a weakly increasing label.
std::vector<std::pair<uint16_t, int>> runs(const FactorLabel& l) {
    std::vector<std::pair<uint16_t, int>> r;
    for (uint16_t v : l) {
        if (!r.empty() && r.back().first == v)
            ++r.back().second;
        else
            r.emplace_back(v, 1);
    }
    return r;
}

FactorLabel label_minus(const FactorLabel& l, const FactorLabel& sub) {
    FactorLabel out;
    out.reserve(l.size() - sub.size());
    size_t i = 0, j = 0;
    while (i < l.size()) {
        if (j < sub.size() && l[i] == sub[j]) {
            ++i;
            ++j;
        } else {
            out.push_back(l[i++]);
        }
    }
    return out;
}

// Single exterior contraction: position sign, or 0 if absent.
int contract_one(FactorLabel& s, uint16_t v) {
    auto it = std::find(s.begin(), s.end(), v);
    if (it == s.end()) return 0;
    int pos = static_cast<int>(it - s.begin());
    s.erase(it);
    return (pos % 2 == 0) ? 1 : -1;
}

// \partial_A u_S for subsets: contractions applied in increasing order of A.
// Returns the sign, or 0; s is reduced in place.
int contract_set(FactorLabel& s, const FactorLabel& a) {
    int sign = 1;
    for (uint16_t v : a) {
        int t = contract_one(s, v);
        if (t == 0) return 0;
        sign *= t;
    }
    return sign;
}

// All sub-multisets of size k with the multinomial coefficient C(beta, alpha).
void for_each_submultiset(const FactorLabel& beta, int k,
                          const std::function<void(const FactorLabel&, int64_t)>& fn) {
    auto rs = runs(beta);
    FactorLabel cur;
    std::function<void(size_t, int, int64_t)> rec = [&](size_t i, int left, int64_t coef) {
        if (left == 0) {
            FactorLabel a = cur;
            fn(a, coef);
            return;
        }
        if (i == rs.size()) return;
        int avail = rs[i].second;
        int rest = 0;
        for (size_t j = i + 1; j < rs.size(); ++j) rest += rs[j].second;
        for (int take = std::max(0, left - rest); take <= std::min(avail, left); ++take) {
            for (int t = 0; t < take; ++t) cur.push_back(rs[i].first);
            rec(i + 1, left - take, coef * binomial(avail, take));
            for (int t = 0; t < take; ++t) cur.pop_back();
        }
    };
    rec(0, k, 1);
}

// All k-subsets of a strictly increasing label.
void for_each_subset(const FactorLabel& s, int k,
                     const std::function<void(const FactorLabel&)>& fn) {
    int n = static_cast<int>(s.size());
    if (k > n) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        FactorLabel a(k);
        for (int i = 0; i < k; ++i) a[i] = s[idx[i]];
        fn(a);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

int64_t falling_product(const FactorLabel& beta, const FactorLabel& alpha) {
    // prod over values v of mult_beta(v)! / (mult_beta(v) - mult_alpha(v))!
    auto rb = runs(beta);
    auto ra = runs(alpha);
    int64_t c = 1;
    size_t j = 0;
    for (const auto& [v, m] : ra) {
        while (j < rb.size() && rb[j].first < v) ++j;
        if (j == rb.size() || rb[j].first != v || rb[j].second < m) return 0;
        for (int t = 0; t < m; ++t) c *= rb[j].second - t;
    }
    return c;
}

void permutations(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // iterate in lex order, tracking parity by inversion count
    for (;;) {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
        fn(perm, inv % 2 == 0 ? 1 : -1);
        if (!std::next_permutation(perm.begin(), perm.end())) break;
    }
}

// Sorts into a wedge label; 0 on repeats, otherwise +-1.
int wedge_sort(FactorLabel& l) {
    int sign = 1;
    for (size_t i = 1; i < l.size(); ++i)
        for (size_t j = i; j > 0 && l[j - 1] >= l[j]; --j) {
            if (l[j - 1] == l[j]) return 0;
            std::swap(l[j - 1], l[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

El coproduct(const El& f, size_t factor, int a, int b) {
    const Factor& fac = f.piece().factors.at(factor);
    if (fac.power != a + b || a < 0 || b < 0) throw SplitExceedsPower();

    Piece target;
    for (size_t i = 0; i < f.piece().factors.size(); ++i) {
        if (i == factor) {
            target.factors.push_back({fac.space, a, fac.kind});
            target.factors.push_back({fac.space, b, fac.kind});
        } else {
            target.factors.push_back(f.piece().factors[i]);
        }
    }

    El out(target);
    Rat norm = Rat(1) / Rat(binomial(a + b, a));
    for (const auto& [l, v] : f.terms()) {
        const FactorLabel& big = l[factor];
        auto emit = [&](const FactorLabel& first, const FactorLabel& second, const Rat& c) {
            MultiLabel nl;
            nl.reserve(l.size() + 1);
            for (size_t i = 0; i < l.size(); ++i) {
                if (i == factor) {
                    nl.push_back(first);
                    nl.push_back(second);
                } else {
                    nl.push_back(l[i]);
                }
            }
            out.add(nl, c);
        };
        if (fac.kind == Kind::Sym) {
            for_each_submultiset(big, a, [&](const FactorLabel& alpha, int64_t coef) {
                emit(alpha, label_minus(big, alpha), v * norm * Rat(coef));
            });
        } else {
            for_each_subset(big, a, [&](const FactorLabel& alpha) {
                FactorLabel rest = big;
                int sign = contract_set(rest, alpha);
                if (sign) emit(alpha, rest, v * norm * Rat(sign));
            });
        }
    }
    return out;
}

El derive(const El& f, size_t factor, const FactorLabel& d) {
    const Factor& fac = f.piece().factors.at(factor);
    int k = static_cast<int>(d.size());
    if (k > fac.power) throw SplitExceedsPower();

    Piece target = f.piece();
    target.factors[factor].power = fac.power - k;

    El out(target);
    for (const auto& [l, v] : f.terms()) {
        FactorLabel rest = l[factor];
        Rat c;
        if (fac.kind == Kind::Sym) {
            int64_t ff = falling_product(l[factor], d);
            if (ff == 0) continue;
            rest = label_minus(l[factor], d);
            c = v * Rat(ff);
        } else {
            int sign = contract_set(rest, d);
            if (sign == 0) continue;
            c = v * Rat(sign);
        }
        MultiLabel nl = l;
        nl[factor] = rest;
        out.add(nl, c);
    }
    return out;
}

El merge_factors(const El& f, size_t dst, size_t src) {
    const Factor& fd = f.piece().factors.at(dst);
    const Factor& fs = f.piece().factors.at(src);
    if (!(fd.space == fs.space) || fd.kind != fs.kind || dst == src) throw KindMismatch();

    Piece target;
    for (size_t i = 0; i < f.piece().factors.size(); ++i) {
        if (i == src) continue;
        Factor fac = f.piece().factors[i];
        if (i == dst) fac.power += fs.power;
        target.factors.push_back(fac);
    }

    El out(target);
    for (const auto& [l, v] : f.terms()) {
        FactorLabel merged = l[dst];
        merged.insert(merged.end(), l[src].begin(), l[src].end());
        Rat c = v;
        if (fd.kind == Kind::Ext) {
            int sign = wedge_sort(merged);
            if (sign == 0) continue;
            c *= sign;
        } else {
            std::sort(merged.begin(), merged.end());
        }
        MultiLabel nl;
        for (size_t i = 0; i < l.size(); ++i) {
            if (i == src) continue;
            nl.push_back(i == dst ? merged : l[i]);
        }
        out.add(nl, c);
    }
    return out;
}

El reinterpret_degree_one(const El& f, size_t factor, Kind k) {
    if (f.piece().factors.at(factor).power != 1) throw KindMismatch();
    Piece target = f.piece();
    target.factors[factor].kind = k;
    El out(target);
    for (const auto& [l, v] : f.terms()) out.add(l, v);
    return out;
}

El multiply_variable(const El& f, uint16_t var) {
    const Factor& fac = f.piece().factors.at(0);
    if (f.piece().factors.size() != 1 || fac.kind != Kind::Sym) throw KindMismatch();
    Piece target{{Factor{fac.space, fac.power + 1, Kind::Sym}}};
    El out(target);
    for (const auto& [l, v] : f.terms()) {
        FactorLabel m = l[0];
        m.push_back(var);
        std::sort(m.begin(), m.end());
        out.add({m}, v);
    }
    return out;
}

El tensor_product(const El& a, const El& b) {
    Piece target = a.piece();
    target.factors.insert(target.factors.end(), b.piece().factors.begin(),
                          b.piece().factors.end());
    El out(target);
    for (const auto& [la, va] : a.terms())
        for (const auto& [lb, vb] : b.terms()) {
            MultiLabel nl = la;
            nl.insert(nl.end(), lb.begin(), lb.end());
            out.add(nl, va * vb);
        }
    return out;
}

El koszul_delta(const El& f, size_t from, size_t to) {
    const Factor& ff = f.piece().factors.at(from);
    const Factor& ft = f.piece().factors.at(to);
    if (!(ff.space == ft.space) || ff.kind == ft.kind || from == to) throw KindMismatch();
    if (ff.power == 0) {
        // The target is the zero space; report the zero element in a piece of
        // the right overall degree so `== zero` checks stay uniform.
        Piece t;
        for (size_t i = 0; i < f.piece().factors.size(); ++i) {
            Factor fac = f.piece().factors[i];
            if (i == to) fac.power += 1;
            t.factors.push_back(fac);
        }
        return El(t);
    }

    El g = coproduct(f, from, ff.power - 1, 1);
    size_t leg = from + 1;
    size_t to2 = to > from ? to + 1 : to;
    g = reinterpret_degree_one(g, leg, ft.kind);
    return merge_factors(g, to2, leg);
}

El pair_factors(const El& f, size_t i, size_t j) {
    const Factor& fi = f.piece().factors.at(i);
    const Factor& fj = f.piece().factors.at(j);
    if (fi.power != fj.power || i == j) throw KindMismatch();
    int q1 = fi.power;

    Space prod = tensor_space({fi.space, fj.space});
    Kind out_kind;
    bool signed_sum = false;
    if (fi.kind == Kind::Ext && fj.kind == Kind::Ext) {
        out_kind = Kind::Sym;
        signed_sum = true;
    } else if (fi.kind == Kind::Sym && fj.kind == Kind::Sym) {
        out_kind = Kind::Sym;
    } else {
        out_kind = Kind::Ext;
    }

    size_t lo = std::min(i, j), hi = std::max(i, j);
    Piece target;
    for (size_t t = 0; t < f.piece().factors.size(); ++t) {
        if (t == hi) continue;
        if (t == lo)
            target.factors.push_back({prod, q1, out_kind});
        else
            target.factors.push_back(f.piece().factors[t]);
    }

    El out(target);
    int dj = fj.space.dim;
    // The permutation sum runs over the symmetric side when the kinds are
    // mixed (the exterior minor permutes the repeatable entries); for equal
    // kinds either side gives the same sum.
    bool permute_j = (fi.kind == Kind::Ext && fj.kind == Kind::Sym);
    for (const auto& [l, v] : f.terms()) {
        const FactorLabel& rows = l[i];
        const FactorLabel& cols = l[j];
        permutations(q1, [&](const std::vector<int>& perm, int sgn) {
            FactorLabel combined(q1);
            for (int r = 0; r < q1; ++r)
                combined[r] = permute_j
                                  ? static_cast<uint16_t>(rows[r] * dj + cols[perm[r]])
                                  : static_cast<uint16_t>(rows[perm[r]] * dj + cols[r]);
            Rat c = v;
            if (out_kind == Kind::Ext) {
                int s = wedge_sort(combined);
                if (s == 0) return;
                c *= s;
            } else {
                std::sort(combined.begin(), combined.end());
                if (signed_sum) c *= sgn;
            }
            MultiLabel nl;
            for (size_t t = 0; t < l.size(); ++t) {
                if (t == hi) continue;
                nl.push_back(t == lo ? combined : l[t]);
            }
            out.add(nl, c);
        });
    }
    return out;
}

El det_map(const El& f) {
    if (f.piece().factors.size() != 2 || f.piece().factors[0].kind != Kind::Ext ||
        f.piece().factors[1].kind != Kind::Ext)
        throw KindMismatch();
    return pair_factors(f, 0, 1);
}

El edet_map(const El& f) {
    if (f.piece().factors.size() != 2 || f.piece().factors[0].kind != Kind::Sym ||
        f.piece().factors[1].kind != Kind::Ext)
        throw KindMismatch();
    return pair_factors(f, 0, 1);
}

El wedge_embedding(const El& f) {
    const auto& factors = f.piece().factors;
    if (factors.empty()) throw KindMismatch();
    int q1 = factors[0].power;
    std::vector<Space> spaces;
    for (const auto& fac : factors) {
        if (fac.kind != Kind::Ext || fac.power != q1) throw KindMismatch();
        spaces.push_back(fac.space);
    }
    Space prod = tensor_space(spaces);
    Piece target{{Factor{prod, q1, Kind::Sym}}};

    size_t ell = factors.size();
    El out(target);
    for (const auto& [l, v] : f.terms()) {
        // sum over permutation tuples for factors 2..ell, first factor fixed
        std::vector<std::vector<int>> perms(ell);
        std::function<void(size_t, int)> rec = [&](size_t m, int sgn) {
            if (m == ell) {
                FactorLabel combined(q1);
                for (int r = 0; r < q1; ++r) {
                    int64_t label = l[0][r];
                    for (size_t t = 1; t < ell; ++t)
                        label = label * factors[t].space.dim + l[t][perms[t][r]];
                    combined[r] = static_cast<uint16_t>(label);
                }
                std::sort(combined.begin(), combined.end());
                MultiLabel nl{combined};
                out.add(nl, v * sgn);
                return;
            }
            permutations(q1, [&](const std::vector<int>& perm, int psgn) {
                perms[m] = perm;
                rec(m + 1, sgn * psgn);
            });
        };
        perms[0].resize(q1);
        std::iota(perms[0].begin(), perms[0].end(), 0);
        rec(1, 1);
    }
    return out;
}

std::vector<El> enumerate_basis(const Piece& p) {
    std::vector<El> out;
    int64_t d = p.dim();
    out.reserve(d);
    for (int64_t i = 0; i < d; ++i) out.push_back(basis_element(p, p.label_of(i)));
    return out;
}

SparseMatrix coordinate_matrix(const std::vector<El>& els) {
    if (els.empty()) return SparseMatrix(0, 0);
    SparseMatrix m(static_cast<int64_t>(els.size()), els[0].piece().dim());
    for (size_t r = 0; r < els.size(); ++r)
        for (const auto& [l, v] : els[r].terms())
            m.set(static_cast<int64_t>(r), els[r].piece().index_of(l), v);
    m.finalize();
    return m;
}

int64_t span_dim(const std::vector<El>& els) { return rank(coordinate_matrix(els)); }

std::vector<El> prolong(const std::vector<El>& B, int d, bool use_weights, bool parallel) {
    if (B.empty()) return {};
    const Piece small = B[0].piece();
    if (small.factors.size() != 1) throw KindMismatch();
    const Factor& fac = small.factors[0];
    Piece big{{Factor{fac.space, fac.power + d, fac.kind}}};

    RrefResult reducer = rref(coordinate_matrix(B));
    int64_t dim_small = small.dim();

    ColumnProblem prob;
    int64_t nbig = big.dim();
    prob.cols.resize(nbig);
    bool graded = use_weights && fac.space.graded();
    if (graded) prob.weights.resize(nbig);

    for (int64_t c = 0; c < nbig; ++c) {
        MultiLabel l = big.label_of(c);
        El e = coproduct(basis_element(big, l), 0, d, fac.power);
        // group the second leg per first-leg label, reduce mod span(B)
        std::map<FactorLabel, SparseVec> per_first;
        for (const auto& [tl, v] : e.terms())
            per_first[tl[0]].emplace_back(small.index_of({tl[1]}), v);
        SparseVec col;
        for (auto& [first, vec] : per_first) {
            sort_and_combine(vec);
            SparseVec residue = reduce_sparse(reducer, vec);
            int64_t a_rank = fac.kind == Kind::Sym ? sym_rank(first)
                                                   : ext_rank(fac.space.dim, first);
            for (const auto& [t, val] : residue)
                col.emplace_back(a_rank * dim_small + t, val);
        }
        sort_and_combine(col);
        prob.cols[c] = std::move(col);
        if (graded) prob.weights[c] = label_weight(big, l);
    }

    SolveOptions opt{.use_blocks = graded, .parallel = parallel};
    std::vector<El> out;
    for (const auto& k : kernel_blocked(prob, opt)) {
        El e(big);
        for (const auto& [idx, v] : k) e.add(big.label_of(idx), v);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace tsy
