#include "tsy/space.hpp"

#include <cassert>
#include <stdexcept>

namespace tsy {

Space make_space(std::string name, int dim) { return Space{std::move(name), dim, {}}; }

Space standard_graded_space(std::string name, int dim) {
    // One-hot keys: weights of products of basis vectors add up faithfully.
    std::vector<WeightKey> w(dim);
    for (int i = 0; i < dim; ++i) {
        w[i].assign(dim, 0);
        w[i][i] = 1;
    }
    return Space{std::move(name), dim, std::move(w)};
}

Space make_graded_space(std::string name, int dim, std::vector<WeightKey> weights) {
    if (!weights.empty() && static_cast<int>(weights.size()) != dim)
        throw std::invalid_argument("weights size mismatch");
    return Space{std::move(name), dim, std::move(weights)};
}

Space tensor_space(const std::vector<Space>& factors) {
    std::string name;
    int64_t dim = 1;
    bool graded = !factors.empty();
    size_t wlen = 0;
    for (const auto& f : factors) {
        if (!name.empty()) name += "*";
        name += f.name;
        dim *= f.dim;
        graded = graded && f.graded();
        wlen += f.weights.empty() ? 0 : f.weights[0].size();
    }
    Space out{std::move(name), static_cast<int>(dim), {}};
    if (graded) {
        out.weights.assign(dim, WeightKey());
        std::vector<int> idx(factors.size(), 0);
        for (int64_t label = 0; label < dim; ++label) {
            WeightKey w;
            w.reserve(wlen);
            int64_t rest = label;
            for (size_t f = factors.size(); f-- > 0;) {
                idx[f] = static_cast<int>(rest % factors[f].dim);
                rest /= factors[f].dim;
            }
            for (size_t f = 0; f < factors.size(); ++f) {
                const WeightKey& fw = factors[f].weights[idx[f]];
                w.insert(w.end(), fw.begin(), fw.end());
            }
            out.weights[label] = std::move(w);
        }
    }
    return out;
}

std::vector<int> tensor_label_split(const std::vector<int>& dims, int64_t label) {
    std::vector<int> out(dims.size());
    for (size_t f = dims.size(); f-- > 0;) {
        out[f] = static_cast<int>(label % dims[f]);
        label /= dims[f];
    }
    return out;
}

int64_t binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    int64_t r = 1;
    for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int64_t sym_dim(int n, int k) { return binomial(n + k - 1, k); }
int64_t ext_dim(int n, int k) { return binomial(n, k); }

int64_t sym_rank(const FactorLabel& l) {
    int64_t r = 0;
    for (size_t i = 0; i < l.size(); ++i)
        r += binomial(l[i] + static_cast<int64_t>(i), static_cast<int64_t>(i) + 1);
    return r;
}

int64_t ext_rank(int n, const FactorLabel& l) {
    int64_t r = 0;
    int prev = -1;
    int64_t k = static_cast<int64_t>(l.size());
    for (size_t i = 0; i < l.size(); ++i) {
        for (int v = prev + 1; v < l[i]; ++v)
            r += binomial(n - 1 - v, k - 1 - static_cast<int64_t>(i));
        prev = l[i];
    }
    return r;
}

FactorLabel sym_unrank(int n, int k, int64_t r) {
    FactorLabel l(k);
    for (int i = k - 1; i >= 0; --i) {
        int m = 0;
        while (m + 1 < n && binomial(m + 1 + i, i + 1) <= r) ++m;
        l[i] = static_cast<uint16_t>(m);
        r -= binomial(m + i, i + 1);
    }
    assert(r == 0);
    return l;
}

FactorLabel ext_unrank(int n, int k, int64_t r) {
    FactorLabel l(k);
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        int v = prev + 1;
        for (;;) {
            int64_t c = binomial(n - 1 - v, k - 1 - i);
            if (r < c) break;
            r -= c;
            ++v;
        }
        l[i] = static_cast<uint16_t>(v);
        prev = v;
    }
    assert(r == 0);
    return l;
}

void for_each_sym(int n, int k, const std::function<void(const FactorLabel&)>& fn) {
    int64_t d = sym_dim(n, k);
    for (int64_t r = 0; r < d; ++r) fn(sym_unrank(n, k, r));
}

void for_each_ext(int n, int k, const std::function<void(const FactorLabel&)>& fn) {
    int64_t d = ext_dim(n, k);
    for (int64_t r = 0; r < d; ++r) fn(ext_unrank(n, k, r));
}

}  // namespace tsy
