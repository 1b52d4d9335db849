#include "tsy/jets.hpp"

#include "tsy/rref.hpp"

#include <algorithm>

namespace tsy {

Poly Poly::constant(int nvars, Rat c) {
    Poly p;
    if (c != 0) p.terms[std::vector<int>(nvars, 0)] = std::move(c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    Poly p;
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.terms[std::move(e)] = 1;
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = out.terms.try_emplace(std::move(e), ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    return out;
}

Poly Poly::derivative(int var) const {
    Poly out;
    for (const auto& [e, c] : terms) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        --d[var];
        out.terms[std::move(d)] = c * e[var];
    }
    return out;
}

Poly Poly::derivative_multi(const std::vector<int>& alpha) const {
    Poly p = *this;
    for (size_t v = 0; v < alpha.size(); ++v)
        for (int i = 0; i < alpha[v]; ++i) p = p.derivative(static_cast<int>(v));
    return p;
}

Rat Poly::eval(const RatVec& t) const {
    Rat total(0);
    for (const auto& [e, c] : terms) {
        Rat m = c;
        for (size_t v = 0; v < e.size(); ++v)
            for (int i = 0; i < e[v]; ++i) m *= t[v];
        total += m;
    }
    return total;
}

JetVariety::JetVariety(std::string kind, Space ambient, int n, std::vector<Poly> chart)
    : kind_(std::move(kind)), ambient_(std::move(ambient)), n_(n), chart_(std::move(chart)) {}

RatVec JetVariety::jet(const RatVec& t, const std::vector<int>& alpha) const {
    if (static_cast<int>(t.size()) != n_ || static_cast<int>(alpha.size()) != n_)
        throw ChartError("chart point/multi-index arity mismatch");
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->map.find({t, alpha});
        if (it != cache_->map.end()) return it->second;
    }
    RatVec out(ambient_.dim);
    for (int i = 0; i < ambient_.dim; ++i)
        out[i] = chart_[i].derivative_multi(alpha).eval(t);
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->map.emplace(std::make_pair(t, alpha), out);
    return out;
}

RatVec JetVariety::random_chart_point(Rng& rng, long bound) const {
    RatVec t(n_);
    for (auto& x : t) x = rng.rational(bound);
    return t;
}

JetVariety rational_normal_curve(int d) {
    std::vector<WeightKey> w(d + 1);
    for (int i = 0; i <= d; ++i) w[i] = {static_cast<int32_t>(i)};
    Space v = make_graded_space("x", d + 1, std::move(w));
    std::vector<Poly> chart;
    Poly cur = Poly::constant(1, Rat(1));
    Poly t = Poly::variable(1, 0);
    for (int i = 0; i <= d; ++i) {
        chart.push_back(cur);
        cur = cur * t;
    }
    return JetVariety("rnc", std::move(v), 1, std::move(chart));
}

namespace {

// Chart polynomials (1, s_1, ..., s_{m-1}) of one factor, in global variables
// starting at `offset`.
std::vector<Poly> factor_chart(int nvars, int offset, int m) {
    std::vector<Poly> c;
    c.push_back(Poly::constant(nvars, Rat(1)));
    for (int i = 1; i < m; ++i) c.push_back(Poly::variable(nvars, offset + i - 1));
    return c;
}

}  // namespace

JetVariety segre_variety(const std::vector<int>& dims) {
    int nvars = 0;
    for (int d : dims) nvars += d - 1;
    std::vector<Space> factors;
    std::vector<std::vector<Poly>> charts;
    int offset = 0;
    for (size_t f = 0; f < dims.size(); ++f) {
        factors.push_back(standard_graded_space("v" + std::to_string(f + 1), dims[f]));
        charts.push_back(factor_chart(nvars, offset, dims[f]));
        offset += dims[f] - 1;
    }
    Space ambient = tensor_space(factors);
    std::vector<Poly> chart(ambient.dim);
    std::vector<int> dd = dims;
    for (int64_t label = 0; label < ambient.dim; ++label) {
        auto idx = tensor_label_split(dd, label);
        Poly p = Poly::constant(nvars, Rat(1));
        for (size_t f = 0; f < dims.size(); ++f) p = p * charts[f][idx[f]];
        chart[label] = std::move(p);
    }
    return JetVariety("segre", std::move(ambient), nvars, std::move(chart));
}

JetVariety segre_veronese_variety(const std::vector<int>& dims, const std::vector<int>& degs) {
    if (dims.size() != degs.size()) throw ChartError("dims/degs length mismatch");
    int nvars = 0;
    for (int d : dims) nvars += d - 1;
    std::vector<Space> factors;
    std::vector<std::vector<Poly>> charts;  // per factor: monomial basis polys
    int offset = 0;
    for (size_t f = 0; f < dims.size(); ++f) {
        int m = dims[f], deg = degs[f];
        auto lin = factor_chart(nvars, offset, m);
        offset += m - 1;
        int64_t fdim = sym_dim(m, deg);
        std::vector<WeightKey> w(fdim);
        std::vector<Poly> fchart(fdim);
        for (int64_t r = 0; r < fdim; ++r) {
            FactorLabel lab = sym_unrank(m, deg, r);
            WeightKey expo(m, 0);
            Poly p = Poly::constant(nvars, Rat(1));
            for (uint16_t v : lab) {
                ++expo[v];
                p = p * lin[v];
            }
            w[r] = std::move(expo);
            fchart[r] = std::move(p);
        }
        factors.push_back(make_graded_space("s" + std::to_string(f + 1), static_cast<int>(fdim),
                                            std::move(w)));
        charts.push_back(std::move(fchart));
    }
    Space ambient = tensor_space(factors);
    std::vector<int> fdims;
    for (const auto& s : factors) fdims.push_back(s.dim);
    std::vector<Poly> chart(ambient.dim);
    for (int64_t label = 0; label < ambient.dim; ++label) {
        auto idx = tensor_label_split(fdims, label);
        Poly p = Poly::constant(nvars, Rat(1));
        for (size_t f = 0; f < fdims.size(); ++f) p = p * charts[f][idx[f]];
        chart[label] = std::move(p);
    }
    return JetVariety("segre_veronese", std::move(ambient), nvars, std::move(chart));
}

JetVariety pencil_product_surface(int a, int b) {
    return segre_veronese_variety({2, 2}, {a, b}).renamed("pencil_product");
}

OsculatingFrame osculating_frame(const JetVariety& x, const RatVec& t, int k) {
    OsculatingFrame fr;
    fr.point = t;
    fr.order = k;
    int n = x.intrinsic_dim();
    for (int d = 0; d <= k; ++d) {
        for_each_sym(n, d, [&](const FactorLabel& lab) {
            std::vector<int> alpha(n, 0);
            for (uint16_t v : lab) ++alpha[v];
            fr.alphas.push_back(alpha);
        });
    }
    for (const auto& alpha : fr.alphas) fr.vectors.push_back(x.jet(t, alpha));
    return fr;
}

RatVec sample_secant_osculating_point(const JetVariety& x, int q, int k, Rng& rng) {
    RatVec out(x.ambient().dim, Rat(0));
    for (int j = 0; j < q; ++j) {
        RatVec t = x.random_chart_point(rng);
        OsculatingFrame fr = osculating_frame(x, t, k);
        for (const auto& vec : fr.vectors) {
            Rat c = rng.rational(100);
            for (int i = 0; i < x.ambient().dim; ++i) out[i] += c * vec[i];
        }
    }
    make_primitive(out);
    return out;
}

int dim_estimate(const JetVariety& x, int q, int k, int trials, Rng& rng) {
    int best = -1;
    int n = x.intrinsic_dim();
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<RatVec> span;
        for (int j = 0; j < q; ++j) {
            RatVec t = x.random_chart_point(rng, 100);
            OsculatingFrame fr = osculating_frame(x, t, k);
            for (const auto& v : fr.vectors) span.push_back(v);
            RatVec coeff(fr.alphas.size());
            for (auto& c : coeff) c = rng.nonzero_rational(100);
            for (int i = 0; i < n; ++i) {
                RatVec dir(x.ambient().dim, Rat(0));
                for (size_t a = 0; a < fr.alphas.size(); ++a) {
                    std::vector<int> alpha = fr.alphas[a];
                    ++alpha[i];
                    RatVec jv = x.jet(t, alpha);
                    for (int c = 0; c < x.ambient().dim; ++c) dir[c] += coeff[a] * jv[c];
                }
                span.push_back(std::move(dir));
            }
        }
        SparseMatrix m = SparseMatrix::from_dense(span);
        best = std::max<int>(best, static_cast<int>(rank(m)));
    }
    return best - 1;
}

}  // namespace tsy
