#include "tsy/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsy {

Partition Partition::conjugate() const {
    Partition c;
    if (parts.empty()) return c;
    for (int j = 1; j <= parts[0]; ++j) {
        int count = 0;
        for (int p : parts) count += (p >= j);
        c.parts.push_back(count);
    }
    return c;
}

Partition hook_partition(int head, int legs) {
    Partition p;
    p.parts.push_back(head);
    for (int i = 0; i < legs; ++i) p.parts.push_back(1);
    return p;
}

bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] <= 0) return false;
        if (i > 0 && p.parts[i - 1] < p.parts[i]) return false;
    }
    return true;
}

int64_t schur_dim(const Partition& lambda, int n) {
    if (!is_valid_partition(lambda)) throw std::invalid_argument("not a partition");
    if (lambda.rows() > n) return 0;
    Partition conj = lambda.conjugate();
    Int num = 1, den = 1;
    for (int i = 1; i <= lambda.rows(); ++i) {
        for (int j = 1; j <= lambda.parts[i - 1]; ++j) {
            num *= n + j - i;
            den *= lambda.parts[i - 1] - j + conj.parts[j - 1] - i + 1;
        }
    }
    Int d = num / den;
    return d.get_si();
}

std::vector<Partition> partitions_of(int t) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(t, t == 0 ? 1 : t);
    return out;
}

std::vector<std::vector<int>> compositions_of(int p, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == len) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(0, p);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

CauchyLittlewoodDims cauchy_littlewood_dims(int t, int nU, int nW) {
    CauchyLittlewoodDims r;
    for (const auto& lambda : partitions_of(t)) {
        r.ext_total += schur_dim(lambda, nU) * schur_dim(lambda.conjugate(), nW);
        r.sym_total += schur_dim(lambda, nU) * schur_dim(lambda, nW);
    }
    return r;
}

int64_t bottom_syzygy_dims_segre(int p, int q, const std::vector<int>& dims) {
    if (dims.empty()) throw std::invalid_argument("need at least one factor");
    int64_t total = 0;
    for (const auto& comp : compositions_of(p, static_cast<int>(dims.size()))) {
        int64_t term = 1;
        for (size_t i = 0; i < dims.size() && term != 0; ++i)
            term *= schur_dim(hook_partition(comp[i] + 1, p + q - comp[i]), dims[i]);
        total += term;
    }
    return total;
}

Rat segre_vanishing_threshold(int q, const std::vector<int>& dims) {
    if (dims.size() % 2 != 0 || dims.size() < 2)
        throw std::invalid_argument("threshold applies to an even number of factors");
    long k2 = static_cast<long>(dims.size()) - 2;  // 2k
    long sum = 0;
    for (int d : dims) sum += d - q - 1;
    return rat_of(sum, k2 + 1);
}

int64_t lascoux_bottom_dims(int p, int q, int nU, int nW) {
    int64_t total = 0;
    for (int a = 0; a <= p; ++a) {
        int b = p - a;
        total += schur_dim(hook_partition(a + 1, b + q), nU) *
                 schur_dim(hook_partition(b + 1, a + q), nW);
    }
    return total;
}

}  // namespace tsy
