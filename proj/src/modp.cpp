#include "tsy/modp.hpp"

#include <omp.h>

namespace tsy {

namespace {

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t m) {
    unsigned __int128 acc = 1, base = b % m;
    while (e) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<uint64_t>(acc);
}

uint64_t inv_mod(uint64_t a, uint64_t p) { return pow_mod(a, p - 2, p); }

using PRow = std::vector<std::pair<int64_t, uint64_t>>;

// r <- r - f * piv (mod p)
void eliminate_modp(PRow& r, uint64_t f, const PRow& piv, uint64_t p) {
    PRow out;
    out.reserve(r.size() + piv.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < piv.size()) {
        if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || piv[j].first < r[i].first) {
            uint64_t v = p - static_cast<uint64_t>(
                                 (unsigned __int128)f * piv[j].second % p);
            if (v == p) v = 0;
            if (v) out.emplace_back(piv[j].first, v);
            ++j;
        } else {
            uint64_t sub = static_cast<uint64_t>((unsigned __int128)f * piv[j].second % p);
            uint64_t v = (r[i].second + p - sub) % p;
            if (v) out.emplace_back(r[i].first, v);
            ++i;
            ++j;
        }
    }
    r = std::move(out);
}

int64_t rank_modp_impl(const SparseMatrix& m, uint64_t p, bool parallel) {
    std::vector<PRow> rows;
    rows.reserve(m.rows());
    for (int64_t r = 0; r < m.rows(); ++r) {
        PRow pr;
        for (const auto& [c, v] : m.row(r)) {
            uint64_t x = modp_reduce(v, p);
            if (x) pr.emplace_back(c, x);
        }
        std::sort(pr.begin(), pr.end());
        if (!pr.empty()) rows.push_back(std::move(pr));
    }

    int64_t rk = 0;
    while (!rows.empty()) {
        int64_t col = INT64_MAX;
        for (const auto& r : rows) col = std::min(col, r.front().first);
        size_t best = SIZE_MAX;
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].front().first == col &&
                (best == SIZE_MAX || rows[i].size() < rows[best].size()))
                best = i;
        PRow piv = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        uint64_t inv = inv_mod(piv.front().second, p);
        ++rk;

        std::vector<size_t> affected;
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].front().first == col) affected.push_back(i);

        // Row updates are independent; fan out only when the batch is large
        // enough to amortize the parallel region.
        int64_t work = static_cast<int64_t>(affected.size()) *
                       static_cast<int64_t>(piv.size());
        if (parallel && work > 16384) {
#pragma omp parallel for schedule(static)
            for (size_t t = 0; t < affected.size(); ++t) {
                PRow& r = rows[affected[t]];
                uint64_t f =
                    static_cast<uint64_t>((unsigned __int128)r.front().second * inv % p);
                eliminate_modp(r, f, piv, p);
            }
        } else {
            for (size_t t = 0; t < affected.size(); ++t) {
                PRow& r = rows[affected[t]];
                uint64_t f =
                    static_cast<uint64_t>((unsigned __int128)r.front().second * inv % p);
                eliminate_modp(r, f, piv, p);
            }
        }
        std::erase_if(rows, [](const PRow& r) { return r.empty(); });
    }
    return rk;
}

}  // namespace

uint64_t modp_reduce(const Rat& v, uint64_t p) {
    Int den = v.get_den();
    uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
    if (d == 0) throw DenominatorDivisibleByP(p);
    Int num = v.get_num();
    uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
    return static_cast<uint64_t>((unsigned __int128)n * inv_mod(d, p) % p);
}

int64_t rank_modp(const SparseMatrix& m, uint64_t p) {
    return rank_modp_impl(m, p, true);
}

int64_t rank_modp_serial(const SparseMatrix& m, uint64_t p) {
    return rank_modp_impl(m, p, false);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = static_cast<uint64_t>((unsigned __int128)x * x % n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t random_prime31(Rng& rng) {
    for (;;) {
        uint64_t c = (1ull << 30) + rng.below(1ull << 30);
        c |= 1;
        if (is_prime_u64(c)) return c;
    }
}

}  // namespace tsy
