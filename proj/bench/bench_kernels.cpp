// Benchmarks the parallel kernels against their serial references on the
// kind of matrices the library actually produces:
//   - the weight-blocked exact rank engine: OpenMP over blocks, the same
//     engine single-threaded, and the unblocked single-matrix elimination
//   - mod-p elimination with parallel row updates vs the serial loop
// Workload: Koszul differentials of the tangent ideal of the four-factor
// Segre product with dimensions 3,3,3,2.

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "tsy/ideal.hpp"
#include "tsy/koszul.hpp"
#include "tsy/modp.hpp"

using namespace tsy;
using Clock = std::chrono::steady_clock;

namespace {

double time_once(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_blocked_kernel() {
    std::printf("building the tangent ideal slice of segre 3x3x3x2 ...\n");
    JetVariety y = segre_variety({3, 3, 3, 2});
    auto quadrics = ideal_bottom_component(y, 1, 1, IdealMethod::Jets, 11);
    auto cubics = ideal_degree_slice_sampled(y, 1, 1, 3, 12);
    std::map<int, std::vector<El>> degs;
    degs[2] = std::move(quadrics);
    degs[3] = std::move(cubics);
    GradedIdealSlice slice(y.ambient(), std::move(degs), Provenance::Sampled);

    for (int p : {1, 2}) {
        ColumnProblem prob = koszul_differential_columns(slice, p, 2);
        int64_t nnz = 0;
        for (const auto& c : prob.cols) nnz += static_cast<int64_t>(c.size());
        std::printf("differential at p=%d: %zu columns, %lld nonzeros\n", p,
                    prob.cols.size(), static_cast<long long>(nnz));

        int64_t r1 = 0, r2 = 0;
        double t_par = time_once(
            [&] { r1 = rank_blocked(prob, {.use_blocks = true, .parallel = true}); });
        double t_ser = time_once(
            [&] { r2 = rank_blocked(prob, {.use_blocks = true, .parallel = false}); });
        std::printf("  blocked rank: parallel %.2fs, serial %.2fs (ranks %lld/%lld)\n", t_par,
                    t_ser, static_cast<long long>(r1), static_cast<long long>(r2));
        if (p == 1) {
            int64_t r3 = 0;
            double t_ref = time_once(
                [&] { r3 = rank_blocked(prob, {.use_blocks = false, .parallel = false}); });
            std::printf("  single-block reference: %.2fs (rank %lld)\n", t_ref,
                        static_cast<long long>(r3));
        }
    }
}

void bench_modp() {
    Rng rng(7);
    SparseMatrix m(1200, 1400);
    for (int64_t r = 0; r < m.rows(); ++r)
        for (int64_t c = 0; c < m.cols(); ++c)
            if (rng.below(100) < 20) m.set(r, c, rat_of(rng.range(-20, 20)));
    m.finalize();
    uint64_t p = 2147483647ull;
    int64_t r_par = 0, r_ser = 0;
    double t_par = time_once([&] { r_par = rank_modp(m, p); });
    double t_ser = time_once([&] { r_ser = rank_modp_serial(m, p); });
    std::printf("mod-p elimination (1200x1400, 20%%): parallel %.2fs, serial %.2fs, "
                "rank %lld/%lld\n",
                t_par, t_ser, static_cast<long long>(r_par), static_cast<long long>(r_ser));
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    bench_blocked_kernel();
    bench_modp();
    return 0;
}
