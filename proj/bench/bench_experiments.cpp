// Benchmark: serial reference path (jobs = 1) vs the OpenMP path for the
// experiment drivers, verifying both produce identical CSV output.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "viz/experiments.hpp"

using namespace viz;

namespace {

double time_seconds(const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int hw_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int main() {
    const int par = hw_threads() > 1 ? hw_threads() : 4;
    std::printf("benchmark: serial reference vs OpenMP (%d threads)\n\n", par);

    {
        ExperimentConfig cfg;
        cfg.n = 200;
        cfg.p = 0.5;
        cfg.epsilon = 0.5;
        cfg.trials = 400;
        cfg.seed = kDefaultSeed;
        std::string serial_csv, parallel_csv;
        cfg.jobs = 1;
        const double ts = time_seconds([&] { serial_csv = dryer_csv(dryer_probability(cfg)); });
        cfg.jobs = par;
        const double tp = time_seconds([&] { parallel_csv = dryer_csv(dryer_probability(cfg)); });
        std::printf("dryer     n=%d trials=%d   serial %.3fs   parallel %.3fs   speedup %.2fx   identical=%s\n",
                    cfg.n, cfg.trials, ts, tp, ts / tp, serial_csv == parallel_csv ? "yes" : "NO");
    }

    {
        ExperimentConfig cfg;
        cfg.n_lo = 4;
        cfg.n_hi = 14;
        cfg.p = 0.5;
        cfg.trials = 120;
        cfg.seed = kDefaultSeed;
        std::string serial_csv, parallel_csv;
        cfg.jobs = 1;
        const double ts = time_seconds([&] { serial_csv = corollary_csv(corollary_sweep(cfg)); });
        cfg.jobs = par;
        const double tp = time_seconds([&] { parallel_csv = corollary_csv(corollary_sweep(cfg)); });
        std::printf("sweep     trials=%d          serial %.3fs   parallel %.3fs   speedup %.2fx   identical=%s\n",
                    cfg.trials, ts, tp, ts / tp, serial_csv == parallel_csv ? "yes" : "NO");
    }

    {
        const auto corpus = all_labeled_graphs_up_to(4);
        std::string serial_csv, parallel_csv;
        const double ts =
            time_seconds([&] { serial_csv = exhaustive_csv(exhaustive_pairs(corpus, 1).rows); });
        const double tp =
            time_seconds([&] { parallel_csv = exhaustive_csv(exhaustive_pairs(corpus, par).rows); });
        std::printf("exhaustive corpus=%zu         serial %.3fs   parallel %.3fs   speedup %.2fx   identical=%s\n",
                    corpus.size(), ts, tp, ts / tp, serial_csv == parallel_csv ? "yes" : "NO");
    }

    return 0;
}
