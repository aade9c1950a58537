#include "viz/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "viz/blocks.hpp"
#include "viz/domination.hpp"
#include "viz/io.hpp"
#include "viz/product.hpp"
#include "viz/vizing_check.hpp"

namespace viz {

namespace {

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

double ln_q(double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("q = 1/(1-p) requires p in (0,1), got " + std::to_string(p));
    return -std::log1p(-p);
}

template <typename Fn>
void run_indexed(int count, int jobs, Fn&& body) {
#ifdef _OPENMP
    if (jobs > 1) {
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
#else
    (void)jobs;
#endif
    for (int i = 0; i < count; ++i) body(i);  // serial reference path
}

}  // namespace

int dryer_set_size(int n, double p, double epsilon) {
    if (n < 1) throw std::invalid_argument("dryer_set_size: n must be positive");
    if (epsilon < 0) throw std::invalid_argument("dryer_set_size: epsilon must be nonnegative");
    const double x = (1.0 + epsilon) * std::log(static_cast<double>(n)) / ln_q(p);
    // absorb float noise so exact integers stay exact (log2 256 must give 8)
    return static_cast<int>(std::ceil(x - 1e-9));
}

VertexSet sample_vertex_subset(Rng& rng, int n, int t) {
    if (t < 0 || t > n) throw std::invalid_argument("sample_vertex_subset: bad subset size");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    VertexSet out(n);
    for (int i = 0; i < t; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        out.set(pool[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::pair<double, double> wilson_interval(int successes, int trials) {
    const double z = 1.959963984540054;  // 95%
    const double nn = trials;
    const double phat = successes / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = phat + z2 / (2 * nn);
    const double spread = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn));
    return {(center - spread) / denom, (center + spread) / denom};
}

DryerRow dryer_probability(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("dryer: trials must be at least 1");
    const int t = dryer_set_size(cfg.n, cfg.p, cfg.epsilon);
    if (t > cfg.n)
        throw std::invalid_argument("dryer: set size t=" + std::to_string(t) + " exceeds n=" +
                                    std::to_string(cfg.n));

    std::vector<char> hit(static_cast<std::size_t>(cfg.trials), 0);
    run_indexed(cfg.trials, cfg.jobs, [&](int trial) {
        Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(trial));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < cfg.n; ++u)
            for (int v = u + 1; v < cfg.n; ++v)
                if (rng.bernoulli(cfg.p)) edges.emplace_back(u, v);
        const Graph g(cfg.n, edges);
        const VertexSet T = sample_vertex_subset(rng, cfg.n, t);
        hit[static_cast<std::size_t>(trial)] = g.is_dominating(T) ? 1 : 0;
    });

    DryerRow row;
    row.n = cfg.n;
    row.p = cfg.p;
    row.epsilon = cfg.epsilon;
    row.t = t;
    row.trials = cfg.trials;
    row.successes = static_cast<int>(std::count(hit.begin(), hit.end(), 1));
    row.phat = static_cast<double>(row.successes) / cfg.trials;
    std::tie(row.wilson_lo, row.wilson_hi) = wilson_interval(row.successes, cfg.trials);
    row.seed = cfg.seed;
    return row;
}

std::vector<CorollaryRow> corollary_sweep(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("sweep: trials must be at least 1");
    if (cfg.n_lo < 2 || cfg.n_hi < cfg.n_lo)
        throw std::invalid_argument("sweep: need 2 <= n_lo <= n_hi");
    if (cfg.n_hi > kSweepFactorCap)
        throw std::invalid_argument("sweep: n_hi exceeds the solver cap of " +
                                    std::to_string(kSweepFactorCap));
    const double lq = ln_q(cfg.p);

    std::vector<CorollaryRow> rows(static_cast<std::size_t>(cfg.trials));
    run_indexed(cfg.trials, cfg.jobs, [&](int trial) {
        Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(trial));
        CorollaryRow row;
        row.trial = trial;
        row.p = cfg.p;
        row.seed = cfg.seed;

        const int h_order =
            cfg.n_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.n_hi - cfg.n_lo + 1)));
        row.h_order = h_order;

        // order bound |G| <= q^(|H|/log_q|H|), evaluated in logs
        const double log_bound = static_cast<double>(h_order) / (std::log(static_cast<double>(h_order)) / lq) * lq;
        long g_hi = kSweepFactorCap;
        if (log_bound < std::log(static_cast<double>(kSweepFactorCap)) + 1e-12)
            g_hi = static_cast<long>(std::floor(std::exp(log_bound) + 1e-9));
        if (g_hi < h_order) {
            row.skipped = true;
            rows[static_cast<std::size_t>(trial)] = row;
            return;
        }
        const int g_order =
            h_order + static_cast<int>(rng.below(static_cast<std::uint64_t>(g_hi - h_order + 1)));
        row.g_order = g_order;

        const Graph h = erdos_renyi(h_order, cfg.p, rng.next_u64());
        const Graph g = erdos_renyi(g_order, cfg.p, rng.next_u64());
        row.gamma_h = gamma_exact(h).gamma;
        row.gamma_g = gamma_exact(g).gamma;
        row.condition_holds = check_theorem_condition(g, h, row.gamma_g, row.gamma_h);
        if (static_cast<long>(g_order) * h_order <= kSweepProductCap) {
            row.vizing_checked = true;
            const int gp = gamma_exact(cartesian_product(g, h).graph).gamma;
            row.vizing_holds = gp >= row.gamma_g * row.gamma_h;
        }
        rows[static_cast<std::size_t>(trial)] = row;
    });
    return rows;
}

std::map<int, std::pair<long, long>> corollary_bucket_fractions(const std::vector<CorollaryRow>& rows) {
    std::map<int, std::pair<long, long>> out;
    for (const auto& row : rows) {
        if (row.skipped) continue;
        auto& [holds, total] = out[row.h_order];
        holds += row.condition_holds ? 1 : 0;
        ++total;
    }
    return out;
}

std::vector<Graph> all_labeled_graphs_up_to(int max_n) {
    if (max_n < 1 || max_n > 5)
        throw std::invalid_argument("all_labeled_graphs_up_to: max_n must lie in 1..5");
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        const std::uint64_t total = 1ULL << pairs.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t b = 0; b < pairs.size(); ++b)
                if (mask & (1ULL << b)) edges.push_back(pairs[b]);
            out.emplace_back(n, edges);
        }
    }
    return out;
}

ExhaustiveResult exhaustive_pairs(const std::vector<Graph>& corpus, int jobs) {
    // precompute per-graph data once
    std::vector<std::string> ids(corpus.size());
    std::vector<int> gammas(corpus.size());
    run_indexed(static_cast<int>(corpus.size()), jobs, [&](int i) {
        ids[static_cast<std::size_t>(i)] = emit_graph6(corpus[static_cast<std::size_t>(i)]);
        gammas[static_cast<std::size_t>(i)] = gamma_exact(corpus[static_cast<std::size_t>(i)]).gamma;
    });

    // eligible ordered pairs, corpus order
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < static_cast<int>(corpus.size()); ++a)
        for (int b = 0; b < static_cast<int>(corpus.size()); ++b)
            if (static_cast<long>(corpus[static_cast<std::size_t>(a)].order()) *
                    corpus[static_cast<std::size_t>(b)].order() <=
                32)
                pairs.emplace_back(a, b);

    std::vector<ExhaustiveRow> rows(pairs.size());
    run_indexed(static_cast<int>(pairs.size()), jobs, [&](int idx) {
        const auto [a, b] = pairs[static_cast<std::size_t>(idx)];
        const Graph& g = corpus[static_cast<std::size_t>(a)];
        const Graph& h = corpus[static_cast<std::size_t>(b)];
        ExhaustiveRow row;
        row.g_id = ids[static_cast<std::size_t>(a)];
        row.h_id = ids[static_cast<std::size_t>(b)];
        row.gamma_g = gammas[static_cast<std::size_t>(a)];
        row.gamma_h = gammas[static_cast<std::size_t>(b)];
        const ProductGraph pg = cartesian_product(g, h);
        row.gamma_prod = gamma_exact(pg.graph).gamma;
        row.vizing = row.gamma_prod >= row.gamma_g * row.gamma_h;
        row.suen_tarr = 2 * row.gamma_prod >= row.gamma_g * row.gamma_h + std::min(row.gamma_g, row.gamma_h);
        row.condition = check_theorem_condition(g, h, row.gamma_g, row.gamma_h);
        if (row.condition) {
            const RepartitionTrace tr = run_repartitioning(g, h);
            row.engine_outcome = to_string(tr.outcome);
            VertexSet d(pg.graph.order());
            for (int v : tr.d_vertices) d.set(v);
            row.audit_ok = audit_trace(tr, pg, d).ok;
        } else {
            row.engine_outcome = "N/A";
        }
        rows[static_cast<std::size_t>(idx)] = std::move(row);
    });

    ExhaustiveResult res;
    res.rows = std::move(rows);
    res.summary.pairs = static_cast<long>(res.rows.size());
    for (const auto& row : res.rows) {
        if (!row.vizing) ++res.summary.vizing_violations;
        if (!row.suen_tarr) ++res.summary.suen_tarr_violations;
        if (row.condition) ++res.summary.condition_pairs;
        if (!row.audit_ok) ++res.summary.audit_failures;
        ++res.summary.outcome_counts[row.engine_outcome];
    }
    return res;
}

std::string dryer_csv(const DryerRow& row) {
    std::ostringstream out;
    out << "n,p,epsilon,t,trials,successes,phat,wilson_lo,wilson_hi,seed\n";
    out << row.n << ',' << fmt6(row.p) << ',' << fmt6(row.epsilon) << ',' << row.t << ',' << row.trials
        << ',' << row.successes << ',' << fmt6(row.phat) << ',' << fmt6(row.wilson_lo) << ','
        << fmt6(row.wilson_hi) << ',' << row.seed << '\n';
    return out.str();
}

std::string corollary_csv(const std::vector<CorollaryRow>& rows) {
    std::ostringstream out;
    out << "h_order,g_order,p,gamma_g,gamma_h,condition_holds,vizing_checked,vizing_holds,seed,trial\n";
    for (const auto& r : rows) {
        out << r.h_order << ',' << r.g_order << ',' << fmt6(r.p) << ',' << r.gamma_g << ',' << r.gamma_h
            << ',' << (r.condition_holds ? 1 : 0) << ',' << (r.vizing_checked ? 1 : 0) << ','
            << (r.vizing_holds ? 1 : 0) << ',' << r.seed << ',' << r.trial << '\n';
    }
    return out.str();
}

std::string exhaustive_csv(const std::vector<ExhaustiveRow>& rows) {
    std::ostringstream out;
    out << "g_id,h_id,gamma_g,gamma_h,gamma_prod,vizing,suen_tarr,condition,engine_outcome\n";
    for (const auto& r : rows) {
        out << r.g_id << ',' << r.h_id << ',' << r.gamma_g << ',' << r.gamma_h << ',' << r.gamma_prod
            << ',' << (r.vizing ? 1 : 0) << ',' << (r.suen_tarr ? 1 : 0) << ',' << (r.condition ? 1 : 0)
            << ',' << r.engine_outcome << '\n';
    }
    return out.str();
}

}  // namespace viz
