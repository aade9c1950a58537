#include "viz/vizing_check.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "viz/product.hpp"

namespace viz {

namespace {

int solve_or_annotate(const Graph& g, const char* which, std::uint64_t budget) {
    try {
        return gamma_exact(g, budget).gamma;
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(std::string(e.what()) + " while computing " + which);
    }
}

}  // namespace

PairReport check_pair(const Graph& g, const Graph& h, std::optional<double> p, std::uint64_t node_budget) {
    PairReport r;
    r.gamma_g = solve_or_annotate(g, "gamma(G)", node_budget);
    r.gamma_h = solve_or_annotate(h, "gamma(H)", node_budget);
    const ProductGraph pg = cartesian_product(g, h);
    r.gamma_product = solve_or_annotate(pg.graph, "gamma(G square H)", node_budget);

    r.vizing_holds = r.gamma_product >= r.gamma_g * r.gamma_h;
    // integers after multiplying by 2: no float equality at the half boundary
    r.suen_tarr_holds = 2 * r.gamma_product >= r.gamma_g * r.gamma_h + std::min(r.gamma_g, r.gamma_h);
    r.theorem_condition = check_theorem_condition(g, h, r.gamma_g, r.gamma_h);

    if (p.has_value()) {
        r.p_used = p;
        const long big = std::max<long>(g.order(), h.order());
        const long small = std::min<long>(g.order(), h.order());
        if (*p >= 0.0 && *p < 1.0 && small >= 2)
            r.corollary_bound_holds = check_corollary_bound(big, small, *p);
    }
    return r;
}

bool check_theorem_condition(const Graph& g, const Graph& h, int gamma_g, int gamma_h) {
    const long gg = static_cast<long>(gamma_g) * gamma_h;
    return g.order() >= gg && h.order() >= gg;
}

bool check_corollary_bound(long g_order, long h_order, double p) {
    if (!(p >= 0.0) || p >= 1.0)
        throw std::invalid_argument("check_corollary_bound: p must lie in [0,1), got " + std::to_string(p));
    if (h_order < 2)
        throw std::invalid_argument("check_corollary_bound: |H| must be at least 2");
    if (g_order < h_order)
        throw std::invalid_argument("check_corollary_bound: requires |G| >= |H|");
    const double ln_q = -std::log1p(-p);  // ln(1/(1-p))
    if (!(ln_q > 0.0))
        throw std::invalid_argument("check_corollary_bound: q = 1/(1-p) must exceed 1");
    // compare log_q|G| <= |H| / log_q|H| on the log scale
    const double lhs = std::log(static_cast<double>(g_order)) / ln_q;
    const double rhs = static_cast<double>(h_order) / (std::log(static_cast<double>(h_order)) / ln_q);
    return lhs <= rhs + 1e-9;
}

}  // namespace viz
