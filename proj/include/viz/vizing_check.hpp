#pragma once

#include <cstdint>
#include <optional>

#include "viz/domination.hpp"
#include "viz/graph.hpp"

namespace viz {

struct PairReport {
    int gamma_g = 0;
    int gamma_h = 0;
    int gamma_product = 0;
    bool vizing_holds = false;     // gamma_product >= gamma_g * gamma_h
    bool suen_tarr_holds = false;  // 2*gamma_product >= gamma_g*gamma_h + min(gamma_g,gamma_h)
    bool theorem_condition = false;
    std::optional<double> p_used;
    std::optional<bool> corollary_bound_holds;
};

// Computes all three domination numbers exactly and evaluates the checks.
// When p is given (and the orders are admissible), the corollary order bound
// is evaluated as well. A solver budget overrun is rethrown with the failing
// gamma named.
PairReport check_pair(const Graph& g, const Graph& h, std::optional<double> p = std::nullopt,
                      std::uint64_t node_budget = kDefaultNodeBudget);

// |G| >= gamma_g*gamma_h and |H| >= gamma_g*gamma_h
bool check_theorem_condition(const Graph& g, const Graph& h, int gamma_g, int gamma_h);

// g_order <= q^(h_order / log_q h_order) for q = 1/(1-p), compared on the
// log scale with a 1e-9 tolerance. Requires 0 <= p < 1, h_order >= 2 and
// g_order >= h_order.
bool check_corollary_bound(long g_order, long h_order, double p);

}  // namespace viz
