#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "viz/graph.hpp"

namespace viz {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000ULL;

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct GammaResult {
    int gamma = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    // true when witness is the lexicographically least minimum dominating set
    // (lowest-index-first ordering); always true for n <= 32
    bool canonical = true;
};

// Ground-truth oracle: subsets in order of increasing cardinality,
// lexicographic (ascending-index) within a cardinality; first dominating set
// wins. Refuses n > 32.
GammaResult gamma_bruteforce(const Graph& g);

// Branch and bound. Branches on an uncovered vertex with the fewest
// uncovered closed neighbors; children choose each member of its closed
// neighborhood. Initial incumbent from greedy_dominating; lower bound from a
// greedy 2-packing of the uncovered residual. Throws BudgetExceeded after
// node_budget search nodes.
GammaResult gamma_exact(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

// Repeatedly take the vertex covering the most uncovered vertices, lowest
// index on ties.
VertexSet greedy_dominating(const Graph& g);

// Size of a greedily built maximal 2-packing (pairwise disjoint closed
// neighborhoods, scanned in index order); a lower bound on gamma.
int two_packing_lower_bound(const Graph& g);

// All dominating sets of size exactly gamma(g), lexicographic order,
// truncated at limit. Requires n <= 24.
std::vector<VertexSet> enumerate_minimum_dominating_sets(const Graph& g, std::size_t limit);

}  // namespace viz
