#include "viz/domination.hpp"

#include <algorithm>
#include <string>

namespace viz {

namespace {

// advance an ascending index combination to its lexicographic successor
bool next_combination(std::vector<int>& idx, int n) {
    const int c = static_cast<int>(idx.size());
    for (int i = c - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - c + i) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < c; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::uint64_t> closed_masks(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        const VertexSet& row = g.closed_neighborhood(v);
        for (int u = row.first(); u >= 0; u = row.next(u)) nb[static_cast<std::size_t>(v)] |= 1ULL << u;
    }
    return nb;
}

VertexSet set_from_indices(int n, const std::vector<int>& idx) {
    VertexSet s(n);
    for (int v : idx) s.set(v);
    return s;
}

// greedy maximal 2-packing restricted to `residual`; lower-bounds the number
// of dominators still needed for the residual
int packing_bound(const Graph& g, const VertexSet& residual) {
    const int n = g.order();
    VertexSet occupied(n);
    int size = 0;
    for (int v = residual.first(); v >= 0; v = residual.next(v)) {
        const VertexSet& row = g.closed_neighborhood(v);
        if (!occupied.intersects(row)) {
            occupied |= row;
            ++size;
        }
    }
    return size;
}

struct BranchAndBound {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    VertexSet best;
    int best_size;

    // lb_value was computed at depth lb_depth; it decays by one per chosen
    // vertex and is refreshed every 4 levels (amortization constant)
    void dfs(const VertexSet& chosen, const VertexSet& covered, int lb_value, int lb_depth) {
        if (++nodes > budget)
            throw BudgetExceeded("domination solver: node budget exceeded (" + std::to_string(budget) + ")");
        if (covered.is_full()) {
            best = chosen;
            best_size = chosen.count();
            return;
        }
        const int depth = chosen.count();
        VertexSet residual = VertexSet::full(g.order());
        residual -= covered;
        int lb;
        if (depth % 4 == 0) {
            lb = packing_bound(g, residual);
            lb_value = lb;
            lb_depth = depth;
        } else {
            lb = std::max(1, lb_value - (depth - lb_depth));
        }
        if (depth + lb >= best_size) return;

        // fail-first: uncovered vertex with the fewest uncovered closed neighbors
        int branch = -1, branch_score = g.order() + 1;
        for (int v = residual.first(); v >= 0; v = residual.next(v)) {
            const int score = (g.closed_neighborhood(v) & residual).count();
            if (score < branch_score) {
                branch_score = score;
                branch = v;
            }
        }

        const VertexSet& cands = g.closed_neighborhood(branch);
        std::vector<std::pair<int, int>> order;  // (-new coverage, u)
        for (int u = cands.first(); u >= 0; u = cands.next(u))
            order.emplace_back(-(g.closed_neighborhood(u) & residual).count(), u);
        std::sort(order.begin(), order.end());

        for (auto [neg, u] : order) {
            (void)neg;
            VertexSet nchosen = chosen;
            nchosen.set(u);
            VertexSet ncovered = covered;
            ncovered |= g.closed_neighborhood(u);
            dfs(nchosen, ncovered, lb_value, lb_depth);
        }
    }
};

// lexicographically least dominating set of size exactly k, indices >= from;
// returns true and fills sel on success
bool lex_least_at_size(const std::vector<std::uint64_t>& nb, std::uint64_t full, int n, int k, int from,
                       std::uint64_t covered, std::vector<int>& sel) {
    if (covered == full) return static_cast<int>(sel.size()) == k;
    if (static_cast<int>(sel.size()) == k) return false;
    // every uncovered vertex must still have an admissible dominator
    std::uint64_t tail = (from >= 64) ? 0 : (~0ULL << from) & full;
    std::uint64_t uncovered = full & ~covered;
    for (std::uint64_t rest = uncovered; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (!(nb[static_cast<std::size_t>(v)] & tail)) return false;
    }
    for (int u = from; u < n; ++u) {
        sel.push_back(u);
        if (lex_least_at_size(nb, full, n, k, u + 1, covered | nb[static_cast<std::size_t>(u)], sel))
            return true;
        sel.pop_back();
    }
    return false;
}

}  // namespace

GammaResult gamma_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n > 32)
        throw std::invalid_argument("gamma_bruteforce: n=" + std::to_string(n) +
                                    " exceeds the enumeration cap of 32 vertices");
    const auto nb = closed_masks(g);
    const std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    GammaResult res;
    for (int c = 1; c <= n; ++c) {
        std::vector<int> idx(static_cast<std::size_t>(c));
        for (int i = 0; i < c; ++i) idx[static_cast<std::size_t>(i)] = i;
        do {
            ++res.nodes_explored;
            std::uint64_t covered = 0;
            for (int v : idx) covered |= nb[static_cast<std::size_t>(v)];
            if (covered == full) {
                res.gamma = c;
                res.witness = set_from_indices(n, idx);
                res.canonical = true;
                return res;
            }
        } while (next_combination(idx, n));
    }
    throw std::logic_error("gamma_bruteforce: no dominating set found");  // unreachable
}

GammaResult gamma_exact(const Graph& g, std::uint64_t node_budget) {
    const int n = g.order();
    BranchAndBound bb{g, node_budget};
    bb.best = greedy_dominating(g);
    bb.best_size = bb.best.count();
    bb.dfs(VertexSet(n), VertexSet(n), 0, 0);

    GammaResult res;
    res.gamma = bb.best_size;
    res.nodes_explored = bb.nodes;
    if (n <= 32) {
        const auto nb = closed_masks(g);
        const std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
        std::vector<int> sel;
        if (!lex_least_at_size(nb, full, n, res.gamma, 0, 0, sel))
            throw std::logic_error("gamma_exact: canonical re-extraction failed");
        res.witness = set_from_indices(n, sel);
        res.canonical = true;
    } else {
        res.witness = bb.best;
        res.canonical = false;
    }
    return res;
}

VertexSet greedy_dominating(const Graph& g) {
    const int n = g.order();
    VertexSet chosen(n), covered(n);
    while (!covered.is_full()) {
        int pick = -1, pick_gain = -1;
        for (int v = 0; v < n; ++v) {
            VertexSet gain = g.closed_neighborhood(v);
            gain -= covered;
            const int c = gain.count();
            if (c > pick_gain) {
                pick_gain = c;
                pick = v;
            }
        }
        chosen.set(pick);
        covered |= g.closed_neighborhood(pick);
    }
    return chosen;
}

int two_packing_lower_bound(const Graph& g) {
    return packing_bound(g, VertexSet::full(g.order()));
}

std::vector<VertexSet> enumerate_minimum_dominating_sets(const Graph& g, std::size_t limit) {
    const int n = g.order();
    if (n > 24)
        throw std::invalid_argument("enumerate_minimum_dominating_sets: n=" + std::to_string(n) +
                                    " exceeds the cap of 24 vertices");
    const int gamma = gamma_exact(g).gamma;
    const auto nb = closed_masks(g);
    const std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);

    std::vector<VertexSet> out;
    std::vector<int> idx(static_cast<std::size_t>(gamma));
    for (int i = 0; i < gamma; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
        std::uint64_t covered = 0;
        for (int v : idx) covered |= nb[static_cast<std::size_t>(v)];
        if (covered == full) {
            out.push_back(set_from_indices(n, idx));
            if (out.size() >= limit) break;
        }
    } while (next_combination(idx, n));
    return out;
}

}  // namespace viz
