#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "viz/vertex_set.hpp"

namespace viz {

/**
 * Immutable simple undirected graph on dense vertex indices 0..n-1.
 * The primitive storage is the closed neighborhood N[v] per vertex; open
 * adjacency is derived by clearing the diagonal bit.
 */
class Graph {
public:
    explicit Graph(int n, const std::vector<std::pair<int, int>>& edges = {});

    int order() const { return n_; }
    long edge_count() const { return m_; }

    const VertexSet& closed_neighborhood(int v) const { return rows_.at(static_cast<std::size_t>(v)); }

    bool adjacent(int u, int v) const { return u != v && closed_neighborhood(u).test(v); }

    int degree(int v) const { return closed_neighborhood(v).count() - 1; }

    // N[S] = union of N[v] over v in s; empty s gives the empty set
    VertexSet closed_neighborhood(const VertexSet& s) const;

    bool is_dominating(const VertexSet& s) const { return closed_neighborhood(s).is_full(); }

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<VertexSet> rows_;
};

// G(n,p): each unordered pair an edge independently with probability p,
// driven by the toolkit PRNG (see rng.hpp); identical (n,p,seed) gives a
// bitwise-identical graph everywhere.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

}  // namespace viz
