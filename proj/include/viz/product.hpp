#pragma once

#include <utility>

#include "viz/graph.hpp"

namespace viz {

/**
 * Cartesian product with the coordinate bijection retained. Flat index is
 * row-major in the first factor: flat(u,v) = u*h_size + v, so a strip over a
 * fixed range of second-factor vertices is a contiguous pattern per row.
 */
struct ProductGraph {
    Graph graph;
    int g_size;
    int h_size;

    int flat(int u, int v) const { return u * h_size + v; }
    std::pair<int, int> unflat(int x) const { return {x / h_size, x % h_size}; }
};

ProductGraph cartesian_product(const Graph& g, const Graph& h);

// {u : exists v with flat(u,v) in s}
VertexSet project_to_g(const ProductGraph& pg, const VertexSet& s);

// {v : exists u with flat(u,v) in s}
VertexSet project_to_h(const ProductGraph& pg, const VertexSet& s);

}  // namespace viz
