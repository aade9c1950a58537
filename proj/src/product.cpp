#include "viz/product.hpp"

#include <stdexcept>
#include <string>

namespace viz {

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
    const long total = static_cast<long>(g.order()) * h.order();
    if (total > kMaxVertices)
        throw std::invalid_argument("cartesian product order " + std::to_string(total) +
                                    " exceeds the cap of " + std::to_string(kMaxVertices));
    const int hn = h.order();
    std::vector<std::pair<int, int>> edges;
    for (auto [u1, u2] : g.edges())
        for (int v = 0; v < hn; ++v) edges.emplace_back(u1 * hn + v, u2 * hn + v);
    for (auto [v1, v2] : h.edges())
        for (int u = 0; u < g.order(); ++u) edges.emplace_back(u * hn + v1, u * hn + v2);
    return ProductGraph{Graph(static_cast<int>(total), edges), g.order(), hn};
}

VertexSet project_to_g(const ProductGraph& pg, const VertexSet& s) {
    if (s.universe() != pg.graph.order())
        throw std::invalid_argument("project_to_g: set universe does not match product order");
    VertexSet out(pg.g_size);
    for (int x = s.first(); x >= 0; x = s.next(x)) out.set(pg.unflat(x).first);
    return out;
}

VertexSet project_to_h(const ProductGraph& pg, const VertexSet& s) {
    if (s.universe() != pg.graph.order())
        throw std::invalid_argument("project_to_h: set universe does not match product order");
    VertexSet out(pg.h_size);
    for (int x = s.first(); x >= 0; x = s.next(x)) out.set(pg.unflat(x).second);
    return out;
}

}  // namespace viz
