#include "viz/graph.hpp"

#include <stdexcept>
#include <string>

#include "viz/rng.hpp"

namespace viz {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order out of range: " + std::to_string(n));
    rows_.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        VertexSet row(n);
        row.set(v);
        rows_.push_back(std::move(row));
    }
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") for n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop not allowed at vertex " + std::to_string(u));
        if (!rows_[static_cast<std::size_t>(u)].test(v)) {
            rows_[static_cast<std::size_t>(u)].set(v);
            rows_[static_cast<std::size_t>(v)].set(u);
            ++m_;
        }
    }
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
    if (s.universe() != n_)
        throw std::invalid_argument("vertex set universe " + std::to_string(s.universe()) +
                                    " does not match graph order " + std::to_string(n_));
    VertexSet out(n_);
    for (int v = s.first(); v >= 0; v = s.next(v)) out |= rows_[static_cast<std::size_t>(v)];
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        const VertexSet& row = rows_[static_cast<std::size_t>(u)];
        for (int v = row.next(u); v >= 0; v = row.next(v)) out.emplace_back(u, v);
    }
    return out;
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0,1], got " + std::to_string(p));
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace viz
