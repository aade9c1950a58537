#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace viz {

// Hard cap on graph order; product graphs inherit it on |G|*|H|.
inline constexpr int kMaxVertices = 4096;

/**
 * Fixed-universe vertex bitset. Every set remembers the order of the graph
 * it belongs to; binary operations require matching universes.
 */
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), words_(word_count(universe), 0) {
        if (universe < 0 || universe > kMaxVertices)
            throw std::invalid_argument("vertex set universe out of range: " + std::to_string(universe));
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w)
            s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        check(v);
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void set(int v) {
        check(v);
        words_[v >> 6] |= 1ULL << (v & 63);
    }

    void reset(int v) {
        check(v);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    bool is_full() const { return count() == n_; }

    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // set difference: remove every member of o
    VertexSet& operator-=(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // true iff o is a subset of *this
    bool contains(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    // first set bit, or -1
    int first() const { return scan_from(0); }

    // next set bit strictly after v, or -1
    int next(int v) const { return scan_from(v + 1); }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

private:
    static std::size_t word_count(int n) { return static_cast<std::size_t>((n + 63) / 64); }

    void check(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex index " + std::to_string(v) + " out of range for universe " +
                                    std::to_string(n_));
    }

    void check_universe(const VertexSet& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("vertex set universe mismatch: " + std::to_string(n_) + " vs " +
                                        std::to_string(o.n_));
    }

    void trim() {
        if (n_ % 64 != 0 && !words_.empty())
            words_.back() &= (1ULL << (n_ % 64)) - 1;
    }

    int scan_from(int v) const {
        if (v < 0) v = 0;
        int w = v >> 6;
        const int nw = static_cast<int>(words_.size());
        if (w >= nw) return -1;
        std::uint64_t cur = words_[w] & (~0ULL << (v & 63));
        while (true) {
            if (cur) return (w << 6) + std::countr_zero(cur);
            if (++w >= nw) return -1;
            cur = words_[w];
        }
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace viz
