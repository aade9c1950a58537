#include <doctest.h>

#include "test_util.hpp"
#include "viz/experiments.hpp"
#include "viz/io.hpp"
#include "viz/rng.hpp"

using namespace viz;
using namespace testutil;

TEST_CASE("closed neighborhood of a set") {
    const Graph p3 = path(3);
    CHECK(p3.closed_neighborhood(vs(3, {1})) == VertexSet::full(3));
    CHECK(p3.closed_neighborhood(VertexSet(3)).none());

    const Graph c5 = cycle(5);
    // N[0] = {4,0,1}, N[2] = {1,2,3}
    CHECK(c5.closed_neighborhood(vs(5, {0, 2})) == VertexSet::full(5));

    CHECK_THROWS_AS(p3.closed_neighborhood(vs(4, {0})), std::invalid_argument);
}

TEST_CASE("is_dominating") {
    CHECK(complete(4).is_dominating(vs(4, {0})));
    CHECK_FALSE(path(4).is_dominating(vs(4, {0})));
    CHECK(cycle(6).is_dominating(vs(6, {0, 3})));
}

TEST_CASE("graph invariants after construction") {
    for (const Graph& g : {path(4), cycle(5), complete(4), star(6), empty(3)}) {
        for (int v = 0; v < g.order(); ++v) {
            CHECK(g.closed_neighborhood(v).test(v));
            for (int u = 0; u < g.order(); ++u)
                CHECK(g.closed_neighborhood(v).test(u) == g.closed_neighborhood(u).test(v));
        }
    }
}

TEST_CASE("graph6 parse: known values") {
    const Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    const Graph p2 = parse_graph6("A_");  // 'A' = n=2, '_' = 63+32, bit (0,1)
    CHECK(p2.order() == 2);
    CHECK(p2.adjacent(0, 1));

    // "D?{": n=5, payload bits 000000 111100 -> pairs (0,4),(1,4),(2,4),(3,4)
    const Graph s = parse_graph6("D?{");
    CHECK(s.order() == 5);
    CHECK(s.edge_count() == 4);
    for (int v = 0; v < 4; ++v) {
        CHECK(s.adjacent(v, 4));
        for (int u = v + 1; u < 4; ++u) CHECK_FALSE(s.adjacent(v, u));
    }
}

TEST_CASE("graph6 parse errors carry the byte offset") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);       // truncated payload
    CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError);     // trailing bytes
    CHECK_THROWS_AS(parse_graph6("A\x20"), ParseError);    // byte below 63
    CHECK_THROWS_AS(parse_graph6("B\x7f"), ParseError);    // byte above 126
    CHECK_THROWS_AS(parse_graph6("A?\x01"), ParseError);
    // n=2 has one payload bit; a nonzero second bit is trailing garbage
    std::string bad = "A";
    bad.push_back(static_cast<char>(63 + 16));  // bits 010000
    CHECK_THROWS_AS(parse_graph6(bad), ParseError);
}

TEST_CASE("graph6 round-trip on random graphs up to 62 vertices") {
    Rng rng(7);
    for (int it = 0; it < 120; ++it) {
        const int n = 1 + static_cast<int>(rng.below(62));
        const double p = rng.next_double();
        const Graph g = erdos_renyi(n, p, rng.next_u64());
        const std::string enc = emit_graph6(g);
        CHECK(enc.size() == 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
        CHECK(parse_graph6(enc) == g);
    }
}

TEST_CASE("graph6 long header round-trip") {
    const Graph g = erdos_renyi(80, 0.3, 11);
    const std::string enc = emit_graph6(g);
    CHECK(enc[0] == '~');
    CHECK(parse_graph6(enc) == g);
}

TEST_CASE("edge list parsing") {
    CHECK(parse_edgelist("3\n0 1\n1 2\n") == path(3));
    const Graph p2 = parse_edgelist("2\n0 1\n1 0\n");  // dedup across orientations
    CHECK(p2.edge_count() == 1);
    CHECK(parse_edgelist("4\n0 1\n1 2\n2 3\n3 0\n") == cycle(4));
    CHECK_THROWS_AS(parse_edgelist("3\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("3\n0 3\n"), ParseError);
    CHECK(parse_edgelist(emit_edgelist(cycle(7))) == cycle(7));
}

TEST_CASE("erdos_renyi endpoints and determinism") {
    CHECK(erdos_renyi(5, 0.0, 123).edge_count() == 0);
    CHECK(erdos_renyi(5, 1.0, 123) == complete(5));
    CHECK(erdos_renyi(30, 0.4, 99) == erdos_renyi(30, 0.4, 99));
    CHECK(erdos_renyi(30, 0.4, 99) != erdos_renyi(30, 0.4, 100));
    CHECK_THROWS_AS(erdos_renyi(5, 1.5, 0), std::invalid_argument);

    // +-4 sigma of Binomial(C(100,2), 0.5)
    const long m = erdos_renyi(100, 0.5, kDefaultSeed).edge_count();
    CHECK(m >= 2134);
    CHECK(m <= 2816);
}

TEST_CASE("vertex set basics") {
    VertexSet s(70);
    s.set(0);
    s.set(69);
    CHECK(s.count() == 2);
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 69);
    CHECK(s.next(69) == -1);
    CHECK_THROWS_AS(s.set(70), std::out_of_range);
    CHECK(VertexSet::full(70).count() == 70);
    CHECK((s - s).none());
    CHECK(VertexSet::full(70).contains(s));
}
