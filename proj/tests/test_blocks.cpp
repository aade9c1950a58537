#include <doctest.h>

#include "test_util.hpp"
#include "viz/blocks.hpp"
#include "viz/domination.hpp"
#include "viz/product.hpp"
#include "viz/rng.hpp"

using namespace viz;
using namespace testutil;

TEST_CASE("build_partition deals vertices deterministically") {
    const Partition p1 = build_partition(empty(4), 2, 2);
    CHECK(p1.parts[0] == vs(4, {0, 1}));
    CHECK(p1.parts[1] == vs(4, {2, 3}));

    const Partition p2 = build_partition(empty(5), 2, 2);
    CHECK(p2.parts[0] == vs(5, {0, 1, 4}));
    CHECK(p2.parts[1] == vs(5, {2, 3}));

    CHECK_THROWS_AS(build_partition(empty(4), 2, 3), std::invalid_argument);
}

TEST_CASE("projection_set") {
    const ProductGraph pg = cartesian_product(path(2), path(2));
    CHECK(projection_set(pg, VertexSet(4), vs(2, {0, 1}), vs(2, {0})).none());
    CHECK(projection_set(pg, vs(4, {pg.flat(0, 0)}), vs(2, {0, 1}), vs(2, {0})) == vs(2, {0}));
    CHECK(projection_set(pg, vs(4, {pg.flat(0, 0), pg.flat(1, 1)}), vs(2, {0, 1}), vs(2, {0, 1})) ==
          vs(2, {0, 1}));
}

TEST_CASE("classify_block on the C4 instance") {
    // P2 box P2 = C4; d = {(0,0),(1,1)} is a minimum dominating set
    const ProductGraph pg = cartesian_product(path(2), path(2));
    const VertexSet d = vs(4, {pg.flat(0, 0), pg.flat(1, 1)});
    Partition part_g, part_h;
    part_g.parts = {vs(2, {0}), vs(2, {1})};
    part_h.parts = {vs(2, {0}), vs(2, {1})};
    part_g.min_part_size = part_h.min_part_size = 1;

    const BlockLabel b00 = classify_block(pg, d, part_g, part_h, 0, 0);
    CHECK(b00.is_g_cell);

    const BlockLabel b01 = classify_block(pg, d, part_g, part_h, 0, 1);
    CHECK(b01.is_g_cell);
    CHECK(b01.is_h_cell);

    // strip count 0 with |H_j| >= 1 cannot be a G-cell
    const VertexSet d_col0 = vs(4, {pg.flat(0, 0), pg.flat(1, 0)});
    const BlockLabel b1 = classify_block(pg, d_col0, part_g, part_h, 0, 1);
    CHECK_FALSE(b1.is_g_cell);

    CHECK_THROWS_AS(classify_block(pg, vs(4, {pg.flat(0, 0)}), part_g, part_h, 0, 0),
                    std::invalid_argument);  // not dominating
}

TEST_CASE("column uniformity of the cell labels") {
    Rng rng(61);
    for (int it = 0; it < 20; ++it) {
        const Graph g = erdos_renyi(3 + static_cast<int>(rng.below(3)), 0.5, rng.next_u64());
        const Graph h = erdos_renyi(3 + static_cast<int>(rng.below(3)), 0.5, rng.next_u64());
        const ProductGraph pg = cartesian_product(g, h);
        const VertexSet d = gamma_exact(pg.graph).witness;
        const Partition pa = build_partition(g, 2, 1);
        const Partition pb = build_partition(h, 2, 1);
        for (int j = 0; j < 2; ++j)
            CHECK(classify_block(pg, d, pa, pb, 0, j).is_g_cell ==
                  classify_block(pg, d, pa, pb, 1, j).is_g_cell);
        for (int i = 0; i < 2; ++i)
            CHECK(classify_block(pg, d, pa, pb, i, 0).is_h_cell ==
                  classify_block(pg, d, pa, pb, i, 1).is_h_cell);
    }
}

TEST_CASE("observation holds exhaustively at desk scale") {
    // all minimum dominating sets over random small factors, default partitions
    Rng rng(550);
    for (int it = 0; it < 40; ++it) {
        const Graph g = erdos_renyi(2 + static_cast<int>(rng.below(4)), rng.next_double(), rng.next_u64());
        const Graph h = erdos_renyi(2 + static_cast<int>(rng.below(4)), rng.next_double(), rng.next_u64());
        const ProductGraph pg = cartesian_product(g, h);
        const int gg = gamma_exact(g).gamma;
        const int gh = gamma_exact(h).gamma;
        if (g.order() < gg * gh || h.order() < gg * gh) continue;
        if (g.order() * h.order() > 24) continue;  // enumeration cap
        const Partition pa = build_partition(g, gg, gh);
        const Partition pb = build_partition(h, gh, gg);
        for (const VertexSet& d : enumerate_minimum_dominating_sets(pg.graph, 64)) {
            const ObservationResult res = verify_observation(g, h, pg, d, pa, pb);
            REQUIRE(res.ok());
            for (const auto& lab : res.labels) {
                REQUIRE((lab.is_g_cell || lab.is_h_cell));
                if (lab.witness) {
                    // distinct columns, valid dominators
                    VertexSet cols(g.order());
                    for (auto [u, dom] : lab.witness->dominators) {
                        CHECK(d.test(dom));
                        const auto [du, dv] = pg.unflat(dom);
                        CHECK(du == u);
                        CHECK(h.closed_neighborhood(lab.witness->empty_row).test(dv));
                        CHECK_FALSE(cols.test(u));
                        cols.set(u);
                    }
                }
            }
        }
    }
}

TEST_CASE("single-block partitions always carry a label") {
    Rng rng(88);
    for (int it = 0; it < 15; ++it) {
        const Graph g = erdos_renyi(2 + static_cast<int>(rng.below(3)), 0.5, rng.next_u64());
        const Graph h = erdos_renyi(2 + static_cast<int>(rng.below(3)), 0.5, rng.next_u64());
        const ProductGraph pg = cartesian_product(g, h);
        const VertexSet d = gamma_exact(pg.graph).witness;
        Partition pa, pb;
        pa.parts = {VertexSet::full(g.order())};
        pb.parts = {VertexSet::full(h.order())};
        const ObservationResult res = verify_observation(g, h, pg, d, pa, pb);
        REQUIRE(res.ok());
        CHECK((res.labels[0].is_g_cell || res.labels[0].is_h_cell));
    }
}

TEST_CASE("run_repartitioning on the reference instances") {
    SUBCASE("C4, C4") {
        const RepartitionTrace tr = run_repartitioning(cycle(4), cycle(4));
        CHECK(tr.outcome != TraceOutcome::DiagnosticFailure);
        CHECK(tr.certified_count >= 4);
        CHECK(tr.certified_count <= 4);  // |D| = 4 caps it
        const ProductGraph pg = cartesian_product(cycle(4), cycle(4));
        VertexSet d(pg.graph.order());
        for (int v : tr.d_vertices) d.set(v);
        CHECK(audit_trace(tr, pg, d).ok);
    }
    SUBCASE("K1, K1") {
        const RepartitionTrace tr = run_repartitioning(Graph(1), Graph(1));
        CHECK(tr.outcome != TraceOutcome::DiagnosticFailure);
        CHECK(tr.certified_count == 1);
    }
    SUBCASE("P3, K2") {
        const RepartitionTrace tr = run_repartitioning(path(3), path(2));
        CHECK(tr.outcome != TraceOutcome::DiagnosticFailure);
        CHECK(tr.certified_count >= 1);
    }
    SUBCASE("theorem precondition is enforced") {
        // gamma(P3)=1, gamma(C4)=2 -> need |G| >= 2 and |H| >= 2: holds; use
        // a pair that genuinely fails: gamma(2K2)=2, gamma(C4)=2, orders 4,4 < 4? no.
        // P2 with gamma 1 against empty(3) with gamma 3: condition 2 >= 3 fails.
        CHECK_THROWS_AS(run_repartitioning(path(2), empty(3)), std::invalid_argument);
    }
    SUBCASE("a non-minimum d is rejected") {
        const ProductGraph pg = cartesian_product(cycle(4), cycle(4));
        VertexSet d = greedy_dominating(pg.graph);
        if (d.count() == gamma_exact(pg.graph).gamma) {
            // force a larger still-dominating set
            for (int v = 0; v < pg.graph.order() && d.count() <= gamma_exact(pg.graph).gamma; ++v)
                d.set(v);
        }
        CHECK_THROWS_AS(run_repartitioning(cycle(4), cycle(4), d), std::invalid_argument);
    }
}

TEST_CASE("engine properties over random eligible pairs") {
    Rng rng(4242);
    int runs = 0;
    for (int it = 0; it < 120 && runs < 40; ++it) {
        const Graph g = erdos_renyi(2 + static_cast<int>(rng.below(4)), rng.next_double(), rng.next_u64());
        const Graph h = erdos_renyi(2 + static_cast<int>(rng.below(4)), rng.next_double(), rng.next_u64());
        const int gg = gamma_exact(g).gamma;
        const int gh = gamma_exact(h).gamma;
        if (g.order() < gg * gh || h.order() < gg * gh) continue;
        ++runs;
        const RepartitionTrace tr = run_repartitioning(g, h);
        const ProductGraph pg = cartesian_product(g, h);
        VertexSet d(pg.graph.order());
        for (int v : tr.d_vertices) d.set(v);

        // at most min(k,l) rounds
        CHECK(static_cast<int>(tr.rounds.size()) <= std::min(gg, gh));
        // soundness regardless of outcome
        long total = 0;
        for (const auto& reg : tr.regions) total += reg.d_count;
        CHECK(total <= d.count() + 0L);  // disjoint regions cannot exceed |D|... checked via audit too
        if (tr.outcome != TraceOutcome::DiagnosticFailure) {
            CHECK(tr.certified_count >= static_cast<long>(gg) * gh);
            CHECK(tr.certified_count <= d.count());
        }
        CHECK(audit_trace(tr, pg, d).ok);
    }
    CHECK(runs >= 20);
}

TEST_CASE("audit_trace detects tampering") {
    RepartitionTrace tr = run_repartitioning(cycle(4), cycle(4));
    const ProductGraph pg = cartesian_product(cycle(4), cycle(4));
    VertexSet d(pg.graph.order());
    for (int v : tr.d_vertices) d.set(v);
    REQUIRE(audit_trace(tr, pg, d).ok);

    SUBCASE("inflated tally") {
        tr.regions.at(0).d_count += 1;
        const AuditResult res = audit_trace(tr, pg, d);
        CHECK_FALSE(res.ok);
        CHECK(res.failure.find("region") != std::string::npos);
    }
    SUBCASE("overlapping regions") {
        CountedRegion dup = tr.regions.at(0);
        tr.regions.push_back(dup);
        CHECK_FALSE(audit_trace(tr, pg, d).ok);
    }
    SUBCASE("broken partition") {
        REQUIRE(!tr.rounds.empty());
        if (!tr.rounds[0].partition_after.empty() && !tr.rounds[0].partition_after[0].empty()) {
            tr.rounds[0].partition_after[0].push_back(tr.rounds[0].partition_after[0][0]);
            CHECK_FALSE(audit_trace(tr, pg, d).ok);
        }
    }
    SUBCASE("non-injective exchange") {
        tr.rounds[0].exchange = {{0, 1}, {2, 1}};
        CHECK_FALSE(audit_trace(tr, pg, d).ok);
    }
}

TEST_CASE("trace JSON round-trip") {
    const RepartitionTrace tr = run_repartitioning(cycle(4), cycle(4));
    const std::string text = trace_to_json(tr);
    const RepartitionTrace back = trace_from_json(text);
    CHECK(back.outcome == tr.outcome);
    CHECK(back.certified_count == tr.certified_count);
    CHECK(back.d_vertices == tr.d_vertices);
    CHECK(back.initial_partition_repart == tr.initial_partition_repart);
    CHECK(back.rounds.size() == tr.rounds.size());
    CHECK(back.regions.size() == tr.regions.size());
    for (std::size_t i = 0; i < tr.regions.size(); ++i) {
        CHECK(back.regions[i].g_vertices == tr.regions[i].g_vertices);
        CHECK(back.regions[i].d_count == tr.regions[i].d_count);
    }
    CHECK(trace_to_json(back) == text);

    // a parsed trace still audits
    const ProductGraph pg = cartesian_product(cycle(4), cycle(4));
    VertexSet d(pg.graph.order());
    for (int v : back.d_vertices) d.set(v);
    CHECK(audit_trace(back, pg, d).ok);
}
