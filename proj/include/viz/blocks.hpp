#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "viz/graph.hpp"
#include "viz/product.hpp"

namespace viz {

/**
 * Ordered disjoint cover of a factor's vertex set. Parts keep at least
 * min_part_size vertices except those the re-partitioning rounds have
 * deliberately drained.
 */
struct Partition {
    std::vector<VertexSet> parts;
    int min_part_size = 0;
};

// Deterministic "arbitrary" partition: vertices dealt in index order, first
// filling each part to min_size, then the remainder round-robin from part 0.
// Requires g.order() >= parts*min_size (the theorem's order condition when
// parts = gamma(G) and min_size = gamma(H)).
Partition build_partition(const Graph& g, int parts, int min_size);

struct HCellWitness {
    int empty_row;                                 // h* in H_j with no D vertex in G x {h*}
    std::vector<std::pair<int, int>> dominators;   // u in G_i -> flat dominator in {u} x H
};

struct BlockLabel {
    int i = 0;
    int j = 0;
    bool is_g_cell = false;
    bool is_h_cell = false;
    int d_count_in_block = 0;
    std::optional<HCellWitness> witness;
};

// |D cap (G x H_j)| >= |H_j| decides is_g_cell; |D cap (G_i x H)| >= |G_i|
// decides is_h_cell. d must dominate pg.
BlockLabel classify_block(const ProductGraph& pg, const VertexSet& d, const Partition& partition_g,
                          const Partition& partition_h, int i, int j);

// {u in g_part : exists v in h_part with flat(u,v) in d}
VertexSet projection_set(const ProductGraph& pg, const VertexSet& d, const VertexSet& g_part,
                         const VertexSet& h_part);

struct ObservationResult {
    std::vector<BlockLabel> labels;
    // block that is neither G-cell nor H-cell, if one exists (would
    // contradict the labeling dichotomy and must be surfaced)
    std::optional<std::pair<int, int>> failed_block;
    bool ok() const { return !failed_block.has_value(); }
};

// Labels every block; for blocks that are not G-cell, constructs the
// pigeonhole witness (empty row h*, plus a per-column dominator for each
// vertex of G_i) certifying the H-cell count.
ObservationResult verify_observation(const Graph& g, const Graph& h, const ProductGraph& pg,
                                     const VertexSet& d, const Partition& partition_g,
                                     const Partition& partition_h);

enum class TraceOutcome {
    CertifiedByRounds,
    CertifiedAllHCellColumn,
    CertifiedPartsExhausted,
    DiagnosticFailure,
};

std::string to_string(TraceOutcome o);
TraceOutcome trace_outcome_from_string(const std::string& s);

// Rectangle A x B of product vertices, always stated in the original (G,H)
// orientation; tally counts D vertices inside it.
struct CountedRegion {
    VertexSet g_vertices;
    VertexSet h_vertices;
    long d_count = 0;
    std::string kind;  // "round_column" or "h_cell_strip"
    int round = 0;
};

struct RoundRecord {
    int round = 0;  // 1-based
    bool column_is_g_cell = false;
    std::vector<BlockLabel> column_labels;
    std::vector<std::pair<int, int>> exchange;    // v -> f(v), injective
    std::vector<std::pair<int, int>> reassigned;  // displaced vertex -> destination part
    std::vector<int> swept;                       // projections moved to the frozen bucket
    std::vector<std::vector<int>> partition_after;  // repartitioned factor, sorted indices per part
};

struct RepartitionTrace {
    int version = 1;
    bool swapped = false;  // true when the roles of G and H were exchanged (WLOG gamma(G) >= gamma(H))
    int gamma_g = 0, gamma_h = 0;
    int g_order = 0, h_order = 0;
    std::vector<int> d_vertices;  // flat indices in the original orientation
    // partitions in the internal orientation: "repart" is the factor whose
    // parts the rounds rewrite (gamma >= the other), "fixed" the other one
    std::vector<std::vector<int>> initial_partition_repart;
    std::vector<std::vector<int>> initial_partition_fixed;
    std::vector<RoundRecord> rounds;
    std::vector<CountedRegion> regions;
    TraceOutcome outcome = TraceOutcome::DiagnosticFailure;
    long certified_count = 0;
    std::string diagnostic;  // on DiagnosticFailure: round, block and missing quantity
};

// Executes the proof procedure for the pair (g,h) with the given minimum
// dominating set of their product (empty optional = compute the canonical
// one). Requires the theorem's order condition.
RepartitionTrace run_repartitioning(const Graph& g, const Graph& h,
                                    const std::optional<VertexSet>& d = std::nullopt);

struct AuditResult {
    bool ok = true;
    std::string failure;
    explicit operator bool() const { return ok; }
};

// Independent certificate checker: region disjointness and tallies, partition
// validity, exchange injectivity, and the certified count, all recomputed
// from the trace alone.
AuditResult audit_trace(const RepartitionTrace& trace, const ProductGraph& pg, const VertexSet& d);

// JSON serialization of traces (stable, versioned schema)
std::string trace_to_json(const RepartitionTrace& trace);
RepartitionTrace trace_from_json(const std::string& text);

}  // namespace viz
