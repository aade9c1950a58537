#include "viz/blocks.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "viz/domination.hpp"
#include "viz/vizing_check.hpp"

namespace viz {

namespace {

using json = nlohmann::json;

// |d ∩ (a_set x b_set)| under flat(a,b) = a*b_universe + b
long rect_count(const VertexSet& d, const VertexSet& a_set, const VertexSet& b_set, int b_universe) {
    long c = 0;
    for (int x = d.first(); x >= 0; x = d.next(x)) {
        const int a = x / b_universe, b = x % b_universe;
        if (a_set.test(a) && b_set.test(b)) ++c;
    }
    return c;
}

std::vector<std::vector<int>> snapshot(const std::vector<VertexSet>& parts) {
    std::vector<std::vector<int>> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(p.indices());
    return out;
}

void require_dominating(const ProductGraph& pg, const VertexSet& d, const char* who) {
    if (d.universe() != pg.graph.order())
        throw std::invalid_argument(std::string(who) + ": set universe does not match product order");
    if (!pg.graph.is_dominating(d))
        throw std::invalid_argument(std::string(who) + ": d is not a dominating set of the product");
}

}  // namespace

Partition build_partition(const Graph& g, int parts, int min_size) {
    if (parts < 1 || min_size < 0)
        throw std::invalid_argument("build_partition: parts and min_size must be positive");
    const long need = static_cast<long>(parts) * min_size;
    if (g.order() < need)
        throw std::invalid_argument("build_partition: order " + std::to_string(g.order()) +
                                    " < parts*min_size = " + std::to_string(need) +
                                    " (theorem order condition violated)");
    Partition p;
    p.min_part_size = min_size;
    p.parts.assign(static_cast<std::size_t>(parts), VertexSet(g.order()));
    int v = 0;
    for (int i = 0; i < parts; ++i)
        for (int s = 0; s < min_size; ++s) p.parts[static_cast<std::size_t>(i)].set(v++);
    for (int i = 0; v < g.order(); ++v, i = (i + 1) % parts) p.parts[static_cast<std::size_t>(i)].set(v);
    return p;
}

VertexSet projection_set(const ProductGraph& pg, const VertexSet& d, const VertexSet& g_part,
                         const VertexSet& h_part) {
    if (d.universe() != pg.graph.order())
        throw std::invalid_argument("projection_set: set universe does not match product order");
    VertexSet out(pg.g_size);
    for (int x = d.first(); x >= 0; x = d.next(x)) {
        const auto [u, v] = pg.unflat(x);
        if (g_part.test(u) && h_part.test(v)) out.set(u);
    }
    return out;
}

BlockLabel classify_block(const ProductGraph& pg, const VertexSet& d, const Partition& partition_g,
                          const Partition& partition_h, int i, int j) {
    require_dominating(pg, d, "classify_block");
    if (i < 0 || i >= static_cast<int>(partition_g.parts.size()) || j < 0 ||
        j >= static_cast<int>(partition_h.parts.size()))
        throw std::out_of_range("classify_block: block coordinates out of range");
    const VertexSet& gi = partition_g.parts[static_cast<std::size_t>(i)];
    const VertexSet& hj = partition_h.parts[static_cast<std::size_t>(j)];
    BlockLabel lab;
    lab.i = i;
    lab.j = j;
    lab.d_count_in_block = static_cast<int>(rect_count(d, gi, hj, pg.h_size));
    const long strip_g = rect_count(d, VertexSet::full(pg.g_size), hj, pg.h_size);
    const long strip_h = rect_count(d, gi, VertexSet::full(pg.h_size), pg.h_size);
    lab.is_g_cell = strip_g >= hj.count();
    lab.is_h_cell = strip_h >= gi.count();
    return lab;
}

ObservationResult verify_observation(const Graph& g, const Graph& h, const ProductGraph& pg,
                                     const VertexSet& d, const Partition& partition_g,
                                     const Partition& partition_h) {
    require_dominating(pg, d, "verify_observation");
    ObservationResult res;
    for (int i = 0; i < static_cast<int>(partition_g.parts.size()); ++i) {
        for (int j = 0; j < static_cast<int>(partition_h.parts.size()); ++j) {
            BlockLabel lab = classify_block(pg, d, partition_g, partition_h, i, j);
            if (!lab.is_g_cell) {
                // pigeonhole: fewer than |H_j| strip vertices of D over |H_j|
                // rows leaves an empty row h*
                const VertexSet& hj = partition_h.parts[static_cast<std::size_t>(j)];
                int empty_row = -1;
                for (int b = hj.first(); b >= 0; b = hj.next(b)) {
                    bool has_d = false;
                    for (int u = 0; u < pg.g_size && !has_d; ++u)
                        if (d.test(pg.flat(u, b))) has_d = true;
                    if (!has_d) {
                        empty_row = b;
                        break;
                    }
                }
                if (empty_row < 0) {
                    res.failed_block = {i, j};
                    res.labels.push_back(lab);
                    continue;
                }
                // each (u, h*) needs a dominator; the row is D-free, so it
                // lives in {u} x N_H[h*] -- a distinct column per u
                HCellWitness w;
                w.empty_row = empty_row;
                bool ok = true;
                const VertexSet& gi = partition_g.parts[static_cast<std::size_t>(i)];
                const VertexSet& hn = h.closed_neighborhood(empty_row);
                for (int u = gi.first(); u >= 0; u = gi.next(u)) {
                    int dom = -1;
                    for (int v = hn.first(); v >= 0; v = hn.next(v)) {
                        if (d.test(pg.flat(u, v))) {
                            dom = pg.flat(u, v);
                            break;
                        }
                    }
                    if (dom < 0) {
                        ok = false;
                        break;
                    }
                    w.dominators.emplace_back(u, dom);
                }
                if (!ok || !lab.is_h_cell) {
                    res.failed_block = {i, j};
                } else {
                    lab.witness = std::move(w);
                }
            }
            res.labels.push_back(std::move(lab));
        }
    }
    (void)g;
    return res;
}

std::string to_string(TraceOutcome o) {
    switch (o) {
        case TraceOutcome::CertifiedByRounds: return "CERTIFIED_BY_ROUNDS";
        case TraceOutcome::CertifiedAllHCellColumn: return "CERTIFIED_ALL_H_CELL_COLUMN";
        case TraceOutcome::CertifiedPartsExhausted: return "CERTIFIED_PARTS_EXHAUSTED";
        case TraceOutcome::DiagnosticFailure: return "DIAGNOSTIC_FAILURE";
    }
    return "UNKNOWN";
}

TraceOutcome trace_outcome_from_string(const std::string& s) {
    if (s == "CERTIFIED_BY_ROUNDS") return TraceOutcome::CertifiedByRounds;
    if (s == "CERTIFIED_ALL_H_CELL_COLUMN") return TraceOutcome::CertifiedAllHCellColumn;
    if (s == "CERTIFIED_PARTS_EXHAUSTED") return TraceOutcome::CertifiedPartsExhausted;
    if (s == "DIAGNOSTIC_FAILURE") return TraceOutcome::DiagnosticFailure;
    throw std::invalid_argument("unknown trace outcome: " + s);
}

RepartitionTrace run_repartitioning(const Graph& g, const Graph& h, const std::optional<VertexSet>& d_in) {
    const GammaResult rg = gamma_exact(g);
    const GammaResult rh = gamma_exact(h);
    if (!check_theorem_condition(g, h, rg.gamma, rh.gamma))
        throw std::invalid_argument("run_repartitioning: theorem order condition |G|,|H| >= gamma(G)gamma(H) fails");

    const ProductGraph pg = cartesian_product(g, h);
    VertexSet d(pg.graph.order());
    if (d_in.has_value()) {
        require_dominating(pg, *d_in, "run_repartitioning");
        const int opt = gamma_exact(pg.graph).gamma;
        if (d_in->count() != opt)
            throw std::invalid_argument("run_repartitioning: d has size " + std::to_string(d_in->count()) +
                                        " but gamma of the product is " + std::to_string(opt));
        d = *d_in;
    } else {
        d = gamma_exact(pg.graph).witness;
    }

    const bool swapped = rg.gamma < rh.gamma;
    const Graph& A = swapped ? h : g;  // repartitioned factor, gamma k
    const Graph& B = swapped ? g : h;  // fixed factor, gamma l <= k
    const int k = swapped ? rh.gamma : rg.gamma;
    const int l = swapped ? rg.gamma : rh.gamma;
    const ProductGraph pa = swapped ? cartesian_product(h, g) : pg;

    VertexSet dA(pa.graph.order());
    for (int x = d.first(); x >= 0; x = d.next(x)) {
        const auto [u, v] = pg.unflat(x);
        dA.set(swapped ? pa.flat(v, u) : x);
    }

    RepartitionTrace tr;
    tr.swapped = swapped;
    tr.gamma_g = rg.gamma;
    tr.gamma_h = rh.gamma;
    tr.g_order = g.order();
    tr.h_order = h.order();
    tr.d_vertices = d.indices();

    Partition PA = build_partition(A, k, l);
    const Partition PB = build_partition(B, l, k);
    tr.initial_partition_repart = snapshot(PA.parts);
    tr.initial_partition_fixed = snapshot(PB.parts);

    std::vector<VertexSet>& parts = PA.parts;
    const VertexSet fullA = VertexSet::full(A.order());
    const VertexSet fullB = VertexSet::full(B.order());
    const long target = static_cast<long>(k) * l;

    // record a rect in the original (G,H) orientation
    auto push_region = [&](const VertexSet& a_set, const VertexSet& b_set, const std::string& kind,
                           int round) {
        CountedRegion reg;
        reg.g_vertices = swapped ? b_set : a_set;
        reg.h_vertices = swapped ? a_set : b_set;
        reg.d_count = rect_count(dA, a_set, b_set, B.order());
        reg.kind = kind;
        reg.round = round;
        tr.regions.push_back(std::move(reg));
    };
    auto total_count = [&] {
        long s = 0;
        for (const auto& reg : tr.regions) s += reg.d_count;
        return s;
    };
    auto finish = [&](TraceOutcome outcome) -> RepartitionTrace& {
        tr.certified_count = total_count();
        if (tr.certified_count >= target) {
            tr.outcome = outcome;
        } else {
            tr.outcome = TraceOutcome::DiagnosticFailure;
            tr.diagnostic = "certified count " + std::to_string(tr.certified_count) +
                            " fell short of gamma(G)gamma(H) = " + std::to_string(target) + " on " +
                            to_string(outcome);
            tr.certified_count = 0;
        }
        return tr;
    };
    auto fail = [&](int round, const std::string& why) -> RepartitionTrace& {
        tr.outcome = TraceOutcome::DiagnosticFailure;
        tr.diagnostic = "round " + std::to_string(round) + ": " + why;
        tr.certified_count = 0;
        return tr;
    };

    for (int r = 0; r < l; ++r) {
        const VertexSet& colB = PB.parts[static_cast<std::size_t>(r)];
        const long col_count = rect_count(dA, fullA, colB, B.order());
        const bool g_cell = col_count >= colB.count();

        RoundRecord rec;
        rec.round = r + 1;
        rec.column_is_g_cell = g_cell;
        for (int i = r; i < k; ++i) {
            BlockLabel lab;
            lab.i = i;
            lab.j = r;
            lab.is_g_cell = g_cell;
            const VertexSet& pi = parts[static_cast<std::size_t>(i)];
            lab.is_h_cell = rect_count(dA, pi, fullB, B.order()) >= pi.count();
            lab.d_count_in_block = static_cast<int>(rect_count(dA, pi, colB, B.order()));
            rec.column_labels.push_back(std::move(lab));
        }

        if (!g_cell) {
            // every active block must be an H-cell block; certify by strips
            for (const auto& lab : rec.column_labels) {
                if (!lab.is_h_cell) {
                    rec.partition_after = snapshot(parts);
                    tr.rounds.push_back(std::move(rec));
                    return fail(r + 1, "block (" + std::to_string(lab.i) + "," + std::to_string(lab.j) +
                                           ") is neither a G-cell nor an H-cell block");
                }
            }
            for (int i = r; i < k; ++i)
                push_region(parts[static_cast<std::size_t>(i)], fullB, "h_cell_strip", r + 1);
            rec.partition_after = snapshot(parts);
            tr.rounds.push_back(std::move(rec));
            return finish(TraceOutcome::CertifiedAllHCellColumn);
        }

        // projections of column r per active part
        std::vector<VertexSet> proj;
        for (int i = r; i < k; ++i)
            proj.push_back(projection_set(pa, dA, parts[static_cast<std::size_t>(i)], colB));

        // Injective exchange: each projection vertex arriving from a part
        // beyond r swaps with a part-r member outside the projection, so
        // every part keeps its size.  Sources ascending, arrivals ascending
        // by (part index, vertex index); once part r runs out of spares the
        // remaining arrivals simply sweep into the bucket below and their
        // parts shrink.
        std::vector<std::pair<int, int>> pool;  // (part, vertex) arrivals
        for (int i = r + 1; i < k; ++i)
            for (int u = proj[static_cast<std::size_t>(i - r)].first(); u >= 0;
                 u = proj[static_cast<std::size_t>(i - r)].next(u))
                pool.emplace_back(i, u);
        VertexSet spares = parts[static_cast<std::size_t>(r)];
        spares -= proj[0];
        int spare = spares.first();
        for (const auto& [ip, u] : pool) {
            if (spare < 0) break;
            parts[static_cast<std::size_t>(r)].reset(spare);
            parts[static_cast<std::size_t>(ip)].reset(u);
            parts[static_cast<std::size_t>(r)].set(u);
            parts[static_cast<std::size_t>(ip)].set(spare);
            rec.exchange.emplace_back(spare, u);
            spare = spares.next(spare);
        }

        // sweep the remaining column projections into the frozen bucket
        VertexSet colproj(A.order());
        for (int x = dA.first(); x >= 0; x = dA.next(x)) {
            const auto [a, b] = pa.unflat(x);
            if (colB.test(b)) colproj.set(a);
        }
        for (int i = r + 1; i < k; ++i) {
            VertexSet mv = parts[static_cast<std::size_t>(i)];
            mv &= colproj;
            for (int u = mv.first(); u >= 0; u = mv.next(u)) {
                parts[static_cast<std::size_t>(i)].reset(u);
                parts[0].set(u);
                rec.swept.push_back(u);
            }
        }

        // freeze part r; count the column over the frozen prefix
        VertexSet frozen(A.order());
        for (int i = 0; i <= r; ++i) frozen |= parts[static_cast<std::size_t>(i)];
        push_region(frozen, colB, "round_column", r + 1);
        if (tr.regions.back().d_count != col_count) {
            rec.partition_after = snapshot(parts);
            tr.rounds.push_back(std::move(rec));
            return fail(r + 1, "column tally " + std::to_string(tr.regions.back().d_count) +
                                   " does not match the strip count " + std::to_string(col_count) +
                                   " after the sweep");
        }

        rec.partition_after = snapshot(parts);
        tr.rounds.push_back(std::move(rec));

        bool exhausted = true;
        for (int i = r + 1; i < k && exhausted; ++i)
            if (parts[static_cast<std::size_t>(i)].any()) exhausted = false;
        if (exhausted && r + 1 < l) return finish(TraceOutcome::CertifiedPartsExhausted);
    }
    return finish(TraceOutcome::CertifiedByRounds);
}

AuditResult audit_trace(const RepartitionTrace& trace, const ProductGraph& pg, const VertexSet& d) {
    auto fail = [](std::string why) { return AuditResult{false, std::move(why)}; };
    if (trace.g_order != pg.g_size || trace.h_order != pg.h_size)
        return fail("factor orders in trace do not match the product");
    if (d.universe() != pg.graph.order()) return fail("d universe does not match the product");
    if (trace.d_vertices != d.indices()) return fail("trace D differs from the supplied set");

    // region tallies, recomputed
    for (std::size_t ri = 0; ri < trace.regions.size(); ++ri) {
        const auto& reg = trace.regions[ri];
        if (reg.g_vertices.universe() != pg.g_size || reg.h_vertices.universe() != pg.h_size)
            return fail("region " + std::to_string(ri) + " has a wrong universe");
        long actual = 0;
        for (int x = d.first(); x >= 0; x = d.next(x)) {
            const auto [u, v] = pg.unflat(x);
            if (reg.g_vertices.test(u) && reg.h_vertices.test(v)) ++actual;
        }
        if (actual != reg.d_count)
            return fail("region " + std::to_string(ri) + " claims " + std::to_string(reg.d_count) +
                        " D vertices but holds " + std::to_string(actual));
    }
    // pairwise disjoint rectangles
    for (std::size_t a = 0; a < trace.regions.size(); ++a)
        for (std::size_t b = a + 1; b < trace.regions.size(); ++b) {
            const auto& ra = trace.regions[a];
            const auto& rb = trace.regions[b];
            if (ra.g_vertices.intersects(rb.g_vertices) && ra.h_vertices.intersects(rb.h_vertices))
                return fail("regions " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
        }

    const int repart_order = trace.swapped ? trace.h_order : trace.g_order;
    auto check_partition = [&](const std::vector<std::vector<int>>& parts, const std::string& where)
        -> std::optional<AuditResult> {
        std::vector<char> seen(static_cast<std::size_t>(repart_order), 0);
        long total = 0;
        for (const auto& part : parts)
            for (int v : part) {
                if (v < 0 || v >= repart_order) return fail(where + ": vertex out of range");
                if (seen[static_cast<std::size_t>(v)]++) return fail(where + ": vertex " + std::to_string(v) + " appears twice");
                ++total;
            }
        if (total != repart_order) return fail(where + ": parts do not cover the vertex set");
        return std::nullopt;
    };
    if (auto bad = check_partition(trace.initial_partition_repart, "initial partition")) return *bad;
    for (const auto& rec : trace.rounds) {
        if (auto bad = check_partition(rec.partition_after, "round " + std::to_string(rec.round) + " partition"))
            return *bad;
        std::vector<char> src_seen(static_cast<std::size_t>(repart_order), 0);
        std::vector<char> tgt_seen(static_cast<std::size_t>(repart_order), 0);
        for (auto [v, u] : rec.exchange) {
            if (v < 0 || v >= repart_order || u < 0 || u >= repart_order)
                return fail("round " + std::to_string(rec.round) + ": exchange vertex out of range");
            if (src_seen[static_cast<std::size_t>(v)]++)
                return fail("round " + std::to_string(rec.round) + ": exchange source repeated");
            if (tgt_seen[static_cast<std::size_t>(u)]++)
                return fail("round " + std::to_string(rec.round) + ": exchange map is not injective");
        }
        for (auto [v, u] : rec.exchange)
            if (src_seen[static_cast<std::size_t>(u)] || tgt_seen[static_cast<std::size_t>(v)])
                return fail("round " + std::to_string(rec.round) + ": exchange sources and targets overlap");
    }

    long total = 0;
    for (const auto& reg : trace.regions) total += reg.d_count;
    if (trace.outcome != TraceOutcome::DiagnosticFailure) {
        if (trace.certified_count != total)
            return fail("certified count " + std::to_string(trace.certified_count) +
                        " does not equal the region total " + std::to_string(total));
        if (trace.certified_count > d.count())
            return fail("certified count exceeds |D|");
        if (trace.certified_count < static_cast<long>(trace.gamma_g) * trace.gamma_h)
            return fail("certified count is below gamma(G)gamma(H)");
    }
    return AuditResult{};
}

namespace {

json set_to_json(const VertexSet& s) { return json(s.indices()); }

VertexSet set_from_json(const json& j, int universe) {
    VertexSet s(universe);
    for (const auto& v : j) s.set(v.get<int>());
    return s;
}

json label_to_json(const BlockLabel& lab) {
    json j{{"i", lab.i},
           {"j", lab.j},
           {"is_g_cell", lab.is_g_cell},
           {"is_h_cell", lab.is_h_cell},
           {"d_count_in_block", lab.d_count_in_block}};
    if (lab.witness) {
        j["witness"] = {{"empty_row", lab.witness->empty_row}, {"dominators", lab.witness->dominators}};
    }
    return j;
}

BlockLabel label_from_json(const json& j) {
    BlockLabel lab;
    lab.i = j.at("i").get<int>();
    lab.j = j.at("j").get<int>();
    lab.is_g_cell = j.at("is_g_cell").get<bool>();
    lab.is_h_cell = j.at("is_h_cell").get<bool>();
    lab.d_count_in_block = j.at("d_count_in_block").get<int>();
    if (j.contains("witness")) {
        HCellWitness w;
        w.empty_row = j["witness"].at("empty_row").get<int>();
        w.dominators = j["witness"].at("dominators").get<std::vector<std::pair<int, int>>>();
        lab.witness = std::move(w);
    }
    return lab;
}

}  // namespace

std::string trace_to_json(const RepartitionTrace& tr) {
    json j;
    j["trace_version"] = tr.version;
    j["swapped"] = tr.swapped;
    j["gamma_g"] = tr.gamma_g;
    j["gamma_h"] = tr.gamma_h;
    j["g_order"] = tr.g_order;
    j["h_order"] = tr.h_order;
    j["d_vertices"] = tr.d_vertices;
    j["initial_partition_repart"] = tr.initial_partition_repart;
    j["initial_partition_fixed"] = tr.initial_partition_fixed;
    j["rounds"] = json::array();
    for (const auto& rec : tr.rounds) {
        json rj;
        rj["round"] = rec.round;
        rj["column_is_g_cell"] = rec.column_is_g_cell;
        rj["column_labels"] = json::array();
        for (const auto& lab : rec.column_labels) rj["column_labels"].push_back(label_to_json(lab));
        rj["exchange"] = rec.exchange;
        rj["reassigned"] = rec.reassigned;
        rj["swept"] = rec.swept;
        rj["partition_after"] = rec.partition_after;
        j["rounds"].push_back(std::move(rj));
    }
    j["regions"] = json::array();
    for (const auto& reg : tr.regions) {
        j["regions"].push_back({{"g_vertices", set_to_json(reg.g_vertices)},
                                {"h_vertices", set_to_json(reg.h_vertices)},
                                {"d_count", reg.d_count},
                                {"kind", reg.kind},
                                {"round", reg.round}});
    }
    j["outcome"] = to_string(tr.outcome);
    j["certified_count"] = tr.certified_count;
    j["diagnostic"] = tr.diagnostic;
    return j.dump(2);
}

RepartitionTrace trace_from_json(const std::string& text) {
    const json j = json::parse(text);
    RepartitionTrace tr;
    tr.version = j.at("trace_version").get<int>();
    tr.swapped = j.at("swapped").get<bool>();
    tr.gamma_g = j.at("gamma_g").get<int>();
    tr.gamma_h = j.at("gamma_h").get<int>();
    tr.g_order = j.at("g_order").get<int>();
    tr.h_order = j.at("h_order").get<int>();
    tr.d_vertices = j.at("d_vertices").get<std::vector<int>>();
    tr.initial_partition_repart = j.at("initial_partition_repart").get<std::vector<std::vector<int>>>();
    tr.initial_partition_fixed = j.at("initial_partition_fixed").get<std::vector<std::vector<int>>>();
    for (const auto& rj : j.at("rounds")) {
        RoundRecord rec;
        rec.round = rj.at("round").get<int>();
        rec.column_is_g_cell = rj.at("column_is_g_cell").get<bool>();
        for (const auto& lj : rj.at("column_labels")) rec.column_labels.push_back(label_from_json(lj));
        rec.exchange = rj.at("exchange").get<std::vector<std::pair<int, int>>>();
        rec.reassigned = rj.at("reassigned").get<std::vector<std::pair<int, int>>>();
        rec.swept = rj.at("swept").get<std::vector<int>>();
        rec.partition_after = rj.at("partition_after").get<std::vector<std::vector<int>>>();
        tr.rounds.push_back(std::move(rec));
    }
    for (const auto& rj : j.at("regions")) {
        CountedRegion reg;
        reg.g_vertices = set_from_json(rj.at("g_vertices"), tr.g_order);
        reg.h_vertices = set_from_json(rj.at("h_vertices"), tr.h_order);
        reg.d_count = rj.at("d_count").get<long>();
        reg.kind = rj.at("kind").get<std::string>();
        reg.round = rj.at("round").get<int>();
        tr.regions.push_back(std::move(reg));
    }
    tr.outcome = trace_outcome_from_string(j.at("outcome").get<std::string>());
    tr.certified_count = j.at("certified_count").get<long>();
    tr.diagnostic = j.at("diagnostic").get<std::string>();
    return tr;
}

}  // namespace viz
