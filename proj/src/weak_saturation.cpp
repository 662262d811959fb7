#include "collapsat/weak_saturation.hpp"

#include "collapsat/error.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <unordered_set>

namespace collapsat {

namespace {

std::string face_str(const Face& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + "]";
}

using EdgeSet = std::unordered_set<Mask>;

struct AddContext {
    int n = 0;
    int uniformity = 0;
    const VertexPartition* parts = nullptr;
    const std::vector<StarPattern>* fam = nullptr;
};

// Star-pattern addability: some size-d core of e must see at least
// big_part_size apexes u with core u {u} already an edge (counting e itself).
std::optional<WitnessCopy> addable_edge(const AddContext& ctx, const EdgeSet& edges,
                                        const Face& e) {
    Mask emask = face_to_mask(e);
    auto has = [&](Mask m) { return m == emask || edges.contains(m); };

    for (const StarPattern& p : *ctx.fam) {
        int m = p.big_part_size;
        std::vector<std::pair<Face, int>> cores; // (core, mandatory apex)
        if (p.color) {
            Face core;
            int mandatory = -1;
            for (int v : e) {
                if (ctx.parts->part_of(v) == *p.color)
                    mandatory = v;
                else
                    core.push_back(v);
            }
            if (mandatory < 0) continue; // e misses the pattern's color
            cores.emplace_back(std::move(core), mandatory);
        } else {
            for_each_subface(e, ctx.uniformity - 1, [&](const Face& core) {
                Face rest = face_minus(e, core);
                cores.emplace_back(core, rest.front());
            });
        }

        for (const auto& [core, mandatory] : cores) {
            Mask cmask = face_to_mask(core);
            std::vector<int> candidates;
            auto consider = [&](int u) {
                if (face_contains(core, u)) return;
                if (has(cmask | (Mask{1} << u))) candidates.push_back(u);
            };
            if (p.color)
                for (int u : ctx.parts->part(*p.color)) consider(u);
            else
                for (int u = 0; u < ctx.n; ++u) consider(u);

            if (static_cast<int>(candidates.size()) < m) continue;
            WitnessCopy w;
            w.core = core;
            w.new_apex = mandatory;
            w.color = p.color;
            w.apexes.push_back(mandatory);
            for (int u : candidates) {
                if (static_cast<int>(w.apexes.size()) >= m) break;
                if (u != mandatory) w.apexes.push_back(u);
            }
            std::sort(w.apexes.begin(), w.apexes.end());
            return w;
        }
    }
    return std::nullopt;
}

AddContext context_for(const Hypergraph& host, const std::vector<StarPattern>& fam) {
    AddContext ctx;
    ctx.n = host.n;
    ctx.uniformity = host.uniformity;
    ctx.parts = host.parts ? &*host.parts : nullptr;
    ctx.fam = &fam;
    for (const StarPattern& p : fam) {
        if (p.uniformity != host.uniformity)
            throw Error(errc::wrong_size, "pattern uniformity differs from host");
        if (p.big_part_size < 1)
            throw Error(errc::parameter_range, "pattern big part must be >= 1");
        if (p.color && !ctx.parts)
            throw Error(errc::bad_input, "colored pattern needs a partite host");
        if (p.color && (*p.color < 0 || *p.color >= ctx.parts->part_count()))
            throw Error(errc::index_out_of_range, "pattern color out of range");
    }
    return ctx;
}

EdgeSet to_mask_set(const std::vector<Face>& edges) {
    EdgeSet s;
    s.reserve(edges.size() * 2);
    for (const Face& e : edges) s.insert(face_to_mask(e));
    return s;
}

// Sweeps host edges in lexicographic order until a fixpoint, recording
// additions. The fixpoint does not depend on the sweep order.
std::vector<std::pair<Face, WitnessCopy>> close_in_place(const AddContext& ctx, EdgeSet& cur,
                                                         const Hypergraph& host) {
    std::vector<std::pair<Face, WitnessCopy>> trace;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Face& e : host.edges) {
            if (cur.contains(face_to_mask(e))) continue;
            if (auto w = addable_edge(ctx, cur, e)) {
                cur.insert(face_to_mask(e));
                trace.emplace_back(e, std::move(*w));
                changed = true;
            }
        }
    }
    return trace;
}

Hypergraph from_mask_set(const Hypergraph& host, const EdgeSet& s) {
    std::vector<Face> edges;
    edges.reserve(s.size());
    for (const Face& e : host.edges)
        if (s.contains(face_to_mask(e))) edges.push_back(e);
    return make_hypergraph(host.n, host.uniformity, std::move(edges), host.parts);
}

void check_subhypergraph(const Hypergraph& H, const Hypergraph& host) {
    if (H.n != host.n || H.uniformity != host.uniformity)
        throw Error(errc::not_subhypergraph, "vertex count or uniformity differs from host");
    for (const Face& e : H.edges)
        if (!host.has_edge(e))
            throw Error(errc::not_subhypergraph, "edge " + face_str(e) + " not in host");
}

} // namespace

bool Hypergraph::has_edge(const Face& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Hypergraph make_hypergraph(int n, int uniformity, std::vector<Face> edges,
                           std::optional<VertexPartition> parts) {
    if (n < 0 || n > 63) throw Error(errc::parameter_range, "vertex count must be in [0,63]");
    if (uniformity < 1) throw Error(errc::parameter_range, "uniformity must be >= 1");
    if (parts && parts->n() != n)
        throw Error(errc::part_count_mismatch, "partition covers a different vertex set");
    for (Face& e : edges) {
        std::sort(e.begin(), e.end());
        check_face(e, n);
        if (static_cast<int>(e.size()) != uniformity)
            throw Error(errc::wrong_size, "edge " + face_str(e) + " has wrong size");
        if (parts && !parts->is_rainbow(e))
            throw Error(errc::not_rainbow, "edge " + face_str(e) + " is not rainbow");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph{n, uniformity, std::move(edges), std::move(parts)};
}

Hypergraph complete_host(int n, int uniformity) {
    std::vector<Face> edges;
    for_each_subset(n, uniformity, [&](const Face& e) { edges.push_back(e); });
    return make_hypergraph(n, uniformity, std::move(edges));
}

Hypergraph multipartite_host(const VertexPartition& parts) {
    std::vector<Face> edges;
    Face cur;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == parts.part_count()) {
            Face e = cur;
            std::sort(e.begin(), e.end());
            edges.push_back(std::move(e));
            return;
        }
        for (int v : parts.part(i)) {
            cur.push_back(v);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return make_hypergraph(parts.n(), parts.part_count(), std::move(edges), parts);
}

std::optional<WitnessCopy> addable(const Hypergraph& H, const Face& e,
                                   const std::vector<StarPattern>& fam) {
    Face es = e;
    std::sort(es.begin(), es.end());
    check_face(es, H.n);
    if (static_cast<int>(es.size()) != H.uniformity)
        throw Error(errc::wrong_size, "edge " + face_str(es) + " has wrong size");
    if (H.parts && !H.parts->is_rainbow(es))
        throw Error(errc::not_rainbow, "edge " + face_str(es) + " is not rainbow");
    if (H.has_edge(es))
        throw Error(errc::bad_input, "edge " + face_str(es) + " already present");
    AddContext ctx = context_for(H, fam);
    EdgeSet cur = to_mask_set(H.edges);
    return addable_edge(ctx, cur, es);
}

std::pair<Hypergraph, std::vector<std::pair<Face, WitnessCopy>>>
closure_with_trace(const Hypergraph& H, const std::vector<StarPattern>& fam,
                   const Hypergraph& host) {
    check_subhypergraph(H, host);
    AddContext ctx = context_for(host, fam);
    EdgeSet cur = to_mask_set(H.edges);
    auto trace = close_in_place(ctx, cur, host);
    return {from_mask_set(host, cur), std::move(trace)};
}

Hypergraph closure(const Hypergraph& H, const std::vector<StarPattern>& fam,
                   const Hypergraph& host) {
    return closure_with_trace(H, fam, host).first;
}

SaturationVerifyResult verify_saturation_sequence(const SaturationInstance& inst) {
    SaturationVerifyResult res;
    const Hypergraph& host = inst.host;

    EdgeSet cur;
    for (const Face& e : inst.start_edges) {
        if (!host.has_edge(e)) {
            res.reason = "start edge " + face_str(e) + " not in host";
            return res;
        }
        cur.insert(face_to_mask(e));
    }
    if (cur.size() != inst.start_edges.size()) {
        res.reason = "duplicate start edge";
        return res;
    }
    if (inst.order.size() != inst.witnesses.size()) {
        res.reason = "witness count differs from order length";
        return res;
    }
    // Permutation of host minus start.
    {
        EdgeSet seen = cur;
        for (const Face& e : inst.order) {
            if (!host.has_edge(e)) {
                res.reason = "ordered edge " + face_str(e) + " not in host";
                return res;
            }
            if (!seen.insert(face_to_mask(e)).second) {
                res.reason = "edge " + face_str(e) + " repeated or already a start edge";
                return res;
            }
        }
        if (seen.size() != host.edges.size()) {
            res.reason = "order is not a permutation of host minus start";
            return res;
        }
    }

    auto fail = [&](std::size_t k, const std::string& why) {
        res.failed_index = k;
        res.reason = why;
        return res;
    };

    for (std::size_t k = 0; k < inst.order.size(); ++k) {
        const Face& e = inst.order[k];
        const WitnessCopy& w = inst.witnesses[k];
        Mask emask = face_to_mask(e);

        if (static_cast<int>(w.core.size()) != host.uniformity - 1)
            return fail(k, "witness core has wrong size");
        Face expanded = face_union(w.core, {w.new_apex});
        if (expanded != e || face_contains(w.core, w.new_apex))
            return fail(k, "witness core plus new apex does not give the edge");
        if (!std::binary_search(w.apexes.begin(), w.apexes.end(), w.new_apex))
            return fail(k, "witness apexes do not contain the new apex");
        for (int u : w.apexes)
            if (face_contains(w.core, u)) return fail(k, "witness apexes meet the core");

        bool pattern_found = false;
        for (const StarPattern& p : inst.patterns)
            if (p.color == w.color &&
                static_cast<int>(w.apexes.size()) >= p.big_part_size) {
                pattern_found = true;
                break;
            }
        if (!pattern_found)
            return fail(k, "no family pattern matches the witness size and color");

        if (w.color) {
            if (!host.parts) return fail(k, "colored witness on an unpartitioned host");
            for (int u : w.apexes)
                if (host.parts->part_of(u) != *w.color)
                    return fail(k, "witness apex outside its color class");
        }

        Mask cmask = face_to_mask(w.core);
        for (int u : w.apexes) {
            Mask copy_edge = cmask | (Mask{1} << u);
            if (copy_edge != emask && !cur.contains(copy_edge))
                return fail(k, "copy edge " + face_str(mask_to_face(copy_edge)) +
                                   " absent at step " + std::to_string(k));
        }
        cur.insert(emask);
    }

    if (cur.size() != host.edges.size()) {
        res.reason = "final edge set differs from host";
        return res;
    }
    res.ok = true;
    return res;
}

WsatResult wsat_bruteforce(const Hypergraph& host, const std::vector<StarPattern>& fam,
                           bool directed, std::size_t edge_cap, int jobs) {
    if (host.edge_count() > edge_cap)
        throw Error(errc::host_too_large, std::to_string(host.edge_count()) + " edges exceed cap " +
                                              std::to_string(edge_cap));
    if (directed && !host.parts)
        throw Error(errc::bad_input, "directed search needs a partite host");
    for (const StarPattern& p : fam)
        if (directed != p.color.has_value())
            throw Error(errc::bad_input, "pattern direction does not match the directed flag");

    AddContext ctx = context_for(host, fam);
    const int E = static_cast<int>(host.edge_count());

    auto percolates = [&](const Face& subset_indices) {
        EdgeSet cur;
        cur.reserve(host.edge_count() * 2);
        for (int idx : subset_indices) cur.insert(face_to_mask(host.edges[idx]));
        close_in_place(ctx, cur, host);
        return cur.size() == host.edge_count();
    };

    auto build_result = [&](int k, const Face& subset_indices) {
        std::vector<Face> edges;
        for (int idx : subset_indices) edges.push_back(host.edges[idx]);
        return WsatResult{static_cast<std::uint64_t>(k),
                          make_hypergraph(host.n, host.uniformity, std::move(edges), host.parts)};
    };

    for (int k = 0; k <= E; ++k) {
        std::uint64_t total = binomial(E, k);
        if (jobs <= 1 || total < 64) {
            std::optional<Face> found;
            for_each_subset(E, k, [&](const Face& subset) {
                if (!found && percolates(subset)) found = subset;
            });
            if (found) return build_result(k, *found);
            continue;
        }

        // Deterministic parallel scan: the winner is the least successful
        // rank in the lexicographic enumeration, independent of scheduling.
        std::atomic<std::uint64_t> best{UINT64_MAX};
        int workers = std::min<std::uint64_t>(jobs, total);
        std::uint64_t chunk = (total + workers - 1) / workers;
        std::vector<std::thread> pool;
        for (int wi = 0; wi < workers; ++wi) {
            pool.emplace_back([&, wi] {
                std::uint64_t lo = static_cast<std::uint64_t>(wi) * chunk;
                std::uint64_t hi = std::min(total, lo + chunk);
                if (lo >= hi) return;
                Face subset = kth_subset(E, k, lo);
                for (std::uint64_t r = lo; r < hi; ++r) {
                    if (r >= best.load(std::memory_order_relaxed)) return;
                    if (percolates(subset)) {
                        std::uint64_t prev = best.load(std::memory_order_relaxed);
                        while (r < prev &&
                               !best.compare_exchange_weak(prev, r, std::memory_order_relaxed)) {
                        }
                        return;
                    }
                    // advance to the next combination in lexicographic order
                    int i = k - 1;
                    while (i >= 0 && subset[i] == E - k + i) --i;
                    if (i < 0) break;
                    ++subset[i];
                    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
                }
            });
        }
        for (auto& t : pool) t.join();
        std::uint64_t r = best.load();
        if (r != UINT64_MAX) return build_result(k, kth_subset(E, k, r));
    }
    throw Error(errc::bad_input, "host is not reachable from any subset"); // unreachable: k = E closes trivially
}

} // namespace collapsat
