#ifndef COLLAPSAT_WEAK_SATURATION_HPP
#define COLLAPSAT_WEAK_SATURATION_HPP

#include "collapsat/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace collapsat {

// Decides whether adding e to H creates a copy of some pattern in fam
// containing e. For star patterns this is a core-count test: some core
// sigma < e with |sigma| = uniformity-1 must see at least big_part_size
// vertices u with sigma u {u} in E(H) u {e} (u restricted to the pattern's
// colored part in the directed case, where the core is forced to e \ V_i).
// The returned witness has exactly big_part_size apexes, chosen
// lexicographically but always including e's own apex.
std::optional<WitnessCopy> addable(const Hypergraph& H, const Face& e,
                                   const std::vector<StarPattern>& fam);

// Least superset of H closed under adding addable host edges; computed by
// repeated sweeps in lexicographic edge order until a fixpoint. The result
// is order independent because addability is monotone in the edge set.
Hypergraph closure(const Hypergraph& H, const std::vector<StarPattern>& fam,
                   const Hypergraph& host);

// Closure that also records the addition order and witnesses; the trace
// verifies as a saturation sequence whenever the closure reaches the host.
std::pair<Hypergraph, std::vector<std::pair<Face, WitnessCopy>>>
closure_with_trace(const Hypergraph& H, const std::vector<StarPattern>& fam,
                   const Hypergraph& host);

struct SaturationVerifyResult {
    bool ok = false;
    std::optional<std::size_t> failed_index; // first failing position in order
    std::string reason;
};

// Accepts iff order is a permutation of host minus start, every ordered edge's
// supplied witness is valid at its turn (no witness search on failure), and
// the final edge set equals the host.
SaturationVerifyResult verify_saturation_sequence(const SaturationInstance& inst);

struct WsatResult {
    std::uint64_t k = 0;
    Hypergraph optimal_start;
};

inline constexpr std::size_t kDefaultWsatEdgeCap = 20;

// Least k such that some k-subset of host edges has closure equal to the
// host; ties broken by lexicographic subset order, so the reported start is
// the lexicographically least optimum. jobs > 1 splits each size class into
// rank ranges with a deterministic min-reduction.
WsatResult wsat_bruteforce(const Hypergraph& host, const std::vector<StarPattern>& fam,
                           bool directed, std::size_t edge_cap = kDefaultWsatEdgeCap,
                           int jobs = 1);

} // namespace collapsat

#endif
