#ifndef COLLAPSAT_HYPERGRAPH_HPP
#define COLLAPSAT_HYPERGRAPH_HPP

#include "collapsat/simplicial_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace collapsat {

// Uniform hypergraph on {0,...,n-1}. In the partite case every edge is
// rainbow with respect to the partition (one vertex per part, since the
// number of parts equals the uniformity everywhere in this library).
struct Hypergraph {
    int n = 0;
    int uniformity = 0;
    std::vector<Face> edges; // lexicographically sorted, unique
    std::optional<VertexPartition> parts;

    bool has_edge(const Face& e) const;
    std::size_t edge_count() const { return edges.size(); }

    bool operator==(const Hypergraph& other) const {
        return n == other.n && uniformity == other.uniformity && edges == other.edges;
    }
};

// Validates and canonicalizes an edge list into a Hypergraph.
Hypergraph make_hypergraph(int n, int uniformity, std::vector<Face> edges,
                           std::optional<VertexPartition> parts = std::nullopt);

// K_n^(u): all u-subsets of {0,...,n-1}.
Hypergraph complete_host(int n, int uniformity);

// Complete multipartite host on the partition: all transversals, uniformity
// equal to the number of parts.
Hypergraph multipartite_host(const VertexPartition& parts);

// The star pattern K^(u)_{1,...,1,m}: u-1 singleton parts and one part of
// size m; all edges share a d-element core. A set color directs the copy:
// the big part must embed into that host part.
struct StarPattern {
    int uniformity = 0;
    int big_part_size = 0;
    std::optional<int> color;
};

// One justified edge addition: the added edge is core u {new_apex} and the
// created star copy has edge set {core u {u} : u in apexes}.
struct WitnessCopy {
    Face core;
    std::vector<int> apexes; // sorted; contains new_apex; disjoint from core
    int new_apex = -1;
    std::optional<int> color;
};

// A (directed) weak saturation instance: start edges plus an ordering of the
// remaining host edges, each with its witness copy.
struct SaturationInstance {
    Hypergraph host;
    std::vector<Face> start_edges;
    std::vector<StarPattern> patterns;
    std::vector<Face> order;
    std::vector<WitnessCopy> witnesses; // one per ordered edge
};

} // namespace collapsat

#endif
