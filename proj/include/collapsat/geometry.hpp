#ifndef COLLAPSAT_GEOMETRY_HPP
#define COLLAPSAT_GEOMETRY_HPP

#include "collapsat/hypergraph.hpp"
#include "collapsat/rational.hpp"
#include "collapsat/simplicial_complex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace collapsat {

// Axis-aligned closed box with exact rational corners; k = 1 models an
// interval. Tangent boxes count as intersecting.
struct Box {
    std::vector<Rational> lo;
    std::vector<Rational> hi;

    int axes() const { return static_cast<int>(lo.size()); }
};

Box make_box(std::vector<Rational> lo, std::vector<Rational> hi);
Box make_interval(Rational lo, Rational hi);

bool boxes_intersect(const std::vector<Box>& family, const std::vector<int>& subset);

// Nerve of the family: faces are the subfamilies with a common point,
// enumerated level by level (a subfamily is tested only when all its facets
// are faces). Any intersecting subfamily of size cap+1 raises cap_exceeded
// instead of being silently dropped.
SimplicialComplex nerve(const std::vector<Box>& family, int cap);

enum class FamilyKind { Intervals, Boxes };

inline constexpr int kRejectionBudget = 1000;

// Deterministic pseudo-random family from the seed; endpoints are dyadic
// rationals on a 1/256 grid. With max_overlap set, whole-family rejection
// sampling bounds the size of every intersecting subfamily.
std::vector<Box> gen_family(FamilyKind kind, int k, int n, std::uint64_t seed,
                            std::optional<int> max_overlap = std::nullopt,
                            int rejection_budget = kRejectionBudget);

// The clique on the last n-r vertices, as all (d+1)-subsets.
Hypergraph clique_construction(int n, int d, int r);

// Complete multipartite hypergraph on the last n_i - r_i vertices per part.
Hypergraph multipartite_construction(const VertexPartition& P, const std::vector<int>& r_vec);

} // namespace collapsat

#endif
