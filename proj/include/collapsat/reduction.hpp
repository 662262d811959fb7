#ifndef COLLAPSAT_REDUCTION_HPP
#define COLLAPSAT_REDUCTION_HPP

#include "collapsat/collapse.hpp"
#include "collapsat/hypergraph.hpp"

#include <vector>

namespace collapsat {

// Turns a verified d-collapse sequence of K into a weak saturation sequence
// of the (d+1)-uniform non-face hypergraph of K inside the complete host.
// Start edges are the d-dimensional non-faces; the single pattern is the
// star with big part n-d-r+1. Requires dim(K) <= d+r-1 and d+r <= n.
//
// Step j with |tau_j| >= d+1 contributes the edges {w} u sigma_j for
// w in tau_j \ sigma_j in ascending order of w; the witness for such an edge
// is the star with core sigma_j and apexes (V \ tau_j) u {w}.
SaturationInstance reduce_fractional(const SimplicialComplex& K, int d, int r,
                                     const CollapseSequence& seq);

// The least r satisfying the dimension hypothesis, max(0, dim(K)+1-d).
int infer_r(const SimplicialComplex& K, int d);

// Directed analog on the complete multipartite host: start edges are the
// rainbow non-faces of size d+1 (d+1 = number of parts), the pattern family
// has one colored star per part with big part n_i - r_i + 1. A step whose
// sigma_j is rainbow misses exactly one color i and contributes the edges
// {w} u sigma_j for w in tau_j n V_i with witness apexes (V_i \ tau_j) u {w};
// non-rainbow sigma_j contribute nothing. Requires dim(K[V_i]) <= r_i - 1
// and n_i >= r_i for every part.
SaturationInstance reduce_colorful(const SimplicialComplex& K, const VertexPartition& P,
                                   const std::vector<int>& r_vec, const CollapseSequence& seq);

// Per-part defaults max(0, dim(K[V_i])+1).
std::vector<int> infer_r_vec(const SimplicialComplex& K, const VertexPartition& P);

} // namespace collapsat

#endif
