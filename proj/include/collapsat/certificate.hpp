#ifndef COLLAPSAT_CERTIFICATE_HPP
#define COLLAPSAT_CERTIFICATE_HPP

#include "collapsat/hypergraph.hpp"
#include "collapsat/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace collapsat {

// Homogeneous degree-one polynomial over one variable block, as its
// coefficient vector. Exact rationals only; no floating point in this module.
struct LinearForm {
    std::vector<Rational> coeffs;
};

// Form j has coefficients (1, t, t^2, ..., t^(dim-1)) with t = j. Any dim of
// them are linearly independent (Vandermonde), which realizes general
// position deterministically. dim = 0 yields zero forms.
std::vector<LinearForm> moment_forms(int count, int dim);

// Assignment of one linear form per vertex together with the monomial basis
// the degree-(d+1) products live in.
//
// Symmetric: every vertex's form is over one block of `block_dims[0]`
// variables; basis keys are sorted size-(degree) multisets of variable
// indices, ordered lexicographically (graded-lex on exponent vectors).
//
// Rainbow: one block per part; a vertex's form is over its part's block and
// basis keys are tuples (j_1,...,j_degree), one index per block, ordered
// lexicographically. Only rainbow monomials occur.
struct FormSystem {
    enum class Kind { Symmetric, Rainbow };

    Kind kind = Kind::Symmetric;
    int degree = 0;                // number of factors in each product
    std::vector<LinearForm> forms; // one per vertex
    std::vector<int> block_of;     // vertex -> block index
    std::vector<int> block_dims;   // variables per block
};

// Moment assignment for the complete host: one block of n-d-r variables,
// vertex v gets t = v.
FormSystem symmetric_system(int n, int d, int r);

// Moment assignment per part: block i has n_i - r_i variables and the k-th
// vertex of part i (in ascending vertex order) gets t = k.
FormSystem rainbow_system(const VertexPartition& P, const std::vector<int>& r_vec);

// Sparse exact-rational vector in the system's monomial basis.
struct MonomialVector {
    std::map<std::vector<int>, Rational> coords; // zero entries omitted

    bool is_zero() const { return coords.empty(); }
};

// Expanded product of the forms of e's vertices.
MonomialVector edge_vector(const Face& e, const FormSystem& sys);

// All basis keys in canonical order.
std::vector<std::vector<int>> monomial_basis(const FormSystem& sys);

// Exact rank of a rational matrix via fraction-free (Bareiss) elimination;
// pivots are the first nonzero entries in row-major scan order. Also returns
// the original indices of the pivot rows.
std::pair<std::uint64_t, std::vector<std::size_t>>
exact_rank(const std::vector<std::vector<Rational>>& rows);

struct CertificateReport {
    std::uint64_t rank = 0;
    std::uint64_t bound = 0;
    std::vector<Face> basis_edges;
};

// Rank of the edge-vector family over all edges of the complete host
// K_n^(d+1) with the moment assignment; bound = C(n-r, d+1). Throws Error
// (rank_mismatch) if rank != bound, which cannot happen for moment forms.
CertificateReport certificate_rank(const Hypergraph& host, int r);

// Colorful analog on the complete multipartite host; bound = prod(n_i - r_i).
CertificateReport certificate_rank_colorful(const Hypergraph& host,
                                            const std::vector<int>& r_vec);

// True iff every edge vector of the star copy lies in the exact span of the
// other copy edges' vectors.
bool verify_span_condition(const WitnessCopy& copy, const FormSystem& sys);

struct LemmaReplayResult {
    bool ok = false;
    std::optional<std::size_t> failed_index; // first order position outside the span
};

// Replays the span argument: starting from the span of the start-edge
// vectors, every ordered edge's vector must already lie in the span of the
// vectors seen so far.
LemmaReplayResult replay_lemma(const SaturationInstance& inst, const FormSystem& sys);

// Convenience overload deriving the moment system from the instance: the
// pattern big part m pins the variable count to m-1 (per block in the
// directed case).
LemmaReplayResult replay_lemma(const SaturationInstance& inst);

FormSystem system_for_instance(const SaturationInstance& inst);

} // namespace collapsat

#endif
