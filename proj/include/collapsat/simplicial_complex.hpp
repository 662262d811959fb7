#ifndef COLLAPSAT_SIMPLICIAL_COMPLEX_HPP
#define COLLAPSAT_SIMPLICIAL_COMPLEX_HPP

#include "collapsat/face.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace collapsat {

// Disjoint nonempty vertex sets covering {0,...,n-1}.
class VertexPartition {
public:
    VertexPartition(int n, std::vector<std::vector<int>> parts);

    int n() const { return n_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    const std::vector<std::vector<int>>& parts() const { return parts_; }
    const std::vector<int>& part(int i) const { return parts_.at(i); }
    int part_size(int i) const { return static_cast<int>(parts_.at(i).size()); }
    int part_of(int v) const { return part_of_.at(v); }

    // At most one vertex per part.
    bool is_rainbow(const Face& f) const;

private:
    int n_;
    std::vector<std::vector<int>> parts_;
    std::vector<int> part_of_;
};

// Finite abstract simplicial complex, stored as the antichain of its maximal
// faces; downward closure is implicit in every query. Immutable after
// construction. The void complex (no faces at all) is distinct from the
// complex whose only face is the empty one.
class SimplicialComplex {
public:
    // Normalizes generators to an inclusion-maximal antichain. An empty
    // generator list yields the void complex.
    static SimplicialComplex build(int n, const std::vector<Face>& generators);

    int n() const { return n_; }
    const std::vector<Face>& maximal_faces() const { return maximal_; }

    bool is_void() const { return maximal_.empty(); }
    bool is_face(const Face& f) const;
    bool is_face(Mask m) const;

    // nullopt for the void complex, -1 when only the empty face is present.
    std::optional<int> dim() const;

    // All faces of the given size, lexicographically sorted.
    std::vector<Face> faces_of_size(int s) const;

    // s-subsets of the vertex set that are not faces, lexicographically sorted.
    std::vector<Face> nonfaces_of_size(int s) const;

    // Faces of size s meeting every part of P at most once. Returns an empty
    // list when s exceeds the number of parts.
    std::vector<Face> rainbow_faces(const VertexPartition& P, int s) const;

    // Subcomplex on the (re-indexed) vertex set S, plus the map from new
    // indices back to the original ones.
    std::pair<SimplicialComplex, std::vector<int>> induced(const std::vector<int>& S) const;

    // Total number of faces (including the empty face when present).
    std::uint64_t face_count() const;

    bool operator==(const SimplicialComplex& other) const {
        return n_ == other.n_ && maximal_ == other.maximal_;
    }

private:
    SimplicialComplex(int n, std::vector<Face> maximal, std::vector<Mask> masks)
        : n_(n), maximal_(std::move(maximal)), maximal_masks_(std::move(masks)) {}

    friend SimplicialComplex complex_from_antichain(int n, std::vector<Face> antichain);

    int n_ = 0;
    std::vector<Face> maximal_;
    std::vector<Mask> maximal_masks_;
};

// Fast path for callers that already hold a valid antichain (collapse steps).
SimplicialComplex complex_from_antichain(int n, std::vector<Face> antichain);

} // namespace collapsat

#endif
