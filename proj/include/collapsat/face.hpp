#ifndef COLLAPSAT_FACE_HPP
#define COLLAPSAT_FACE_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace collapsat {

// A face is a strictly increasing list of 0-based vertex indices. The empty
// list is the empty face. Faces double as hypergraph edges.
using Face = std::vector<int>;

// Bit-set form of a face; callers must keep the ambient vertex count <= 63.
using Mask = std::uint64_t;

// Validates strict increase and 0 <= v < n; throws Error on violation.
void check_face(const Face& f, int n);

Mask face_to_mask(const Face& f);
Face mask_to_face(Mask m);

inline bool mask_subset(Mask a, Mask b) { return (a & b) == a; }

int face_dim(const Face& f);

// n choose k as unsigned 64-bit; throws on overflow.
std::uint64_t binomial(int n, int k);

// Calls fn on every k-subset of {0,...,n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const Face&)>& fn);

// Calls fn on every k-subset of the (sorted) base face, lexicographic.
void for_each_subface(const Face& base, int k, const std::function<void(const Face&)>& fn);

// The rank-th k-subset of {0,...,n-1} in lexicographic order (rank 0-based).
Face kth_subset(int n, int k, std::uint64_t rank);

// Sorted union/difference helpers for faces.
Face face_union(const Face& a, const Face& b);
Face face_minus(const Face& a, const Face& b);
bool face_contains(const Face& a, int v);

} // namespace collapsat

#endif
