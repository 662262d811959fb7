#include "collapsat/simplicial_complex.hpp"

#include "collapsat/error.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

namespace collapsat {

VertexPartition::VertexPartition(int n, std::vector<std::vector<int>> parts)
    : n_(n), parts_(std::move(parts)), part_of_(n, -1) {
    if (n <= 0) throw Error(errc::parameter_range, "partition needs a positive vertex count");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        auto& part = parts_[i];
        std::sort(part.begin(), part.end());
        if (part.empty())
            throw Error(errc::bad_input, "empty part " + std::to_string(i));
        for (int v : part) {
            if (v < 0 || v >= n)
                throw Error(errc::index_out_of_range, "part vertex " + std::to_string(v));
            if (part_of_[v] != -1)
                throw Error(errc::duplicate_vertex,
                            "vertex " + std::to_string(v) + " in two parts");
            part_of_[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v)
        if (part_of_[v] == -1)
            throw Error(errc::bad_input, "vertex " + std::to_string(v) + " not covered");
}

bool VertexPartition::is_rainbow(const Face& f) const {
    Mask seen = 0;
    for (int v : f) {
        Mask bit = Mask{1} << part_of_.at(v);
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

SimplicialComplex SimplicialComplex::build(int n, const std::vector<Face>& generators) {
    if (n < 0 || n > 63) throw Error(errc::parameter_range, "vertex count must be in [0,63]");
    std::vector<Face> sorted_gens;
    sorted_gens.reserve(generators.size());
    for (const Face& g : generators) {
        Face f = g;
        std::sort(f.begin(), f.end());
        check_face(f, n);
        sorted_gens.push_back(std::move(f));
    }
    // Keep only the inclusion-maximal generators.
    std::vector<Mask> masks;
    masks.reserve(sorted_gens.size());
    for (const Face& f : sorted_gens) masks.push_back(face_to_mask(f));
    std::vector<Face> antichain;
    for (std::size_t i = 0; i < sorted_gens.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sorted_gens.size() && !dominated; ++j) {
            if (i == j) continue;
            if (mask_subset(masks[i], masks[j]) &&
                (masks[i] != masks[j] || j < i))
                dominated = true;
        }
        if (!dominated) antichain.push_back(sorted_gens[i]);
    }
    return complex_from_antichain(n, std::move(antichain));
}

SimplicialComplex complex_from_antichain(int n, std::vector<Face> antichain) {
    std::sort(antichain.begin(), antichain.end());
    std::vector<Mask> masks;
    masks.reserve(antichain.size());
    for (const Face& f : antichain) masks.push_back(face_to_mask(f));
    return SimplicialComplex(n, std::move(antichain), std::move(masks));
}

bool SimplicialComplex::is_face(Mask m) const {
    for (Mask mf : maximal_masks_)
        if (mask_subset(m, mf)) return true;
    return false;
}

bool SimplicialComplex::is_face(const Face& f) const {
    check_face(f, n_);
    return is_face(face_to_mask(f));
}

std::optional<int> SimplicialComplex::dim() const {
    if (maximal_.empty()) return std::nullopt;
    int d = -1;
    for (const Face& f : maximal_) d = std::max(d, face_dim(f));
    return d;
}

std::vector<Face> SimplicialComplex::faces_of_size(int s) const {
    if (s < 0 || s > n_) throw Error(errc::parameter_range, "face size outside [0,n]");
    if (maximal_.empty()) return {};
    if (s == 0) return {Face{}};
    std::set<Face> found;
    for (const Face& m : maximal_)
        if (static_cast<int>(m.size()) >= s)
            for_each_subface(m, s, [&](const Face& f) { found.insert(f); });
    return {found.begin(), found.end()};
}

std::vector<Face> SimplicialComplex::nonfaces_of_size(int s) const {
    if (s < 0 || s > n_) throw Error(errc::parameter_range, "face size outside [0,n]");
    std::vector<Face> out;
    for_each_subset(n_, s, [&](const Face& f) {
        if (!is_face(face_to_mask(f))) out.push_back(f);
    });
    return out;
}

std::vector<Face> SimplicialComplex::rainbow_faces(const VertexPartition& P, int s) const {
    if (P.n() != n_) throw Error(errc::part_count_mismatch, "partition covers a different vertex set");
    if (s > P.part_count()) return {};
    std::vector<Face> out;
    for (const Face& f : faces_of_size(s))
        if (P.is_rainbow(f)) out.push_back(f);
    return out;
}

std::pair<SimplicialComplex, std::vector<int>> SimplicialComplex::induced(
    const std::vector<int>& S) const {
    std::vector<int> verts = S;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= n_) throw Error(errc::index_out_of_range, "induced vertex " + std::to_string(v));

    std::vector<int> new_index(n_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) new_index[verts[i]] = static_cast<int>(i);

    std::vector<Face> gens;
    for (const Face& m : maximal_) {
        Face g;
        for (int v : m)
            if (new_index[v] != -1) g.push_back(new_index[v]);
        gens.push_back(std::move(g));
    }
    return {SimplicialComplex::build(static_cast<int>(verts.size()), gens), verts};
}

std::uint64_t SimplicialComplex::face_count() const {
    if (maximal_.empty()) return 0;
    std::unordered_set<Mask> seen;
    std::vector<Mask> stack(maximal_masks_.begin(), maximal_masks_.end());
    while (!stack.empty()) {
        Mask m = stack.back();
        stack.pop_back();
        if (!seen.insert(m).second) continue;
        for (Mask rest = m; rest;) {
            Mask bit = rest & (~rest + 1);
            rest &= rest - 1;
            Mask sub = m & ~bit;
            if (!seen.contains(sub)) stack.push_back(sub);
        }
    }
    return seen.size();
}

} // namespace collapsat
