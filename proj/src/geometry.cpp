#include "collapsat/geometry.hpp"

#include "collapsat/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <string>

namespace collapsat {

namespace {

// Common intersection of the boxes selected by mask, empty_opt if none.
std::optional<Box> intersection_box(const std::vector<Box>& family, const Box& acc, int v) {
    Box out = acc;
    const Box& b = family[v];
    for (int a = 0; a < out.axes(); ++a) {
        if (b.lo[a] > out.lo[a]) out.lo[a] = b.lo[a];
        if (b.hi[a] < out.hi[a]) out.hi[a] = b.hi[a];
        if (out.lo[a] > out.hi[a]) return std::nullopt;
    }
    return out;
}

} // namespace

Box make_box(std::vector<Rational> lo, std::vector<Rational> hi) {
    if (lo.size() != hi.size() || lo.empty())
        throw Error(errc::bad_input, "box needs matching lo/hi per axis");
    for (std::size_t a = 0; a < lo.size(); ++a)
        if (lo[a] > hi[a])
            throw Error(errc::bad_input, "box has lo > hi on axis " + std::to_string(a));
    return Box{std::move(lo), std::move(hi)};
}

Box make_interval(Rational lo, Rational hi) {
    return make_box({std::move(lo)}, {std::move(hi)});
}

bool boxes_intersect(const std::vector<Box>& family, const std::vector<int>& subset) {
    if (subset.empty()) return true;
    for (int v : subset)
        if (v < 0 || v >= static_cast<int>(family.size()))
            throw Error(errc::index_out_of_range, "box index " + std::to_string(v));
    Box acc = family[subset.front()];
    for (std::size_t i = 1; i < subset.size(); ++i) {
        auto next = intersection_box(family, acc, subset[i]);
        if (!next) return false;
        acc = *next;
    }
    return true;
}

SimplicialComplex nerve(const std::vector<Box>& family, int cap) {
    const int n = static_cast<int>(family.size());
    if (n == 0) return SimplicialComplex::build(0, {});
    if (n > 63) throw Error(errc::parameter_range, "family too large");
    if (cap < 1) throw Error(errc::parameter_range, "cap must be >= 1");
    const int k = family.front().axes();
    for (const Box& b : family)
        if (b.axes() != k) throw Error(errc::bad_input, "boxes have differing axis counts");

    // Level-wise enumeration; a subfamily is tested only if all its facets
    // intersect. Each face carries its intersection box.
    std::vector<Face> all_faces;
    std::map<Mask, Box> level;
    for (int v = 0; v < n; ++v) {
        level.emplace(Mask{1} << v, family[v]);
        all_faces.push_back({v});
    }
    for (int s = 2; s <= cap + 1 && !level.empty(); ++s) {
        std::map<Mask, Box> next;
        for (const auto& [mask, box] : level) {
            int top = 63 - std::countl_zero(mask);
            for (int v = top + 1; v < n; ++v) {
                Mask cand = mask | (Mask{1} << v);
                bool facets_ok = true;
                for (Mask rest = mask; rest && facets_ok;) {
                    Mask bit = rest & (~rest + 1);
                    rest &= rest - 1;
                    if (!level.contains(cand & ~bit)) facets_ok = false;
                }
                if (!facets_ok) continue;
                auto meet = intersection_box(family, box, v);
                if (!meet) continue;
                if (s == cap + 1)
                    throw Error(errc::cap_exceeded,
                                "intersecting subfamily of size " + std::to_string(s) +
                                    " exceeds cap " + std::to_string(cap));
                next.emplace(cand, std::move(*meet));
            }
        }
        for (const auto& [mask, box] : next) all_faces.push_back(mask_to_face(mask));
        level = std::move(next);
    }
    return SimplicialComplex::build(n, all_faces);
}

std::vector<Box> gen_family(FamilyKind kind, int k, int n, std::uint64_t seed,
                            std::optional<int> max_overlap, int rejection_budget) {
    if (n < 1) throw Error(errc::parameter_range, "need at least one box");
    if (kind == FamilyKind::Intervals) k = 1;
    if (k < 1) throw Error(errc::parameter_range, "need at least one axis");
    if (max_overlap && *max_overlap < 1)
        throw Error(errc::parameter_range, "max_overlap must be >= 1");

    // Endpoints live on the 1/256 grid in [0, 5/4]; widths in [1/256, 1/4].
    // Raw engine output keeps the stream portable (256 and 64 divide 2^64,
    // so taking residues is unbiased).
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < rejection_budget; ++attempt) {
        std::vector<Box> family;
        family.reserve(n);
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> lo(k), hi(k);
            for (int a = 0; a < k; ++a) {
                int start = static_cast<int>(rng() % 256);
                int len = 1 + static_cast<int>(rng() % 64);
                lo[a] = Rational(start, 256);
                hi[a] = Rational(start + len, 256);
            }
            family.push_back(make_box(std::move(lo), std::move(hi)));
        }
        if (!max_overlap) return family;
        try {
            nerve(family, *max_overlap);
            return family;
        } catch (const Error& e) {
            if (e.code() != errc::cap_exceeded) throw;
        }
    }
    throw Error(errc::rejection_budget_exceeded,
                "no admissible family within " + std::to_string(rejection_budget) + " attempts");
}

Hypergraph clique_construction(int n, int d, int r) {
    if (d < 1 || r < 0 || r > n - d)
        throw Error(errc::parameter_range, "need d >= 1 and 0 <= r <= n - d");
    std::vector<Face> edges;
    for_each_subset(n - r, d + 1, [&](const Face& f) {
        Face e = f;
        for (int& v : e) v += r;
        edges.push_back(std::move(e));
    });
    return make_hypergraph(n, d + 1, std::move(edges));
}

Hypergraph multipartite_construction(const VertexPartition& P, const std::vector<int>& r_vec) {
    if (static_cast<int>(r_vec.size()) != P.part_count())
        throw Error(errc::part_count_mismatch, "r vector length differs from part count");
    for (int i = 0; i < P.part_count(); ++i)
        if (r_vec[i] < 0 || r_vec[i] > P.part_size(i))
            throw Error(errc::parameter_range, "need 0 <= r_i <= n_i");

    std::vector<Face> edges;
    Face cur;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == P.part_count()) {
            Face e = cur;
            std::sort(e.begin(), e.end());
            edges.push_back(std::move(e));
            return;
        }
        const auto& part = P.part(i);
        for (std::size_t p = r_vec[i]; p < part.size(); ++p) {
            cur.push_back(part[p]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return make_hypergraph(P.n(), P.part_count(), std::move(edges), P);
}

} // namespace collapsat
