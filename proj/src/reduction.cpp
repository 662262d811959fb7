#include "collapsat/reduction.hpp"

#include "collapsat/error.hpp"

#include <algorithm>
#include <string>

namespace collapsat {

int infer_r(const SimplicialComplex& K, int d) {
    auto dim = K.dim();
    if (!dim) return 0;
    return std::max(0, *dim + 1 - d);
}

std::vector<int> infer_r_vec(const SimplicialComplex& K, const VertexPartition& P) {
    std::vector<int> r;
    r.reserve(P.part_count());
    for (int i = 0; i < P.part_count(); ++i) {
        auto [sub, back] = K.induced(P.part(i));
        auto dim = sub.dim();
        r.push_back(dim ? std::max(0, *dim + 1) : 0);
    }
    return r;
}

SaturationInstance reduce_fractional(const SimplicialComplex& K, int d, int r,
                                     const CollapseSequence& seq) {
    const int n = K.n();
    if (r < 0 || d < 1 || d + r > n)
        throw Error(errc::parameter_range, "need r >= 0, d >= 1 and d + r <= n");
    auto dim = K.dim();
    if (dim && *dim > d + r - 1)
        throw Error(errc::dimension_too_large,
                    "dim " + std::to_string(*dim) + " exceeds d + r - 1 = " + std::to_string(d + r - 1));
    auto check = verify_collapse_sequence(K, d, seq);
    if (!check.ok)
        throw Error(errc::unverified_sequence,
                    "collapse sequence rejected at step " +
                        std::to_string(check.failed_index.value_or(0)) + " (" + check.reason + ")");

    SaturationInstance inst;
    inst.host = complete_host(n, d + 1);
    inst.start_edges = K.nonfaces_of_size(d + 1);
    inst.patterns = {StarPattern{d + 1, n - d - r + 1, std::nullopt}};

    SimplicialComplex cur = K;
    for (const CollapseStep& step : seq) {
        // Removed (d+1)-faces of this step are sigma u {w} for w in tau \ sigma;
        // the open star beyond tau is already missing, which is exactly the
        // star witness.
        Face rest = face_minus(step.tau, step.sigma);
        for (int w : rest) {
            WitnessCopy wit;
            wit.core = step.sigma;
            wit.new_apex = w;
            for (int v = 0; v < n; ++v)
                if (v == w || !face_contains(step.tau, v)) wit.apexes.push_back(v);
            inst.order.push_back(face_union(step.sigma, {w}));
            inst.witnesses.push_back(std::move(wit));
        }
        cur = apply_step(cur, step, d);
    }
    return inst;
}

SaturationInstance reduce_colorful(const SimplicialComplex& K, const VertexPartition& P,
                                   const std::vector<int>& r_vec, const CollapseSequence& seq) {
    if (P.n() != K.n())
        throw Error(errc::part_count_mismatch, "partition covers a different vertex set");
    if (static_cast<int>(r_vec.size()) != P.part_count())
        throw Error(errc::part_count_mismatch, "r vector length differs from part count");
    const int d = P.part_count() - 1;
    if (d < 1) throw Error(errc::parameter_range, "need at least two parts");

    for (int i = 0; i < P.part_count(); ++i) {
        if (r_vec[i] < 0 || r_vec[i] > P.part_size(i))
            throw Error(errc::parameter_range, "need 0 <= r_i <= n_i");
        auto [sub, back] = K.induced(P.part(i));
        auto dim = sub.dim();
        if (dim && *dim > r_vec[i] - 1)
            throw Error(errc::induced_dimension_too_large,
                        "dim(K[V_" + std::to_string(i) + "]) = " + std::to_string(*dim) +
                            " exceeds r_i - 1 = " + std::to_string(r_vec[i] - 1));
    }
    auto check = verify_collapse_sequence(K, d, seq);
    if (!check.ok)
        throw Error(errc::unverified_sequence,
                    "collapse sequence rejected at step " +
                        std::to_string(check.failed_index.value_or(0)) + " (" + check.reason + ")");

    SaturationInstance inst;
    inst.host = multipartite_host(P);
    for (const Face& e : inst.host.edges)
        if (!K.is_face(e)) inst.start_edges.push_back(e);
    for (int i = 0; i < P.part_count(); ++i)
        inst.patterns.push_back(StarPattern{d + 1, P.part_size(i) - r_vec[i] + 1, i});

    SimplicialComplex cur = K;
    for (const CollapseStep& step : seq) {
        if (P.is_rainbow(step.sigma)) {
            // A rainbow sigma of size d misses exactly one of the d+1 colors.
            Mask colors_hit = 0;
            for (int v : step.sigma) colors_hit |= Mask{1} << P.part_of(v);
            int missing = -1;
            for (int i = 0; i < P.part_count(); ++i)
                if (!(colors_hit & (Mask{1} << i))) {
                    if (missing != -1)
                        throw Error(errc::bad_input, "rainbow sigma misses several colors");
                    missing = i;
                }
            for (int w : P.part(missing)) {
                if (!face_contains(step.tau, w) || face_contains(step.sigma, w)) continue;
                WitnessCopy wit;
                wit.core = step.sigma;
                wit.new_apex = w;
                wit.color = missing;
                for (int v : P.part(missing))
                    if (v == w || !face_contains(step.tau, v)) wit.apexes.push_back(v);
                inst.order.push_back(face_union(step.sigma, {w}));
                inst.witnesses.push_back(std::move(wit));
            }
        }
        cur = apply_step(cur, step, d);
    }
    return inst;
}

} // namespace collapsat
