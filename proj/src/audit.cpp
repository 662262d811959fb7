#include "collapsat/audit.hpp"

#include "collapsat/error.hpp"
#include "collapsat/reduction.hpp"

#include <string>

namespace collapsat {

namespace {

// Verified d-collapse sequence: the supplied one if any, otherwise greedy
// with an exhaustive fallback. Audits never trust an unchecked sequence.
CollapseSequence ensure_sequence(const SimplicialComplex& K, int d, const AuditOptions& opts) {
    if (opts.sequence) {
        auto check = verify_collapse_sequence(K, d, *opts.sequence);
        if (!check.ok)
            throw Error(errc::unverified_sequence,
                        "supplied sequence rejected at step " +
                            std::to_string(check.failed_index.value_or(0)) + " (" + check.reason +
                            ")");
        return *opts.sequence;
    }
    auto greedy = find_collapse_sequence(K, d, SearchMode::Greedy, opts.budget);
    if (greedy.status == CollapseStatus::Collapsible) return greedy.sequence;
    auto full = find_collapse_sequence(K, d, SearchMode::Exhaustive, opts.budget);
    if (full.status == CollapseStatus::Collapsible) return full.sequence;
    if (full.status == CollapseStatus::NotCollapsible)
        throw Error(errc::not_collapsible, "complex is not " + std::to_string(d) + "-collapsible");
    throw Error(errc::inconclusive, "collapse search exhausted its budget");
}

} // namespace

AuditReport fractional_helly_audit(const SimplicialComplex& K, int d, std::optional<int> r_opt,
                                   const AuditOptions& opts) {
    const int n = K.n();
    if (d < 1) throw Error(errc::parameter_range, "need d >= 1");
    const int r = r_opt ? *r_opt : infer_r(K, d);
    if (r < 0 || d + r > n)
        throw Error(errc::parameter_range, "need 0 <= r and d + r <= n");

    AuditReport rep;
    rep.theorem = "frac-helly";
    auto dim = K.dim();
    if (dim && *dim > d + r - 1)
        throw Error(errc::hypothesis_violated,
                    "dim " + std::to_string(*dim) + " exceeds d + r - 1");
    rep.hypotheses.emplace_back("dim(K) <= d+r-1", true);
    ensure_sequence(K, d, opts);
    rep.hypotheses.emplace_back("d-collapsible", true);

    rep.measured = K.faces_of_size(d + 1).size();
    rep.bound = binomial(n, d + 1) - binomial(n - r, d + 1);
    rep.pass = *rep.measured <= *rep.bound;
    rep.tight = *rep.measured == *rep.bound;
    return rep;
}

AuditReport colorful_fractional_audit(const SimplicialComplex& K, const VertexPartition& P,
                                      std::optional<std::vector<int>> r_vec_opt,
                                      const AuditOptions& opts) {
    if (P.n() != K.n())
        throw Error(errc::part_count_mismatch, "partition covers a different vertex set");
    const int d = P.part_count() - 1;
    if (d < 1) throw Error(errc::parameter_range, "need at least two parts");
    std::vector<int> r_vec = r_vec_opt ? *r_vec_opt : infer_r_vec(K, P);
    if (static_cast<int>(r_vec.size()) != P.part_count())
        throw Error(errc::part_count_mismatch, "r vector length differs from part count");

    AuditReport rep;
    rep.theorem = "colorful-frac-helly";
    for (int i = 0; i < P.part_count(); ++i) {
        if (r_vec[i] < 0 || P.part_size(i) < r_vec[i])
            throw Error(errc::hypothesis_violated, "need 0 <= r_i <= n_i");
        auto [sub, back] = K.induced(P.part(i));
        auto dim = sub.dim();
        if (dim && *dim > r_vec[i] - 1)
            throw Error(errc::hypothesis_violated,
                        "dim(K[V_" + std::to_string(i) + "]) exceeds r_i - 1");
    }
    rep.hypotheses.emplace_back("dim(K[V_i]) <= r_i-1", true);
    ensure_sequence(K, d, opts);
    rep.hypotheses.emplace_back("d-collapsible", true);

    std::uint64_t all = 1, missing = 1;
    for (int i = 0; i < P.part_count(); ++i) {
        all *= static_cast<std::uint64_t>(P.part_size(i));
        missing *= static_cast<std::uint64_t>(P.part_size(i) - r_vec[i]);
    }
    rep.measured = K.rainbow_faces(P, d + 1).size();
    rep.bound = all - missing;
    rep.pass = *rep.measured <= *rep.bound;
    rep.tight = *rep.measured == *rep.bound;
    return rep;
}

AuditReport colorful_helly_audit(const SimplicialComplex& K, const VertexPartition& P,
                                 const AuditOptions& opts) {
    if (P.n() != K.n())
        throw Error(errc::part_count_mismatch, "partition covers a different vertex set");
    const int d = P.part_count() - 1;
    if (d < 1) throw Error(errc::parameter_range, "need at least two parts");

    AuditReport rep;
    rep.theorem = "colorful-helly";
    const auto rainbow = K.rainbow_faces(P, d + 1);
    std::uint64_t all = 1;
    for (int i = 0; i < P.part_count(); ++i)
        all *= static_cast<std::uint64_t>(P.part_size(i));
    if (rainbow.size() != all)
        throw Error(errc::hypothesis_violated, "a rainbow set of size d+1 is a non-face");
    rep.hypotheses.emplace_back("all rainbow (d+1)-sets are faces", true);
    ensure_sequence(K, d, opts);
    rep.hypotheses.emplace_back("d-collapsible", true);

    for (int i = 0; i < P.part_count(); ++i) {
        Face part = P.part(i); // sorted by construction
        if (K.is_face(part)) {
            rep.witness_part = i;
            break;
        }
    }
    rep.pass = rep.witness_part.has_value();
    return rep;
}

} // namespace collapsat
