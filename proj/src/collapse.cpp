#include "collapsat/collapse.hpp"

#include "collapsat/error.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace collapsat {

namespace {

std::string face_str(const Face& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + "]";
}

// Maximal faces that survive removing the interval [sigma, tau]: drop tau,
// add each tau \ {x} for x in sigma unless it is already under another
// maximal face. No other containments can occur within an antichain.
std::vector<Mask> collapse_masks(const std::vector<Mask>& maximal, Mask sigma, Mask tau) {
    std::vector<Mask> next;
    next.reserve(maximal.size() + 1);
    for (Mask m : maximal)
        if (m != tau) next.push_back(m);
    for (Mask rest = sigma; rest;) {
        Mask bit = rest & (~rest + 1);
        rest &= rest - 1;
        Mask facet = tau & ~bit;
        bool dominated = false;
        for (Mask m : next)
            if (mask_subset(facet, m)) {
                dominated = true;
                break;
            }
        if (!dominated) next.push_back(facet);
    }
    std::sort(next.begin(), next.end());
    return next;
}

bool at_target(const std::vector<Mask>& maximal, int d) {
    for (Mask m : maximal)
        if (std::popcount(m) >= d) return false;
    return true;
}

// Eligible moves in lexicographic sigma order: faces of size exactly d lying
// in a unique maximal face.
std::vector<std::pair<Face, Mask>> eligible_moves(const std::vector<Mask>& maximal, int d) {
    std::set<Face> candidates;
    for (Mask m : maximal)
        if (std::popcount(m) >= d)
            for_each_subface(mask_to_face(m), d, [&](const Face& s) { candidates.insert(s); });
    std::vector<std::pair<Face, Mask>> moves;
    for (const Face& sigma : candidates) {
        Mask sm = face_to_mask(sigma);
        Mask tau = 0;
        int count = 0;
        for (Mask m : maximal)
            if (mask_subset(sm, m)) {
                tau = m;
                if (++count > 1) break;
            }
        if (count == 1) moves.emplace_back(sigma, tau);
    }
    return moves;
}

struct MaskVecHash {
    std::size_t operator()(const std::vector<Mask>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Mask m : v) {
            h ^= std::hash<Mask>{}(m);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

SimplicialComplex apply_step(const SimplicialComplex& K, const CollapseStep& step, int d) {
    if (static_cast<int>(step.sigma.size()) != d)
        throw Error(errc::size_mismatch,
                    "sigma " + face_str(step.sigma) + " must have size " + std::to_string(d));
    check_face(step.sigma, K.n());
    check_face(step.tau, K.n());
    Mask sm = face_to_mask(step.sigma);
    if (!K.is_face(sm))
        throw Error(errc::sigma_not_a_face, "sigma " + face_str(step.sigma));

    Mask tau = 0;
    int count = 0;
    for (const Face& mf : K.maximal_faces()) {
        Mask m = face_to_mask(mf);
        if (mask_subset(sm, m)) {
            tau = m;
            ++count;
        }
    }
    if (count != 1)
        throw Error(errc::tau_not_unique_maximal,
                    "sigma " + face_str(step.sigma) + " lies in " + std::to_string(count) +
                        " maximal faces");
    if (tau != face_to_mask(step.tau))
        throw Error(errc::tau_not_unique_maximal,
                    "tau " + face_str(step.tau) + " is not the unique maximal face over sigma (" +
                        face_str(mask_to_face(tau)) + " is)");

    std::vector<Mask> maximal;
    maximal.reserve(K.maximal_faces().size());
    for (const Face& mf : K.maximal_faces()) maximal.push_back(face_to_mask(mf));
    std::sort(maximal.begin(), maximal.end());

    std::vector<Face> next;
    for (Mask m : collapse_masks(maximal, sm, tau)) next.push_back(mask_to_face(m));
    return complex_from_antichain(K.n(), std::move(next));
}

CollapseOutcome find_collapse_sequence(const SimplicialComplex& K, int d, SearchMode mode,
                                       std::uint64_t budget) {
    if (d < 1) throw Error(errc::parameter_range, "collapse dimension must be >= 1");

    CollapseOutcome out;
    std::vector<Mask> start;
    start.reserve(K.maximal_faces().size());
    for (const Face& f : K.maximal_faces()) start.push_back(face_to_mask(f));
    std::sort(start.begin(), start.end());

    if (mode == SearchMode::Greedy) {
        std::vector<Mask> cur = std::move(start);
        while (!at_target(cur, d)) {
            if (out.stats.nodes_explored++ >= budget) {
                out.status = CollapseStatus::Unknown;
                return out;
            }
            auto moves = eligible_moves(cur, d);
            if (moves.empty()) {
                out.status = CollapseStatus::Unknown; // stuck; greedy proves nothing
                out.sequence.clear();
                return out;
            }
            const auto& [sigma, tau] = moves.front();
            out.sequence.push_back({sigma, mask_to_face(tau)});
            cur = collapse_masks(cur, face_to_mask(sigma), tau);
        }
        out.status = CollapseStatus::Collapsible;
        return out;
    }

    // Exhaustive depth-first search. States strictly shrink along any path,
    // so only fully-exhausted states need memoization.
    struct Frame {
        std::vector<Mask> state;
        std::vector<std::pair<Face, Mask>> moves;
        std::size_t next = 0;
    };
    std::unordered_set<std::vector<Mask>, MaskVecHash> dead;
    std::vector<Frame> stack;
    bool out_of_budget = false;

    auto expand = [&](std::vector<Mask> state) -> bool {
        if (out.stats.nodes_explored++ >= budget) {
            out_of_budget = true;
            return false;
        }
        Frame f;
        f.moves = eligible_moves(state, d);
        f.state = std::move(state);
        stack.push_back(std::move(f));
        return true;
    };

    if (at_target(start, d)) {
        out.status = CollapseStatus::Collapsible;
        return out;
    }
    if (!expand(std::move(start))) {
        out.status = CollapseStatus::Unknown;
        return out;
    }

    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next >= top.moves.size()) {
            dead.insert(top.state);
            out.stats.states_memoized = dead.size();
            stack.pop_back();
            if (!out.sequence.empty()) out.sequence.pop_back();
            continue;
        }
        const auto& [sigma, tau] = top.moves[top.next++];
        std::vector<Mask> child = collapse_masks(top.state, face_to_mask(sigma), tau);
        out.sequence.push_back({sigma, mask_to_face(tau)});
        if (at_target(child, d)) {
            out.status = CollapseStatus::Collapsible;
            return out;
        }
        if (dead.contains(child)) {
            out.sequence.pop_back();
            continue;
        }
        if (!expand(std::move(child))) break;
    }

    out.sequence.clear();
    out.status = out_of_budget ? CollapseStatus::Unknown : CollapseStatus::NotCollapsible;
    return out;
}

CollapseVerifyResult verify_collapse_sequence(const SimplicialComplex& K, int d,
                                              const CollapseSequence& seq) {
    CollapseVerifyResult res;
    SimplicialComplex cur = K;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            cur = apply_step(cur, seq[i], d);
        } catch (const Error& e) {
            res.failed_index = i;
            res.reason = e.what();
            return res;
        }
    }
    for (const Face& m : cur.maximal_faces())
        if (static_cast<int>(m.size()) >= d) {
            res.failed_index = seq.size();
            res.reason = "faces of size >= " + std::to_string(d) + " remain";
            return res;
        }
    res.ok = true;
    return res;
}

} // namespace collapsat
