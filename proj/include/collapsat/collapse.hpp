#ifndef COLLAPSAT_COLLAPSE_HPP
#define COLLAPSAT_COLLAPSE_HPP

#include "collapsat/simplicial_complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace collapsat {

// One elementary d-collapse: sigma has size d exactly and tau is the unique
// maximal face containing it; the step removes every eta with
// sigma <= eta <= tau.
struct CollapseStep {
    Face sigma;
    Face tau;

    bool operator==(const CollapseStep&) const = default;
};

using CollapseSequence = std::vector<CollapseStep>;

enum class CollapseStatus { Collapsible, NotCollapsible, Unknown };

struct SearchStats {
    std::uint64_t nodes_explored = 0;
    std::uint64_t states_memoized = 0;
};

struct CollapseOutcome {
    CollapseStatus status = CollapseStatus::Unknown;
    CollapseSequence sequence; // populated iff status == Collapsible
    SearchStats stats;
};

enum class SearchMode { Exhaustive, Greedy };

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

// Applies one step. Throws Error with code sigma_not_a_face,
// tau_not_unique_maximal or size_mismatch when the step is illegal.
SimplicialComplex apply_step(const SimplicialComplex& K, const CollapseStep& step, int d);

// Searches for a d-collapse sequence reducing K to its faces of size < d.
// Exhaustive mode backtracks over every eligible sigma (lexicographic
// tie-break) with memoization on reached face sets and is the only mode that
// may report NotCollapsible. Greedy never backtracks and degrades to Unknown.
CollapseOutcome find_collapse_sequence(const SimplicialComplex& K, int d,
                                       SearchMode mode = SearchMode::Exhaustive,
                                       std::uint64_t budget = kDefaultSearchBudget);

struct CollapseVerifyResult {
    bool ok = false;
    // Index of the first failing step; equals seq.size() when every step
    // applied but faces of size >= d remain.
    std::optional<std::size_t> failed_index;
    std::string reason;
};

CollapseVerifyResult verify_collapse_sequence(const SimplicialComplex& K, int d,
                                              const CollapseSequence& seq);

} // namespace collapsat

#endif
