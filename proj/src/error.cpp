#include "collapsat/error.hpp"

namespace collapsat {

const char* errc_name(errc c) {
    switch (c) {
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::duplicate_vertex: return "DuplicateVertex";
    case errc::sigma_not_a_face: return "SigmaNotAFace";
    case errc::tau_not_unique_maximal: return "TauNotUniqueMaximal";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::dimension_too_large: return "DimensionTooLarge";
    case errc::induced_dimension_too_large: return "InducedDimensionTooLarge";
    case errc::unverified_sequence: return "UnverifiedSequence";
    case errc::part_count_mismatch: return "PartCountMismatch";
    case errc::wrong_size: return "WrongSize";
    case errc::not_rainbow: return "NotRainbow";
    case errc::not_subhypergraph: return "NotSubhypergraph";
    case errc::host_too_large: return "HostTooLarge";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::rejection_budget_exceeded: return "RejectionBudgetExceeded";
    case errc::parameter_range: return "ParameterRange";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::not_collapsible: return "NotCollapsible";
    case errc::inconclusive: return "Inconclusive";
    case errc::bad_input: return "BadInput";
    }
    return "UnknownError";
}

} // namespace collapsat
