#ifndef COLLAPSAT_ERROR_HPP
#define COLLAPSAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace collapsat {

// Typed failure conditions raised by library operations. Verifiers do not
// throw on rejection; they return a report. Exceptions are reserved for
// violated preconditions and malformed inputs.
enum class errc {
    index_out_of_range,
    duplicate_vertex,
    sigma_not_a_face,
    tau_not_unique_maximal,
    size_mismatch,
    dimension_too_large,
    induced_dimension_too_large,
    unverified_sequence,
    part_count_mismatch,
    wrong_size,
    not_rainbow,
    not_subhypergraph,
    host_too_large,
    cap_exceeded,
    rejection_budget_exceeded,
    parameter_range,
    rank_mismatch,
    hypothesis_violated,
    not_collapsible,
    inconclusive,
    bad_input,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace collapsat

#endif
