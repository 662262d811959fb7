#ifndef COLLAPSAT_AUDIT_HPP
#define COLLAPSAT_AUDIT_HPP

#include "collapsat/collapse.hpp"
#include "collapsat/simplicial_complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace collapsat {

// Executable form of one theorem-level statement on a concrete instance.
struct AuditReport {
    std::string theorem; // "frac-helly" | "colorful-frac-helly" | "colorful-helly"
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::optional<std::uint64_t> measured;
    std::optional<std::uint64_t> bound;
    bool pass = false;
    bool tight = false;                  // counting audits: measured == bound
    std::optional<int> witness_part;     // colorful-helly: the part found in K
};

struct AuditOptions {
    // A caller-supplied collapse sequence; verified, never trusted. When
    // absent the audit searches greedily and falls back to exhaustive.
    const CollapseSequence* sequence = nullptr;
    std::uint64_t budget = kDefaultSearchBudget;
};

// Face-count bound for d-collapsible complexes: measured faces of size d+1
// against C(n,d+1) - C(n-r,d+1). r defaults to max(0, dim(K)+1-d). Throws
// Error with not_collapsible / inconclusive / hypothesis_violated when the
// hypotheses cannot be established.
AuditReport fractional_helly_audit(const SimplicialComplex& K, int d,
                                   std::optional<int> r = std::nullopt,
                                   const AuditOptions& opts = {});

// Rainbow-face-count bound: measured rainbow faces of size d+1 against
// prod n_i - prod (n_i - r_i); r_i defaults to max(0, dim(K[V_i])+1).
AuditReport colorful_fractional_audit(const SimplicialComplex& K, const VertexPartition& P,
                                      std::optional<std::vector<int>> r_vec = std::nullopt,
                                      const AuditOptions& opts = {});

// When every rainbow set of size d+1 is a face of the d-collapsible K, some
// part V_i is a face; reports the first such part.
AuditReport colorful_helly_audit(const SimplicialComplex& K, const VertexPartition& P,
                                 const AuditOptions& opts = {});

} // namespace collapsat

#endif
