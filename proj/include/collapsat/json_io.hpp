#ifndef COLLAPSAT_JSON_IO_HPP
#define COLLAPSAT_JSON_IO_HPP

#include "collapsat/audit.hpp"
#include "collapsat/certificate.hpp"
#include "collapsat/collapse.hpp"
#include "collapsat/geometry.hpp"
#include "collapsat/hypergraph.hpp"
#include "collapsat/simplicial_complex.hpp"

#include <json.hpp>

#include <vector>

namespace collapsat {

// Wire schemas. All vertex indices are 0-based; rationals are "p/q" strings
// (plain integers accepted on input). Malformed documents raise Error with
// code bad_input.
using Json = nlohmann::ordered_json;

Json complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const Json& j);

Json partition_to_json(const VertexPartition& P);
VertexPartition partition_from_json(const Json& j);

Json sequence_to_json(const CollapseSequence& seq);
CollapseSequence sequence_from_json(const Json& j);

Json hypergraph_to_json(const Hypergraph& H);
Hypergraph hypergraph_from_json(const Json& j);

Json pattern_to_json(const StarPattern& p);
StarPattern pattern_from_json(const Json& j, int uniformity);

Json witness_to_json(const WitnessCopy& w);
WitnessCopy witness_from_json(const Json& j);

Json instance_to_json(const SaturationInstance& inst);
SaturationInstance instance_from_json(const Json& j);

Json box_to_json(const Box& b);
Box box_from_json(const Json& j);
Json family_to_json(const std::vector<Box>& family);
std::vector<Box> family_from_json(const Json& j);

Json certificate_to_json(const CertificateReport& rep);
Json audit_to_json(const AuditReport& rep);

} // namespace collapsat

#endif
