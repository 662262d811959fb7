#include "collapsat/json_io.hpp"

#include "collapsat/error.hpp"
#include "collapsat/rational.hpp"

#include <algorithm>
#include <string>

namespace collapsat {

namespace {

Face face_from(const Json& j) {
    if (!j.is_array()) throw Error(errc::bad_input, "expected a vertex array");
    Face f;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw Error(errc::bad_input, "vertex must be an integer");
        f.push_back(v.get<int>());
    }
    return f;
}

std::vector<Face> faces_from(const Json& j) {
    if (!j.is_array()) throw Error(errc::bad_input, "expected an array of faces");
    std::vector<Face> out;
    for (const auto& f : j) out.push_back(face_from(f));
    return out;
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw Error(errc::bad_input, std::string("missing field '") + name + "'");
    return j.at(name);
}

} // namespace

Json complex_to_json(const SimplicialComplex& K) {
    return Json{{"n", K.n()}, {"maximal_faces", K.maximal_faces()}};
}

SimplicialComplex complex_from_json(const Json& j) {
    return SimplicialComplex::build(field(j, "n").get<int>(), faces_from(field(j, "maximal_faces")));
}

Json partition_to_json(const VertexPartition& P) {
    return Json{{"parts", P.parts()}};
}

VertexPartition partition_from_json(const Json& j) {
    auto parts = faces_from(field(j, "parts"));
    std::size_t n = 0;
    for (const auto& p : parts) n += p.size();
    std::vector<std::vector<int>> pp(parts.begin(), parts.end());
    return VertexPartition(static_cast<int>(n), std::move(pp));
}

Json sequence_to_json(const CollapseSequence& seq) {
    Json arr = Json::array();
    for (const auto& step : seq) arr.push_back(Json{{"sigma", step.sigma}, {"tau", step.tau}});
    return arr;
}

CollapseSequence sequence_from_json(const Json& j) {
    if (!j.is_array()) throw Error(errc::bad_input, "expected an array of steps");
    CollapseSequence seq;
    for (const auto& s : j)
        seq.push_back(CollapseStep{face_from(field(s, "sigma")), face_from(field(s, "tau"))});
    return seq;
}

Json hypergraph_to_json(const Hypergraph& H) {
    Json j{{"n", H.n}, {"uniformity", H.uniformity}, {"edges", H.edges}};
    if (H.parts) j["parts"] = H.parts->parts();
    return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
    std::optional<VertexPartition> parts;
    if (j.contains("parts") && !j.at("parts").is_null()) parts = partition_from_json(j);
    return make_hypergraph(field(j, "n").get<int>(), field(j, "uniformity").get<int>(),
                           faces_from(field(j, "edges")), std::move(parts));
}

Json pattern_to_json(const StarPattern& p) {
    Json j{{"m", p.big_part_size}};
    j["color"] = p.color ? Json(*p.color) : Json(nullptr);
    return j;
}

StarPattern pattern_from_json(const Json& j, int uniformity) {
    StarPattern p;
    p.uniformity = uniformity;
    p.big_part_size = field(j, "m").get<int>();
    if (j.contains("color") && !j.at("color").is_null()) p.color = j.at("color").get<int>();
    return p;
}

Json witness_to_json(const WitnessCopy& w) {
    Json j{{"core", w.core}, {"apexes", w.apexes}, {"new_apex", w.new_apex}};
    j["color"] = w.color ? Json(*w.color) : Json(nullptr);
    return j;
}

WitnessCopy witness_from_json(const Json& j) {
    WitnessCopy w;
    w.core = face_from(field(j, "core"));
    w.apexes = face_from(field(j, "apexes"));
    // downstream checks binary-search these
    std::sort(w.core.begin(), w.core.end());
    std::sort(w.apexes.begin(), w.apexes.end());
    w.new_apex = field(j, "new_apex").get<int>();
    if (j.contains("color") && !j.at("color").is_null()) w.color = j.at("color").get<int>();
    return w;
}

Json instance_to_json(const SaturationInstance& inst) {
    Json patterns = Json::array();
    for (const auto& p : inst.patterns) patterns.push_back(pattern_to_json(p));
    Json witnesses = Json::array();
    for (const auto& w : inst.witnesses) witnesses.push_back(witness_to_json(w));
    return Json{{"host", hypergraph_to_json(inst.host)},
                {"start_edges", inst.start_edges},
                {"patterns", patterns},
                {"order", inst.order},
                {"witnesses", witnesses}};
}

SaturationInstance instance_from_json(const Json& j) {
    SaturationInstance inst;
    inst.host = hypergraph_from_json(field(j, "host"));
    inst.start_edges = faces_from(field(j, "start_edges"));
    for (const auto& p : field(j, "patterns"))
        inst.patterns.push_back(pattern_from_json(p, inst.host.uniformity));
    inst.order = faces_from(field(j, "order"));
    for (const auto& w : field(j, "witnesses")) inst.witnesses.push_back(witness_from_json(w));
    return inst;
}

Json box_to_json(const Box& b) {
    Json intervals = Json::array();
    for (int a = 0; a < b.axes(); ++a)
        intervals.push_back(Json::array({rational_to_string(b.lo[a]), rational_to_string(b.hi[a])}));
    return Json{{"k", b.axes()}, {"intervals", intervals}};
}

Box box_from_json(const Json& j) {
    const Json& intervals = field(j, "intervals");
    if (!intervals.is_array() || intervals.empty())
        throw Error(errc::bad_input, "box needs at least one axis interval");
    std::vector<Rational> lo, hi;
    for (const auto& iv : intervals) {
        if (!iv.is_array() || iv.size() != 2)
            throw Error(errc::bad_input, "axis interval must be a [lo, hi] pair");
        lo.push_back(rational_from_string(iv.at(0).get<std::string>()));
        hi.push_back(rational_from_string(iv.at(1).get<std::string>()));
    }
    if (j.contains("k") && j.at("k").get<int>() != static_cast<int>(lo.size()))
        throw Error(errc::bad_input, "axis count disagrees with interval list");
    return make_box(std::move(lo), std::move(hi));
}

Json family_to_json(const std::vector<Box>& family) {
    Json arr = Json::array();
    for (const Box& b : family) arr.push_back(box_to_json(b));
    return arr;
}

std::vector<Box> family_from_json(const Json& j) {
    if (!j.is_array()) throw Error(errc::bad_input, "expected an array of boxes");
    std::vector<Box> out;
    for (const auto& b : j) out.push_back(box_from_json(b));
    return out;
}

Json certificate_to_json(const CertificateReport& rep) {
    return Json{{"rank", rep.rank}, {"bound", rep.bound}, {"basis_edges", rep.basis_edges}};
}

Json audit_to_json(const AuditReport& rep) {
    Json hyp = Json::object();
    for (const auto& [name, ok] : rep.hypotheses) hyp[name] = ok;
    Json j{{"theorem", rep.theorem}, {"hypotheses", hyp}};
    if (rep.measured) j["measured"] = *rep.measured;
    if (rep.bound) j["bound"] = *rep.bound;
    j["pass"] = rep.pass;
    if (rep.measured && rep.bound) j["tight"] = rep.tight;
    if (rep.witness_part) j["witness_part"] = *rep.witness_part;
    return j;
}

} // namespace collapsat
