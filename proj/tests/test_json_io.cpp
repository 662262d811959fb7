#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "collapsat/error.hpp"
#include "collapsat/json_io.hpp"
#include "collapsat/reduction.hpp"
#include "collapsat/weak_saturation.hpp"

#include <random>

using namespace collapsat;

TEST_CASE("rational wire format") {
    CHECK(rational_to_string(Rational(3, 6)) == "1/2");
    CHECK(rational_to_string(Rational(-4)) == "-4/1");
    CHECK(rational_from_string("1/2") == Rational(1, 2));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK(rational_from_string("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
    CHECK_THROWS_AS(rational_from_string("x"), Error);
}

TEST_CASE("complex and partition round trip") {
    auto K = SimplicialComplex::build(4, {{0, 1}, {1, 2}, {2, 3}});
    auto K2 = complex_from_json(complex_to_json(K));
    CHECK(K == K2);

    VertexPartition P(4, {{0, 1}, {2, 3}});
    auto P2 = partition_from_json(partition_to_json(P));
    CHECK(P2.parts() == P.parts());

    CHECK_THROWS_AS(complex_from_json(Json{{"n", 3}}), Error);
    CHECK_THROWS_AS(complex_from_json(Json{{"n", 2}, {"maximal_faces", Json{{"x", 1}}}}), Error);
}

TEST_CASE("sequence round trip") {
    CollapseSequence seq = {{{0}, {0, 1}}, {{1}, {1, 2}}};
    CHECK(sequence_from_json(sequence_to_json(seq)) == seq);
}

TEST_CASE("hypergraph round trip keeps the partition") {
    VertexPartition P(4, {{0, 1}, {2, 3}});
    auto H = multipartite_host(P);
    auto H2 = hypergraph_from_json(hypergraph_to_json(H));
    CHECK(H == H2);
    REQUIRE(H2.parts.has_value());
    CHECK(H2.parts->parts() == P.parts());
}

TEST_CASE("instance round trip via the reduction") {
    auto K = SimplicialComplex::build(4, {{0, 1}, {1, 2}, {2, 3}});
    auto out = find_collapse_sequence(K, 1);
    REQUIRE(out.status == CollapseStatus::Collapsible);
    auto inst = reduce_fractional(K, 1, 1, out.sequence);
    auto inst2 = instance_from_json(instance_to_json(inst));
    CHECK(inst2.host == inst.host);
    CHECK(inst2.start_edges == inst.start_edges);
    CHECK(inst2.order == inst.order);
    REQUIRE(inst2.witnesses.size() == inst.witnesses.size());
    for (std::size_t i = 0; i < inst.witnesses.size(); ++i) {
        CHECK(inst2.witnesses[i].core == inst.witnesses[i].core);
        CHECK(inst2.witnesses[i].apexes == inst.witnesses[i].apexes);
        CHECK(inst2.witnesses[i].new_apex == inst.witnesses[i].new_apex);
        CHECK(inst2.witnesses[i].color == inst.witnesses[i].color);
    }
    CHECK(verify_saturation_sequence(inst2).ok);
}

TEST_CASE("box family round trip preserves exact coordinates") {
    std::mt19937_64 rng(1);
    auto fam = gen_family(FamilyKind::Boxes, 2, 5, rng());
    auto fam2 = family_from_json(family_to_json(fam));
    REQUIRE(fam2.size() == fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
        CHECK(fam2[i].lo == fam[i].lo);
        CHECK(fam2[i].hi == fam[i].hi);
    }
    CHECK_THROWS_AS(box_from_json(Json{{"k", 2}, {"intervals", Json::array()}}), Error);
}

TEST_CASE("serialized output is deterministic") {
    auto K = SimplicialComplex::build(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(complex_to_json(K).dump() == complex_to_json(K).dump());
    CHECK(complex_to_json(K).dump() == R"({"n":4,"maximal_faces":[[0,1],[1,2],[2,3]]})");
}
