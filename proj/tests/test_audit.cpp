#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "collapsat/audit.hpp"
#include "collapsat/error.hpp"
#include "collapsat/geometry.hpp"

#include <random>

using namespace collapsat;

namespace {

SimplicialComplex path_complex() {
    return SimplicialComplex::build(4, {{0, 1}, {1, 2}, {2, 3}});
}

} // namespace

TEST_CASE("fractional audit is tight on the path complex") {
    auto rep = fractional_helly_audit(path_complex(), 1, 1);
    CHECK(rep.pass);
    CHECK(rep.measured == 3);
    CHECK(rep.bound == 3);
    CHECK(rep.tight);
}

TEST_CASE("fractional audit on the full simplex") {
    auto K = SimplicialComplex::build(4, {{0, 1, 2, 3}});
    auto rep = fractional_helly_audit(K, 1, 3);
    CHECK(rep.pass);
    CHECK(rep.measured == 6);
    CHECK(rep.bound == 6);
}

TEST_CASE("fractional audit needs collapsibility") {
    auto c3 = SimplicialComplex::build(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_WITH_AS(fractional_helly_audit(c3, 1, 1), doctest::Contains("NotCollapsible"),
                         Error);
}

TEST_CASE("fractional audit validates the dimension hypothesis") {
    auto K = SimplicialComplex::build(4, {{0, 1, 2}, {3}});
    CHECK_THROWS_WITH_AS(fractional_helly_audit(K, 1, 1),
                         doctest::Contains("HypothesisViolated"), Error);
}

TEST_CASE("a supplied sequence is verified before use") {
    CollapseSequence junk = {{{0}, {0, 1, 2}}};
    AuditOptions opts;
    opts.sequence = &junk;
    CHECK_THROWS_WITH_AS(fractional_helly_audit(path_complex(), 1, 1, opts),
                         doctest::Contains("UnverifiedSequence"), Error);
}

TEST_CASE("colorful fractional audit is tight on the interval nerve fixture") {
    auto K = SimplicialComplex::build(4, {{0, 2}, {0, 3}, {1, 2}});
    VertexPartition P(4, {{0, 1}, {2, 3}});
    auto rep = colorful_fractional_audit(K, P, std::vector<int>{1, 1});
    CHECK(rep.pass);
    CHECK(rep.measured == 3);
    CHECK(rep.bound == 3); // 2*2 - 1*1
    CHECK(rep.tight);
}

TEST_CASE("colorful fractional audit on the full simplex") {
    auto K = SimplicialComplex::build(4, {{0, 1, 2, 3}});
    VertexPartition P(4, {{0, 1}, {2, 3}});
    auto rep = colorful_fractional_audit(K, P, std::vector<int>{2, 2});
    CHECK(rep.pass);
    CHECK(rep.measured == 4);
    CHECK(rep.bound == 4);
}

TEST_CASE("colorful fractional audit rejects undersized r") {
    auto K = SimplicialComplex::build(4, {{0, 1}, {2}, {3}});
    VertexPartition P(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(colorful_fractional_audit(K, P, std::vector<int>{1, 1}),
                         doctest::Contains("HypothesisViolated"), Error);
}

TEST_CASE("colorful Helly audit finds an intersecting part") {
    // intervals 0=[0,3], 1=[1,2] | 2=[0,1], 3=[2,3]: all rainbow pairs meet
    std::vector<Box> fam = {make_interval(0, 3), make_interval(1, 2), make_interval(0, 1),
                            make_interval(2, 3)};
    auto K = nerve(fam, 4);
    VertexPartition P(4, {{0, 1}, {2, 3}});
    auto rep = colorful_helly_audit(K, P);
    CHECK(rep.pass);
    CHECK(rep.witness_part == 0); // V_1 = {0,1} meet on [1,2]
}

TEST_CASE("colorful Helly audit on the full simplex returns a part") {
    auto K = SimplicialComplex::build(4, {{0, 1, 2, 3}});
    VertexPartition P(4, {{0, 1}, {2, 3}});
    auto rep = colorful_helly_audit(K, P);
    CHECK(rep.pass);
    CHECK(rep.witness_part == 0);
}

TEST_CASE("colorful Helly audit rejects a missing rainbow pair") {
    auto K = SimplicialComplex::build(4, {{0, 2}, {0, 3}, {1, 2}}); // 13 missing
    VertexPartition P(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(colorful_helly_audit(K, P), doctest::Contains("HypothesisViolated"),
                         Error);
}

TEST_CASE("audits pass on seeded interval nerves") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 30 && seed < 300; ++seed) {
        auto fam = gen_family(FamilyKind::Intervals, 1, 5, seed);
        auto K = nerve(fam, 5);
        AuditReport rep;
        try {
            rep = fractional_helly_audit(K, 1);
        } catch (const Error& e) {
            if (e.code() == errc::inconclusive) continue;
            throw;
        }
        CHECK(rep.pass);
        ++done;
    }
    CHECK(done == 30);
}
