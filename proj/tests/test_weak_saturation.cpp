#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "collapsat/error.hpp"
#include "collapsat/geometry.hpp"
#include "collapsat/weak_saturation.hpp"

#include <algorithm>
#include <random>

using namespace collapsat;

namespace {

Hypergraph graph_on(int n, std::vector<Face> edges) {
    return make_hypergraph(n, 2, std::move(edges));
}

std::vector<StarPattern> star(int uniformity, int m) {
    return {StarPattern{uniformity, m, std::nullopt}};
}

VertexPartition p22() { return VertexPartition(4, {{0, 1}, {2, 3}}); }

} // namespace

TEST_CASE("addable finds a star witness") {
    auto H = graph_on(4, {{0, 1}, {0, 2}, {1, 2}});
    auto w = addable(H, {0, 3}, star(2, 3));
    REQUIRE(w.has_value());
    CHECK(w->core == Face{0});
    CHECK(w->apexes == std::vector<int>{1, 2, 3});
    CHECK(w->new_apex == 3);

    auto H2 = graph_on(4, {{0, 1}, {1, 2}, {1, 3}});
    CHECK_FALSE(addable(H2, {0, 2}, star(2, 3)).has_value());
}

TEST_CASE("directed addable restricts apexes to the colored part") {
    auto host = multipartite_host(p22());
    auto H = make_hypergraph(4, 2, {{0, 2}}, p22());
    std::vector<StarPattern> fam = {StarPattern{2, 2, 0}, StarPattern{2, 2, 1}};
    auto w = addable(H, {1, 2}, fam);
    REQUIRE(w.has_value());
    CHECK(w->color == 0);
    CHECK(w->core == Face{2});
    CHECK(w->apexes == std::vector<int>{0, 1});
    CHECK(w->new_apex == 1);
    (void)host;
}

TEST_CASE("addable input validation") {
    auto H = graph_on(4, {{0, 1}});
    CHECK_THROWS_WITH_AS(addable(H, {0, 1, 2}, star(2, 3)), doctest::Contains("WrongSize"), Error);
    CHECK_THROWS_AS(addable(H, {0, 1}, star(2, 3)), Error); // already an edge
    auto HP = make_hypergraph(4, 2, {{0, 2}}, p22());
    CHECK_THROWS_WITH_AS(addable(HP, {0, 1}, star(2, 2)), doctest::Contains("NotRainbow"), Error);
}

TEST_CASE("witness apexes include the new apex, rest lexicographic") {
    auto H = graph_on(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto w = addable(H, {2, 3}, star(2, 2));
    REQUIRE(w.has_value());
    CHECK(w->core == Face{2});         // first core in subface order
    CHECK(w->new_apex == 3);           // e's own apex is mandatory
    CHECK(w->apexes == std::vector<int>{0, 3}); // 0 beats 1 lexicographically
}

TEST_CASE("verifier accepts witnesses larger than the pattern") {
    SaturationInstance inst;
    inst.host = complete_host(4, 2);
    inst.start_edges = {{0, 2}, {0, 3}, {1, 3}};
    inst.patterns = star(2, 2); // m = 2, witnesses carry 3 apexes
    inst.order = {{0, 1}, {1, 2}, {2, 3}};
    inst.witnesses = {{{0}, {1, 2, 3}, 1, std::nullopt},
                      {{1}, {0, 2, 3}, 2, std::nullopt},
                      {{2}, {0, 1, 3}, 3, std::nullopt}};
    CHECK(verify_saturation_sequence(inst).ok);

    auto undersized = inst;
    undersized.patterns = star(2, 4); // no pattern fits a 3-apex witness
    CHECK_FALSE(verify_saturation_sequence(undersized).ok);
}

TEST_CASE("closure examples on K_4") {
    auto host = complete_host(4, 2);
    auto triangle = graph_on(4, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(closure(triangle, star(2, 3), host) == host);

    auto path = graph_on(4, {{0, 1}, {1, 2}});
    auto stalled = closure(path, star(2, 3), host);
    CHECK(stalled.edges == std::vector<Face>{{0, 1}, {1, 2}, {1, 3}});

    auto empty = graph_on(4, {});
    CHECK(closure(empty, star(2, 3), host).edges.empty());
}

TEST_CASE("closure rejects non-subhypergraphs") {
    auto host = complete_host(3, 2);
    auto H = graph_on(4, {{0, 3}});
    CHECK_THROWS_WITH_AS(closure(H, star(2, 2), host), doctest::Contains("NotSubhypergraph"),
                         Error);
}

TEST_CASE("closure is monotone and idempotent") {
    std::mt19937_64 rng(11);
    auto host = complete_host(5, 2);
    auto fam = star(2, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Face> a, b;
        for (const Face& e : host.edges) {
            bool in_a = rng() % 3 == 0;
            if (in_a) a.push_back(e);
            if (in_a || rng() % 3 == 0) b.push_back(e); // a subset of b
        }
        auto ca = closure(graph_on(5, a), fam, host);
        auto cb = closure(graph_on(5, b), fam, host);
        CHECK(std::includes(cb.edges.begin(), cb.edges.end(), ca.edges.begin(), ca.edges.end()));
        CHECK(closure(ca, fam, host) == ca);
    }
}

TEST_CASE("closure fixpoint is order independent") {
    std::mt19937_64 rng(13);
    auto host = complete_host(5, 2);
    auto fam = star(2, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Face> start;
        for (const Face& e : host.edges)
            if (rng() % 3 == 0) start.push_back(e);
        auto reference = closure(graph_on(5, start), fam, host);

        for (int shuffle = 0; shuffle < 20; ++shuffle) {
            // single-pass additions in a random edge order, repeated to a fixpoint
            auto edges = host.edges;
            std::shuffle(edges.begin(), edges.end(), rng);
            auto cur = graph_on(5, start);
            bool changed = true;
            while (changed) {
                changed = false;
                for (const Face& e : edges) {
                    if (cur.has_edge(e)) continue;
                    if (addable(cur, e, fam)) {
                        auto with = cur.edges;
                        with.push_back(e);
                        cur = graph_on(5, with);
                        changed = true;
                    }
                }
            }
            CHECK(cur == reference);
        }
    }
}

TEST_CASE("verifier accepts a traced closure and rejects tampering") {
    auto host = complete_host(4, 2);
    auto triangle = graph_on(4, {{0, 1}, {0, 2}, {1, 2}});
    auto [closed, trace] = closure_with_trace(triangle, star(2, 3), host);
    REQUIRE(closed == host);

    SaturationInstance inst;
    inst.host = host;
    inst.start_edges = triangle.edges;
    inst.patterns = star(2, 3);
    for (auto& [e, w] : trace) {
        inst.order.push_back(e);
        inst.witnesses.push_back(w);
    }
    CHECK(verify_saturation_sequence(inst).ok);

    auto incomplete = inst;
    incomplete.order.pop_back();
    incomplete.witnesses.pop_back();
    auto rej = verify_saturation_sequence(incomplete);
    CHECK_FALSE(rej.ok);
    CHECK_FALSE(rej.failed_index.has_value()); // not a permutation
}

TEST_CASE("verifier rejects an order whose witnesses arrive too early") {
    // start {02,03,13} in K_4: the chain 01 -> 12 -> 23 works, each witness
    // leaning on the previous addition, so the reversed order cannot.
    SaturationInstance inst;
    inst.host = complete_host(4, 2);
    inst.start_edges = {{0, 2}, {0, 3}, {1, 3}};
    inst.patterns = star(2, 3);
    inst.order = {{0, 1}, {1, 2}, {2, 3}};
    inst.witnesses = {{{0}, {1, 2, 3}, 1, std::nullopt},
                      {{1}, {0, 2, 3}, 2, std::nullopt},
                      {{2}, {0, 1, 3}, 3, std::nullopt}};
    CHECK(verify_saturation_sequence(inst).ok);

    auto reversed = inst;
    std::reverse(reversed.order.begin(), reversed.order.end());
    std::reverse(reversed.witnesses.begin(), reversed.witnesses.end());
    auto rej = verify_saturation_sequence(reversed);
    CHECK_FALSE(rej.ok);
    CHECK(rej.failed_index == 0); // copy edge {1,2} is not yet present
}

TEST_CASE("closure equals host iff some ordering verifies (all H in K_4, m=3)") {
    auto host = complete_host(4, 2);
    auto fam = star(2, 3);
    const int E = static_cast<int>(host.edge_count());
    for (int mask = 0; mask < (1 << E); ++mask) {
        std::vector<Face> start;
        for (int i = 0; i < E; ++i)
            if (mask & (1 << i)) start.push_back(host.edges[i]);
        auto H = graph_on(4, start);
        auto [closed, trace] = closure_with_trace(H, fam, host);

        if (closed == host) {
            SaturationInstance inst;
            inst.host = host;
            inst.start_edges = H.edges;
            inst.patterns = fam;
            for (auto& [e, w] : trace) {
                inst.order.push_back(e);
                inst.witnesses.push_back(w);
            }
            CHECK(verify_saturation_sequence(inst).ok);
        } else {
            // no permutation of the missing edges can verify
            std::vector<Face> missing;
            for (const Face& e : host.edges)
                if (!H.has_edge(e)) missing.push_back(e);
            std::sort(missing.begin(), missing.end());
            bool any_ok = false;
            do {
                SaturationInstance inst;
                inst.host = host;
                inst.start_edges = H.edges;
                inst.patterns = fam;
                auto cur = H;
                bool ok = true;
                for (const Face& e : missing) {
                    auto w = addable(cur, e, fam);
                    if (!w) {
                        ok = false;
                        break;
                    }
                    inst.order.push_back(e);
                    inst.witnesses.push_back(*w);
                    auto with = cur.edges;
                    with.push_back(e);
                    cur = graph_on(4, with);
                }
                if (ok) {
                    any_ok = verify_saturation_sequence(inst).ok;
                    if (any_ok) break;
                }
            } while (std::next_permutation(missing.begin(), missing.end()));
            CHECK_FALSE(any_ok);
        }
    }
}

TEST_CASE("wsat brute force matches closed forms") {
    auto k4 = wsat_bruteforce(complete_host(4, 2), star(2, 3), false);
    CHECK(k4.k == 3);
    // lexicographically least percolating 3-subset is the triangle on {0,1,2}
    CHECK(k4.optimal_start.edges == std::vector<Face>{{0, 1}, {0, 2}, {1, 2}});

    auto k5u3 = wsat_bruteforce(complete_host(5, 3), star(3, 3), false);
    CHECK(k5u3.k == 4);

    VertexPartition p33(6, {{0, 1, 2}, {3, 4, 5}});
    std::vector<StarPattern> fam = {StarPattern{2, 3, 0}, StarPattern{2, 3, 1}};
    auto k33 = wsat_bruteforce(multipartite_host(p33), fam, true);
    CHECK(k33.k == 4);
}

TEST_CASE("parallel brute force agrees with sequential") {
    auto host = complete_host(5, 2);
    auto seq = wsat_bruteforce(host, star(2, 3), false, 20, 1);
    auto par = wsat_bruteforce(host, star(2, 3), false, 20, 4);
    CHECK(seq.k == par.k);
    CHECK(seq.optimal_start == par.optimal_start);
}

TEST_CASE("edge cap is enforced") {
    CHECK_THROWS_WITH_AS(wsat_bruteforce(complete_host(8, 2), star(2, 4), false, 20),
                         doctest::Contains("HostTooLarge"), Error);
}

TEST_CASE("equality constructions percolate to the host") {
    for (int n = 4; n <= 6; ++n)
        for (int r = 0; r <= n - 1; ++r) {
            auto host = complete_host(n, 2);
            auto H = clique_construction(n, 1, r);
            CHECK(closure(H, star(2, n - r), host) == host); // m = n-d-r+1
        }

    VertexPartition P(5, {{0, 1, 2}, {3, 4}});
    auto host = multipartite_host(P);
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 2; ++r2) {
            std::vector<StarPattern> fam = {StarPattern{2, 3 - r1 + 1, 0},
                                            StarPattern{2, 2 - r2 + 1, 1}};
            auto H = multipartite_construction(P, {r1, r2});
            CHECK(closure(H, fam, host) == host);
        }
}

TEST_CASE("subset unranking matches lexicographic enumeration") {
    for (int n : {5, 8})
        for (int k = 0; k <= n; ++k) {
            std::uint64_t rank = 0;
            for_each_subset(n, k, [&](const Face& subset) {
                CHECK(kth_subset(n, k, rank) == subset);
                ++rank;
            });
            CHECK(rank == binomial(n, k));
        }
}
