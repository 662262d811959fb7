#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "collapsat/certificate.hpp"
#include "collapsat/error.hpp"
#include "collapsat/reduction.hpp"

#include <map>
#include <random>

using namespace collapsat;

namespace {

// Naive rational Gaussian elimination; the independent route for rank.
std::uint64_t rank_oracle(std::vector<std::vector<Rational>> M) {
    std::uint64_t rank = 0;
    std::size_t rows = M.size();
    if (rows == 0) return 0;
    std::size_t cols = M[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || M[i][c] == 0) continue;
            Rational f = M[i][c] / M[rank][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Evaluates a monomial vector as a polynomial at the given point(s).
Rational eval_vector(const MonomialVector& v, const FormSystem& sys,
                     const std::vector<std::vector<Rational>>& point) {
    Rational total = 0;
    for (const auto& [key, coef] : v.coords) {
        Rational term = coef;
        if (sys.kind == FormSystem::Kind::Symmetric)
            for (int var : key) term *= point[0][var];
        else
            for (std::size_t b = 0; b < key.size(); ++b) term *= point[b][key[b]];
        total += term;
    }
    return total;
}

Rational eval_form(const LinearForm& f, const std::vector<Rational>& x) {
    Rational total = 0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) total += f.coeffs[i] * x[i];
    return total;
}

std::vector<Rational> row_of(const MonomialVector& v, const std::vector<std::vector<int>>& basis) {
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
    std::vector<Rational> row(basis.size(), Rational(0));
    for (const auto& [key, val] : v.coords) row[idx.at(key)] = val;
    return row;
}

} // namespace

TEST_CASE("moment forms realize general position") {
    auto forms = moment_forms(4, 2);
    REQUIRE(forms.size() == 4);
    for (int j = 0; j < 4; ++j) {
        CHECK(forms[j].coeffs[0] == 1);
        CHECK(forms[j].coeffs[1] == j);
    }
    // any two are independent (Vandermonde)
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            Rational det = forms[a].coeffs[0] * forms[b].coeffs[1] -
                           forms[a].coeffs[1] * forms[b].coeffs[0];
            CHECK(det != 0);
        }
    auto zero = moment_forms(3, 0);
    for (const auto& f : zero) CHECK(f.coeffs.empty());
}

TEST_CASE("edge vectors expand products of forms") {
    auto sys = symmetric_system(4, 1, 1); // two variables
    auto basis = monomial_basis(sys);
    REQUIRE(basis == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}});

    std::vector<std::vector<Rational>> expected = {
        {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {1, 3, 2}, {1, 4, 3}, {1, 5, 6}};
    auto host = complete_host(4, 2);
    for (std::size_t i = 0; i < host.edges.size(); ++i)
        CHECK(row_of(edge_vector(host.edges[i], sys), basis) == expected[i]);
}

TEST_CASE("edge vectors agree with direct evaluation at random points") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        auto sys = symmetric_system(6, 2, static_cast<int>(rng() % 3));
        std::vector<Rational> x(sys.block_dims[0]);
        for (auto& xi : x) xi = Rational(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 4));
        Face e = {0, 2, 5};
        auto v = edge_vector(e, sys);
        Rational direct = 1;
        for (int vert : e) direct *= eval_form(sys.forms[vert], x);
        CHECK(eval_vector(v, sys, {x}) == direct);
    }
}

TEST_CASE("rainbow edge vectors multiply one form per block") {
    VertexPartition P(4, {{0, 1}, {2, 3}});
    auto sys = rainbow_system(P, {1, 1}); // one variable per block
    auto v = edge_vector({0, 2}, sys);
    REQUIRE(v.coords.size() == 1);
    CHECK(v.coords.at({0, 0}) == 1);

    auto zero_sys = rainbow_system(P, {2, 1});
    CHECK(edge_vector({0, 2}, zero_sys).is_zero());

    CHECK_THROWS_WITH_AS(edge_vector({0, 1}, sys), doctest::Contains("NotRainbow"), Error);
    CHECK_THROWS_WITH_AS(edge_vector({0, 1, 2}, sys), doctest::Contains("WrongSize"), Error);
}

TEST_CASE("fraction-free rank agrees with the rational oracle") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols));
        for (auto& row : M)
            for (auto& x : row)
                x = Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3));
        CHECK(exact_rank(M).first == rank_oracle(M));
    }
}

TEST_CASE("certificate rank for K_4, d=1, r=1") {
    auto rep = certificate_rank(complete_host(4, 2), 1);
    CHECK(rep.rank == 3);
    CHECK(rep.bound == 3);
    REQUIRE(rep.basis_edges.size() == 3);
    // pivot rows in scan order: 01, 03 (first row with x2^2 weight) ... frozen:
    CHECK(rep.basis_edges[0] == Face{0, 1});
}

TEST_CASE("degenerate r = n-d has rank zero") {
    auto rep = certificate_rank(complete_host(4, 2), 3);
    CHECK(rep.rank == 0);
    CHECK(rep.bound == 0);
    CHECK(rep.basis_edges.empty());
}

TEST_CASE("colorful certificate rank") {
    VertexPartition P(4, {{0, 1}, {2, 3}});
    auto rep = certificate_rank_colorful(multipartite_host(P), {1, 1});
    CHECK(rep.rank == 1);
    CHECK(rep.bound == 1);
}

TEST_CASE("certificate grid sample") {
    for (int n = 3; n <= 6; ++n)
        for (int r = 0; r <= n - 1; ++r) {
            auto rep = certificate_rank(complete_host(n, 2), r);
            CHECK(rep.rank == binomial(n - r, 2));
        }
}

TEST_CASE("span condition on star copies") {
    auto sys = symmetric_system(4, 1, 1);
    WitnessCopy star0{{0}, {1, 2, 3}, 1, std::nullopt};
    CHECK(verify_span_condition(star0, sys));

    WitnessCopy pair{{0}, {1, 2}, 1, std::nullopt};
    CHECK_FALSE(verify_span_condition(pair, sys)); // independent vectors

    auto zero_sys = symmetric_system(4, 1, 3); // no variables at all
    CHECK(verify_span_condition(pair, zero_sys));
}

TEST_CASE("span condition holds for sampled large stars") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        int r = 1 + static_cast<int>(rng() % 2);
        int d = 1;
        auto sys = symmetric_system(n, d, r);
        int m = n - d - r + 1;
        // random core of size d and m apexes
        std::vector<int> verts(n);
        for (int i = 0; i < n; ++i) verts[i] = i;
        std::shuffle(verts.begin(), verts.end(), rng);
        WitnessCopy copy;
        copy.core = {verts[0]};
        copy.apexes.assign(verts.begin() + 1, verts.begin() + 1 + m);
        std::sort(copy.apexes.begin(), copy.apexes.end());
        copy.new_apex = copy.apexes.front();
        CHECK(verify_span_condition(copy, sys));
    }
}

TEST_CASE("lemma replay on handmade instances") {
    auto host = complete_host(4, 2);

    SaturationInstance no_start;
    no_start.host = host;
    no_start.patterns = {StarPattern{2, 3, std::nullopt}};
    no_start.order = host.edges;
    auto res = replay_lemma(no_start);
    CHECK_FALSE(res.ok);
    CHECK(res.failed_index == 0);

    SaturationInstance full_span;
    full_span.host = host;
    full_span.patterns = {StarPattern{2, 3, std::nullopt}};
    full_span.start_edges = {{0, 2}, {0, 3}, {1, 3}}; // spans all of U
    full_span.order = {{0, 1}, {1, 2}, {2, 3}};
    CHECK(replay_lemma(full_span).ok);
}
