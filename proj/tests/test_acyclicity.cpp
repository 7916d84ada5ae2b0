#include "fusion/acyclicity.hpp"
#include "fusion/explorer.hpp"
#include "fusion/generators.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <doctest.h>

using namespace fusion;

namespace {

void check_witness(const FusionRule &rule, const CycleWitness &w) {
    REQUIRE(w.labels.size() >= 2);
    REQUIRE(w.multiplicities.size() == w.labels.size() - 1);
    CHECK(w.labels.front() == w.labels.back());
    for (std::size_t s = 0; s + 1 < w.labels.size(); ++s) {
        const auto i = w.labels[s];
        CHECK(i != kVacuum);
        CHECK(w.multiplicities[s] > 0);
        CHECK(rule(i, rule.dual(i), w.labels[s + 1]) == w.multiplicities[s]);
    }
}

} // namespace

TEST_CASE("Ising adjoint graph") {
    const auto g = adjoint_graph(named_fixture("ising"));
    REQUIRE(g.vertices.size() == 3);
    REQUIRE(g.edges.size() == 3);
    auto edge = [&](std::size_t e) { return std::pair{g.edges[e].from, g.edges[e].to}; };
    CHECK(edge(0) == std::pair<std::size_t, std::size_t>{1, 0});
    CHECK(edge(1) == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(edge(2) == std::pair<std::size_t, std::size_t>{2, 0});
    for (const auto &e : g.edges)
        CHECK(e.weight == 1);
}

TEST_CASE("pointed rules point every pair at the vacuum") {
    for (std::size_t n = 2; n <= 9; ++n) {
        const auto rule = pointed(cyclic_group(n));
        const auto g = adjoint_graph(rule);
        CHECK(g.vertices.size() == n / 2 + 1);
        CHECK(g.edges.size() == g.vertices.size() - 1);
        for (const auto &e : g.edges)
            CHECK(e.to == 0);
        for (Label i = 0; i < n; ++i) {
            const auto &v = g.vertices[g.vertex_of[i]];
            CHECK(v.representative == std::min(i, rule.dual(i)));
            CHECK(v.partner == rule.dual(v.representative));
        }
    }
}

TEST_CASE("SO(8)_2 graph has eleven self-dual vertices and no cycle") {
    const auto rule = named_fixture("so8_2");
    const auto g = adjoint_graph(rule);
    CHECK(g.vertices.size() == 11);
    CHECK(is_acyclic(rule).acyclic);
    CHECK_FALSE(is_acyclic(rule).witness.has_value());
}

TEST_CASE("SU(2)_k verdicts and witnesses") {
    CHECK(is_acyclic(su2k(1)).acyclic);
    CHECK(is_acyclic(su2k(2)).acyclic);
    const auto s3 = is_acyclic(su2k(3));
    CHECK_FALSE(s3.acyclic);
    REQUIRE(s3.witness);
    // spin 1 (label index 2) has 1 x 1 = 0 + 1 at level 3
    CHECK(s3.witness->labels == std::vector<Label>{2, 2});
    CHECK_FALSE(is_acyclic(su2k(4)).acyclic);
}

TEST_CASE("Fibonacci witness is the self-loop at tau") {
    const auto r = is_acyclic(named_fixture("fibonacci"));
    CHECK_FALSE(r.acyclic);
    REQUIRE(r.witness);
    CHECK(r.witness->labels == std::vector<Label>{1, 1});
    CHECK(r.witness->multiplicities == std::vector<Multiplicity>{1});
}

TEST_CASE("witnesses are sound and avoid the vacuum") {
    std::vector<FusionRule> rules;
    for (std::size_t k = 3; k <= 12; ++k)
        rules.push_back(su2k(k));
    for (const auto *g : {"s3", "a4", "d5"})
        rules.push_back(drinfeld_double(named_group(g)));
    for (const auto &rule : enumerate({.rank = 4, .max_mult = 2}))
        rules.push_back(rule);
    for (const auto &rule : rules) {
        const auto r = is_acyclic(rule);
        CHECK(r.acyclic == !r.witness.has_value());
        if (r.witness)
            check_witness(rule, *r.witness);
    }
}

TEST_CASE("witnesses longer than one step are shortest") {
    bool found = false;
    for (const auto &rule : enumerate({.rank = 4, .max_mult = 1})) {
        const auto r = is_acyclic(rule);
        if (r.witness && r.witness->labels.size() > 2) {
            found = true;
            // no vertex on the cycle may have a self-loop, otherwise the
            // shortest witness would have length one
            for (std::size_t s = 0; s + 1 < r.witness->labels.size(); ++s) {
                const auto i = r.witness->labels[s];
                CHECK(rule(i, rule.dual(i), i) == 0);
                CHECK(rule(i, rule.dual(i), rule.dual(i)) == 0);
            }
        }
    }
    CHECK(found);
}

TEST_CASE("graph verdict agrees with the sequence definition") {
    std::vector<FusionRule> rules;
    for (const auto &name : fixture_catalogue())
        if (auto r = named_fixture(name); r.rank() <= 6)
            rules.push_back(r);
    for (std::size_t k = 1; k <= 5; ++k)
        rules.push_back(su2k(k));
    for (const auto &rule : enumerate({.rank = 4, .max_mult = 2}))
        rules.push_back(rule);
    for (const auto &rule : rules)
        CHECK(is_acyclic(rule).acyclic == oracle::acyclic_by_sequences(rule));
}

TEST_CASE("theorem check on fixtures") {
    const auto ising = check_theorem(named_fixture("ising"));
    CHECK(ising.acyclic);
    CHECK(ising.nilpotent);
    CHECK(ising.agree);
    const auto fib = check_theorem(named_fixture("fibonacci"));
    CHECK_FALSE(fib.acyclic);
    CHECK_FALSE(fib.nilpotent);
    CHECK(fib.agree);
}

TEST_CASE("strongly connected components") {
    // 0 -> 1 -> 2 -> 0, 2 -> 3, 4 isolated, 5 -> 5
    const std::vector<std::vector<std::size_t>> succ{{1}, {2}, {0, 3}, {}, {}, {5}};
    auto comps = strongly_connected_components(succ);
    std::sort(comps.begin(), comps.end());
    CHECK(comps == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3}, {4}, {5}});
}
