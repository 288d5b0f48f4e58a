#include <doctest.h>

#include "helpers.hpp"
#include "scx/oracle.hpp"
#include "scx/reduce.hpp"

using namespace scx;
using test::build;
using test::sample_dag;

TEST_CASE("first contraction of the sample dag merges 2 into 1") {
    DirectedGraph after = contract_prefix(sample_dag(), 1);
    DirectedGraph expected = test::sample_dag_contracted_once();
    CHECK_FALSE(after.vertex_alive(2));
    CHECK(after.live_vertex_count() == 7);
    CHECK(after.edge_count() == 9);
    CHECK(edge_multiset(after) == edge_multiset(expected));
}

TEST_CASE("chain collapses to a single vertex") {
    ReducedGraph rg = reduce_degree_one(build(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(rg.dag.vertex_count() == 1);
    CHECK(rg.dag.edge_count() == 0);
    CHECK(rg.source_count == 1);
    CHECK(rg.sink_count == 1);
    CHECK_FALSE(rg.has_multi_edge);
    CHECK(rg.origin[0] == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("diamond contracts to a parallel pair") {
    DirectedGraph diamond = build(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(oracle_singly_connected(diamond).singly_connected);
    ReducedGraph rg = reduce_degree_one(std::move(diamond));
    CHECK(rg.has_multi_edge);
    CHECK(rg.dag.vertex_count() == 2);
    CHECK(rg.dag.edge_count() == 2);
}

TEST_CASE("full contraction trace of the sample dag") {
    ReducedGraph rg = reduce_degree_one(sample_dag());
    CHECK(rg.has_multi_edge);
    CHECK(rg.source_count == 2);
    CHECK(rg.sink_count == 2);
    // merge classes: {0} {1,2} {3,6} {4,7} {5}
    REQUIRE(rg.origin.size() == 5);
    CHECK(rg.origin[0] == std::vector<VertexId>{0});
    CHECK(rg.origin[1] == std::vector<VertexId>{1, 2});
    CHECK(rg.origin[2] == std::vector<VertexId>{3, 6});
    CHECK(rg.origin[3] == std::vector<VertexId>{4, 7});
    CHECK(rg.origin[4] == std::vector<VertexId>{5});
    // first three contractions in ascending-candidate order
    REQUIRE(rg.trace.size() == 3);
    CHECK(rg.trace[0].removed == 2);
    CHECK(rg.trace[0].into == 1);
    CHECK(rg.trace[0].kind == Contraction::Kind::IntoPredecessor);
    CHECK(rg.trace[1].removed == 6);
    CHECK(rg.trace[1].into == 3);
    CHECK(rg.trace[2].removed == 7);
    CHECK(rg.trace[2].into == 4);
    CHECK(rg.trace[2].kind == Contraction::Kind::IntoSuccessor);
}

TEST_CASE("count_sources_sinks") {
    ReducedGraph empty = reduce_degree_one(DirectedGraph());
    CHECK(count_sources_sinks(empty) == std::pair<std::uint32_t, std::uint32_t>{0, 0});

    ReducedGraph b3 = reduce_degree_one(butterfly(3));
    CHECK(b3.trace.empty());  // no degree-1 vertices anywhere
    CHECK(count_sources_sinks(b3) == std::pair<std::uint32_t, std::uint32_t>{8, 8});

    ReducedGraph sample = reduce_degree_one(sample_dag());
    CHECK(count_sources_sinks(sample) ==
          std::pair<std::uint32_t, std::uint32_t>{sample.source_count, sample.sink_count});
}

TEST_CASE("reduce rejects cyclic and non-simple inputs") {
    CHECK_THROWS_AS(reduce_degree_one(simple_cycle(3)), ContractError);
    CHECK_THROWS_AS(reduce_degree_one(build(2, {{0, 1}, {0, 1}})), ContractError);
    CHECK_THROWS_AS(reduce_degree_one(build(1, {{0, 0}})), ContractError);
}

namespace {

void check_preservation(DirectedGraph g) {
    bool before = oracle_singly_connected(g, 64).singly_connected;
    ReducedGraph rg = reduce_degree_one(std::move(g));
    if (rg.has_multi_edge) {
        CHECK_FALSE(before);
        return;
    }
    bool after = oracle_singly_connected(rg.dag, 64).singly_connected;
    CHECK(before == after);
    // fixpoint: no degree-1 vertex left
    for (VertexId v = 0; v < rg.dag.vertex_count(); ++v) {
        CHECK(rg.dag.indegree(v) != 1);
        CHECK(rg.dag.outdegree(v) != 1);
    }
    // idempotence
    ReducedGraph again = reduce_degree_one(rg.dag);
    CHECK_FALSE(again.has_multi_edge);
    CHECK(again.dag.vertex_count() == rg.dag.vertex_count());
    CHECK(edge_multiset(again.dag) == edge_multiset(rg.dag));
}

}  // namespace

TEST_CASE("reduction preserves the verdict on every labeled DAG up to n=4") {
    for (std::size_t n = 0; n <= 4; ++n)
        test::for_each_labeled_dag(n, [](const DirectedGraph& g) { check_preservation(g); });
}

TEST_CASE("reduction preserves the verdict on random DAGs up to n=10") {
    SplitMix64 rng(31);
    for (int i = 0; i < 1500; ++i) {
        std::size_t n = 1 + rng.next() % 10;
        double p = (rng.next() % 100) / 100.0;
        check_preservation(random_dag(n, p, rng.next()));
    }
}

TEST_CASE("reduction work is linear in the edge count") {
    // one fixed constant across the whole corpus
    const double c = 8.0;
    SplitMix64 rng(41);
    auto check_linear = [&](DirectedGraph g) {
        std::size_t m = g.edge_count();
        ReducedGraph rg = reduce_degree_one(std::move(g));
        CHECK(static_cast<double>(rg.edges_touched) <= c * static_cast<double>(m));
    };
    check_linear(DirectedGraph());
    check_linear(DirectedGraph(5));  // edgeless: zero touches allowed only
    for (int i = 0; i < 500; ++i) {
        std::size_t n = 1 + rng.next() % 10;
        check_linear(random_dag(n, (rng.next() % 100) / 100.0, rng.next()));
    }
    // long chains are the contraction-heavy extreme
    DirectedGraph chain(64);
    for (VertexId v = 0; v + 1 < 64; ++v) chain.add_edge(v, v + 1);
    check_linear(std::move(chain));
}

TEST_CASE("edgeless graphs are untouched") {
    ReducedGraph rg = reduce_degree_one(DirectedGraph(5));
    CHECK(rg.edges_touched == 0);
    CHECK(rg.dag.vertex_count() == 5);
    CHECK(rg.source_count == 5);
    CHECK(rg.sink_count == 5);
}
