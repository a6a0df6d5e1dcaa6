#include <doctest.h>

#include "mpgsd/greedy.hpp"
#include "mpgsd/heuristics.hpp"
#include "test_support.hpp"

using namespace mpgsd;
using namespace mpgsd::test;

TEST_SUITE("heuristics") {

TEST_CASE("subgraph scores") {
    // s0 (+6) with three in-capacity neighbors; s1 (+2) with none in capacity
    const Instance inst = make_instance({6, 2, -1, -2, -3, -5},
                                        {{0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}});
    const SolverState state(inst);
    REQUIRE(state.neighbor_set(0).size() == 3);
    REQUIRE(state.neighbor_set(1).empty());

    CHECK(score_equal(score_subgraph(state, 0, SubgraphRule::HS3), Score::of(2)));
    CHECK(score_equal(score_subgraph(state, 0, SubgraphRule::HS2), Score::ratio(1, 3)));
    CHECK(score_subgraph(state, 1, SubgraphRule::HS2).least_desirable);
    CHECK(score_subgraph(state, 1, SubgraphRule::HS3).least_desirable);
    CHECK(score_equal(score_subgraph(state, 1, SubgraphRule::HS1), Score::of(2)));

    // empty neighbor sets are never selected, under any rule
    CHECK(select_subgraph(state, SubgraphRule::HS1) == 0);
    CHECK(select_subgraph(state, SubgraphRule::HS2) == 0);
    CHECK(select_subgraph(state, SubgraphRule::HS3) == 0);
}

TEST_CASE("HS1 can score zero") {
    const Instance inst = make_instance({3, -3, -1}, {{0, 1}, {1, 2}});
    SolverState state(inst);
    state.add_node(0, 1);
    CHECK(score_equal(score_subgraph(state, 0, SubgraphRule::HS1), Score::of(0)));
}

TEST_CASE("node scores on T1") {
    const Instance inst = t1();
    const SolverState state(inst);
    // u = d1: new-neighbor set is empty because d3 does not fit 5-3
    CHECK(score_equal(score_node(state, 0, 1, NodeRule::HN2), Score::of(0)));
    CHECK(score_equal(score_node(state, 0, 1, NodeRule::HN3), Score::of(3)));
    CHECK(score_equal(score_node(state, 0, 1, NodeRule::HN1), Score::of(3)));
    CHECK(score_equal(score_node(state, 0, 2, NodeRule::HN1), Score::of(2)));
    CHECK(select_node(state, 0, NodeRule::HN1) == 1);  // d1: |-3| > |-2|
}

TEST_CASE("HN1 equals the demand magnitude") {
    const Instance inst = make_instance({9, -7}, {{0, 1}});
    const SolverState state(inst);
    CHECK(score_equal(score_node(state, 0, 1, NodeRule::HN1), Score::of(7)));
}

TEST_CASE("HN2 counts capacity-feasible new neighbors") {
    // s(+9) - a(-3); a - b(-4), a - c(-7); b and c are new neighbors of S
    // after adding a, but only b fits 9-3 = 6
    const Instance inst = make_instance({9, -3, -4, -7}, {{0, 1}, {1, 2}, {1, 3}});
    const SolverState state(inst);
    CHECK(score_equal(score_node(state, 0, 1, NodeRule::HN2), Score::of(1)));
    CHECK(score_equal(score_node(state, 0, 1, NodeRule::HN3), Score::of(6)));
}

TEST_CASE("HN4 prefers the minimal demand") {
    const Instance inst = make_instance({10, -2, -9}, {{0, 1}, {0, 2}});
    const SolverState state(inst);
    CHECK(select_node(state, 0, NodeRule::HN4) == 1);
    CHECK(select_node(state, 0, NodeRule::HN1) == 2);
}

TEST_CASE("selection tie-breaks and termination") {
    // two subgraphs, identical supplies and neighbor situations
    const Instance inst = make_instance({4, 4, -2, -2}, {{0, 2}, {1, 3}, {2, 3}});
    const SolverState state(inst);
    CHECK(select_subgraph(state, SubgraphRule::HS1) == 0);  // tie -> lower index

    const Instance blocked = make_instance({1, -5}, {{0, 1}});
    const SolverState none(blocked);
    CHECK_FALSE(select_subgraph(none, SubgraphRule::HS1).has_value());
    CHECK_FALSE(select_node(none, 0, NodeRule::HN1).has_value());
}

TEST_CASE("equal-score nodes resolve to the lowest id") {
    const Instance inst = make_instance({6, -3, -3}, {{0, 1}, {0, 2}});
    const SolverState state(inst);
    CHECK(select_node(state, 0, NodeRule::HN1) == 1);
}

TEST_CASE("scaling all weights preserves the greedy selection sequence") {
    Rng rng(31337);
    for (int round = 0; round < 10; ++round) {
        const Instance inst = random_instance(rng, 3, 15, 6);
        const Instance scaled = scale_weights(inst, 7);
        for (const auto& config : all_heuristic_configs()) {
            const auto a = run_greedy(inst, config);
            const auto b = run_greedy(scaled, config);
            CHECK(a.trace == b.trace);
            CHECK(a.stop_reason == b.stop_reason);
        }
    }
}

TEST_CASE("selection is deterministic") {
    Rng rng(555);
    const Instance inst = random_instance(rng, 4, 20, 9);
    for (const auto& config : all_heuristic_configs()) {
        const auto a = run_greedy(inst, config);
        const auto b = run_greedy(inst, config);
        CHECK(a.trace == b.trace);
    }
}

}  // TEST_SUITE
