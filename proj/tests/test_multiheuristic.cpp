#include <doctest.h>

#include "mpgsd/exact_oracle.hpp"
#include "mpgsd/multiheuristic.hpp"
#include "test_support.hpp"

using namespace mpgsd;
using namespace mpgsd::test;

TEST_SUITE("multiheuristic") {

TEST_CASE("runs all 12 combos and keeps the best") {
    const Instance inst = t1();
    const MultiResult result = run_multi(inst, {});
    CHECK(result.per_combo.size() == 12);
    CHECK(result.best_covered == 5);
    CHECK(check_feasible(inst, result.best).ok);

    Weight max_combo = 0;
    for (const auto& combo : result.per_combo) {
        max_combo = std::max(max_combo, combo.covered);
        CHECK(combo.covered <= result.best_covered);
    }
    CHECK(max_combo == result.best_covered);
    // all combos tie on T1: the first in enumeration order wins
    CHECK(result.best_config == HeuristicConfig{SubgraphRule::HS1, NodeRule::HN1});
}

TEST_CASE("combo order is canonical") {
    const auto configs = all_heuristic_configs();
    CHECK(configs[0].label() == "hs1-hn1");
    CHECK(configs[3].label() == "hs1-hn4");
    CHECK(configs[4].label() == "hs2-hn1");
    CHECK(configs[11].label() == "hs3-hn4");
}

TEST_CASE("parallel and sequential runs agree") {
    Rng rng(246810);
    for (int round = 0; round < 5; ++round) {
        const Instance inst = random_instance(rng, 3, 25, 14);
        const MultiResult par = run_multi(inst, {}, /*parallel=*/true);
        const MultiResult seq = run_multi(inst, {}, /*parallel=*/false);
        CHECK(par.best_covered == seq.best_covered);
        CHECK(par.best_config == seq.best_config);
        CHECK(par.best.assignment == seq.best.assignment);
        REQUIRE(par.per_combo.size() == seq.per_combo.size());
        for (size_t k = 0; k < par.per_combo.size(); ++k) {
            CHECK(par.per_combo[k].covered == seq.per_combo[k].covered);
        }
    }
}

TEST_CASE("multi dominates every constituent combo and respects the oracle") {
    Rng rng(13579);
    for (int round = 0; round < 10; ++round) {
        const Instance inst = random_instance(rng, 2, 10, 6);
        const MultiResult result = run_multi(inst, {});
        const auto oracle = solve_exact(inst);
        CHECK(result.best_covered <= oracle.optimum);
        for (const auto& combo : result.per_combo) {
            CHECK(result.best_covered >= combo.covered);
        }
    }
}

}  // TEST_SUITE
