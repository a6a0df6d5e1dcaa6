#include <doctest.h>

#include "mpgsd/instance_gen.hpp"
#include "mpgsd/io.hpp"
#include "test_support.hpp"

using namespace mpgsd;
using namespace mpgsd::test;

TEST_SUITE("instance_gen") {

TEST_CASE("fraction parsing") {
    CHECK(parse_fraction("0.95") == Fraction{95, 100});
    CHECK(parse_fraction("2") == Fraction{2, 1});
    CHECK(parse_fraction("19/20") == Fraction{19, 20});
    CHECK(parse_fraction("1.5") == Fraction{15, 10});
    CHECK_THROWS_AS(parse_fraction("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("2x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("1.2e3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
    CHECK(Fraction{19, 20}.scaled_floor(20) == 19);
    CHECK(Fraction{19, 20}.scaled_floor(8) == 7);
}

TEST_CASE("single region: supply equals the sum of its demand magnitudes") {
    GenSpec spec;
    spec.n_supply = 1;
    spec.n_demand = 3;
    spec.kind = GraphKind::Tree;
    spec.growth_fraction = {1, 1};  // claim everything so the region is the graph
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        spec.seed = seed;
        const auto gen = generate(spec);
        const Instance& inst = gen.instance;
        REQUIRE(inst.num_supply() == 1);
        Weight demand_sum = 0;
        for (NodeId v = 0; v < inst.num_nodes(); ++v) {
            if (inst.is_demand(v)) demand_sum += inst.demand_magnitude(v);
        }
        CHECK(inst.weight(inst.supply_nodes()[0]) == demand_sum);
        CHECK(inst.optimum_hint() == std::optional<Weight>(demand_sum));
    }
}

TEST_CASE("the generating partition witnesses the optimum") {
    for (const auto kind : {GraphKind::General, GraphKind::Tree}) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            GenSpec spec;
            spec.n_supply = 4;
            spec.n_demand = 26;
            spec.kind = kind;
            spec.seed = seed;
            const auto gen = generate(spec);
            CHECK(check_feasible(gen.instance, gen.witness).ok);
            CHECK(covered_demand(gen.instance, gen.witness) ==
                  *gen.instance.optimum_hint());
        }
    }
}

TEST_CASE("general graphs hit the exact edge target") {
    GenSpec spec;
    spec.n_supply = 2;
    spec.n_demand = 6;
    spec.seed = 3;
    const auto gen = generate(spec);
    CHECK(gen.instance.num_edges() == 16);  // (2+6)*2
    CHECK(gen.instance.kind() == GraphKind::General);
}

TEST_CASE("trees have |V|-1 edges") {
    GenSpec spec;
    spec.n_supply = 3;
    spec.n_demand = 17;
    spec.kind = GraphKind::Tree;
    spec.seed = 11;
    const auto gen = generate(spec);
    CHECK(gen.instance.num_edges() == 19);
}

TEST_CASE("weights stay inside the configured ranges") {
    GenSpec spec;
    spec.n_supply = 5;
    spec.n_demand = 45;
    spec.seed = 17;
    const auto gen = generate(spec);
    const Instance& inst = gen.instance;
    CHECK(inst.num_supply() == 5);
    for (NodeId v = 0; v < inst.num_nodes(); ++v) {
        if (inst.is_demand(v)) {
            CHECK(inst.demand_magnitude(v) >= 10);
            CHECK(inst.demand_magnitude(v) <= 40);
        } else {
            CHECK(inst.weight(v) >= 1);
        }
    }
    Weight supply_sum = 0;
    for (NodeId s : inst.supply_nodes()) supply_sum += inst.weight(s);
    CHECK(inst.optimum_hint() == std::optional<Weight>(supply_sum));
}

TEST_CASE("same seed and spec give byte-identical files") {
    GenSpec spec;
    spec.n_supply = 3;
    spec.n_demand = 27;
    spec.seed = 123456789;
    const auto a = generate(spec);
    const auto b = generate(spec);
    CHECK(write_instance_string(a.instance) == write_instance_string(b.instance));
    CHECK(a.attempts == b.attempts);
}

TEST_CASE("unsatisfiable specs raise a generation error") {
    GenSpec spec;
    spec.n_supply = 1;
    spec.n_demand = 1;  // the grown region is always a single node
    spec.kind = GraphKind::Tree;
    spec.max_attempts = 50;
    CHECK_THROWS_AS(generate(spec), GenError);

    GenSpec dense;
    dense.n_supply = 2;
    dense.n_demand = 2;
    dense.edge_factor = {3, 1};  // 12 edges on 4 nodes: impossible
    CHECK_THROWS_AS(generate(dense), std::invalid_argument);

    GenSpec bad;
    bad.n_supply = 0;
    bad.n_demand = 5;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

}  // TEST_SUITE
