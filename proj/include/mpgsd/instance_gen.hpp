#ifndef MPGSD_INSTANCE_GEN_HPP
#define MPGSD_INSTANCE_GEN_HPP

#include <cstdint>

#include "mpgsd/graph.hpp"

namespace mpgsd {

/// Exact fraction, so claimed-node targets and edge counts never depend on
/// floating-point rounding.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    std::int64_t scaled_floor(std::int64_t value) const { return value * num / den; }
    bool operator==(const Fraction&) const = default;
};

/// Parses "0.95", "2", "19/20" into a Fraction.
Fraction parse_fraction(const std::string& text);

struct GenSpec {
    std::int32_t n_supply = 1;
    std::int32_t n_demand = 1;
    GraphKind kind = GraphKind::General;
    std::uint64_t seed = 0;
    Weight demand_lo = 10;              // magnitudes, inclusive
    Weight demand_hi = 40;
    Fraction growth_fraction{19, 20};   // nodes claimed by regions
    Fraction edge_factor{2, 1};         // edges per node, general graphs only
    std::int32_t max_attempts = 1000;
};

struct GeneratedInstance {
    Instance instance;            // carries optimum_hint
    Partition witness;            // the generating partition; covers the hint
    std::uint64_t attempts = 1;   // attempts consumed, last one succeeded
};

/// Builds a random instance with a known optimum: draw demand weights,
/// build the topology (random tree, or random spanning tree plus extra
/// random edges), grow disjoint regions from random seed nodes until the
/// growth-fraction target is claimed, then turn one random member of each
/// region into its supply node with weight equal to the region's remaining
/// demand. Attempts in which growth stalls early or a region degenerates
/// to a single node are discarded and retried with a derived seed.
GeneratedInstance generate(const GenSpec& spec);

struct GenError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mpgsd

#endif
