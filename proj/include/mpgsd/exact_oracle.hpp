#ifndef MPGSD_EXACT_ORACLE_HPP
#define MPGSD_EXACT_ORACLE_HPP

#include "mpgsd/graph.hpp"

namespace mpgsd {

struct OracleResult {
    Weight optimum = 0;
    Partition witness;
    std::int64_t explored = 0;  // branch-and-bound nodes visited
};

/// Exact optimum by exhaustive search: subgraph by subgraph, enumerate
/// every connected, capacity-feasible demand subset around the supply
/// node, pruning with an optimistic bound (remaining demand clipped by
/// remaining supply). Refuses instances above max_nodes rather than
/// approximating.
OracleResult solve_exact(const Instance& instance, NodeId max_nodes = 18);

}  // namespace mpgsd

#endif
