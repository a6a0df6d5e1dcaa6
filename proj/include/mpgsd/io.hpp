#ifndef MPGSD_IO_HPP
#define MPGSD_IO_HPP

#include <iosfwd>
#include <string>

#include "mpgsd/graph.hpp"

namespace mpgsd {

// Instance text format (line-oriented, '#' starts a comment):
//
//   MPGSD 1
//   kind general|tree
//   nodes <n_supply> <n_demand>
//   <node_id> <weight>          one line per node, ids 0..n_supply+n_demand-1
//   edges <edge_count>
//   <u> <v>                     u < v, one line per edge
//   optimum <value>             optional
//
// Solution text format:
//
//   SOLUTION 1
//   <node_id> <subgraph_index|-1>   one line per node

Instance read_instance(std::istream& in);
Instance read_instance_string(const std::string& text);
Instance read_instance_file(const std::string& path);

void write_instance(const Instance& instance, std::ostream& out);
std::string write_instance_string(const Instance& instance);
void write_instance_file(const Instance& instance, const std::string& path);

std::vector<std::int32_t> read_solution(std::istream& in);
std::vector<std::int32_t> read_solution_string(const std::string& text);
std::vector<std::int32_t> read_solution_file(const std::string& path);

void write_solution(const Partition& partition, std::ostream& out);
std::string write_solution_string(const Partition& partition);
void write_solution_file(const Partition& partition, const std::string& path);

}  // namespace mpgsd

#endif
