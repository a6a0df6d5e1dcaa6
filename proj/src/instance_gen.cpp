#include "mpgsd/instance_gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mpgsd/rng.hpp"

namespace mpgsd {

Fraction parse_fraction(const std::string& text) {
    const auto bad = [&] { return std::invalid_argument("cannot parse fraction '" + text + "'"); };
    const auto strict_int = [&](const std::string& part) {
        size_t pos = 0;
        const auto value = [&] {
            try {
                return std::stoll(part, &pos);
            } catch (const std::exception&) {
                throw bad();
            }
        }();
        if (pos != part.size() || part.empty()) throw bad();
        return value;
    };
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const auto num = strict_int(text.substr(0, slash));
        const auto den = strict_int(text.substr(slash + 1));
        if (den <= 0) throw bad();
        return {num, den};
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
        const auto whole = dot == 0 ? 0 : strict_int(text.substr(0, dot));
        const auto frac_text = text.substr(dot + 1);
        if (frac_text.empty() || frac_text.size() > 9 ||
            frac_text.find_first_not_of("0123456789") != std::string::npos) {
            throw bad();
        }
        const auto frac = strict_int(frac_text);
        std::int64_t den = 1;
        for (size_t i = 0; i < frac_text.size(); ++i) den *= 10;
        return {whole * den + frac, den};
    }
    return {strict_int(text), 1};
}

namespace {

void validate(const GenSpec& spec) {
    if (spec.n_supply < 1 || spec.n_demand < 1) {
        throw std::invalid_argument("need at least one supply and one demand node");
    }
    if (spec.demand_lo < 1 || spec.demand_lo > spec.demand_hi) {
        throw std::invalid_argument("demand magnitude range must satisfy 1 <= lo <= hi");
    }
    if (spec.growth_fraction.num <= 0 ||
        spec.growth_fraction.num > spec.growth_fraction.den) {
        throw std::invalid_argument("growth fraction must be in (0, 1]");
    }
    const std::int64_t total = spec.n_supply + spec.n_demand;
    if (spec.kind == GraphKind::General) {
        const auto edges = spec.edge_factor.scaled_floor(total);
        if (edges < total - 1) {
            throw std::invalid_argument("edge factor yields fewer edges than a spanning tree");
        }
        if (edges > total * (total - 1) / 2) {
            throw std::invalid_argument("edge factor yields more edges than a simple graph holds");
        }
    }
}

/// Uniform random labeled tree on n nodes via a Pruefer sequence.
std::vector<std::pair<NodeId, NodeId>> random_tree(std::int64_t n, Rng& rng) {
    if (n == 1) return {};
    if (n == 2) return {{0, 1}};
    std::vector<NodeId> pruefer(static_cast<size_t>(n - 2));
    for (auto& p : pruefer) p = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));

    std::vector<std::int32_t> degree(static_cast<size_t>(n), 1);
    for (NodeId p : pruefer) ++degree[static_cast<size_t>(p)];

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<size_t>(n - 1));
    std::set<NodeId> leaves;
    for (NodeId v = 0; v < n; ++v) {
        if (degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
    }
    for (NodeId p : pruefer) {
        const NodeId leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, p), std::max(leaf, p));
        if (--degree[static_cast<size_t>(p)] == 1) leaves.insert(p);
    }
    const NodeId a = *leaves.begin();
    const NodeId b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return edges;
}

struct Attempt {
    std::vector<Weight> weights;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::int32_t> region;  // per node, kNonLocated when unclaimed
    std::vector<NodeId> supply_node;   // per region
};

bool try_generate(const GenSpec& spec, Rng& rng, Attempt& out) {
    const std::int64_t total = spec.n_supply + spec.n_demand;

    out.weights.resize(static_cast<size_t>(total));
    for (auto& w : out.weights) w = -rng.range(spec.demand_lo, spec.demand_hi);

    out.edges = random_tree(total, rng);
    if (spec.kind == GraphKind::General) {
        const auto target = static_cast<size_t>(spec.edge_factor.scaled_floor(total));
        std::set<std::pair<NodeId, NodeId>> edge_set(out.edges.begin(), out.edges.end());
        while (edge_set.size() < target) {
            const auto u = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(total)));
            const auto v = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(total)));
            if (u == v) continue;
            edge_set.emplace(std::min(u, v), std::max(u, v));
        }
        out.edges.assign(edge_set.begin(), edge_set.end());
    }

    std::vector<std::vector<NodeId>> adjacency(static_cast<size_t>(total));
    for (const auto& [u, v] : out.edges) {
        adjacency[static_cast<size_t>(u)].push_back(v);
        adjacency[static_cast<size_t>(v)].push_back(u);
    }

    // Region seeds: uniform random distinct nodes, conditioned on every seed
    // keeping at least one non-seed neighbor (a seed without one could never
    // grow and the attempt would always be discarded). Later draws can
    // suffocate earlier seeds, so suffocated seeds are replaced to a
    // fixpoint.
    std::vector<char> is_seed(static_cast<size_t>(total), 0);
    std::vector<NodeId> seeds;
    const auto viable = [&](NodeId v) {
        for (NodeId w : adjacency[static_cast<size_t>(v)]) {
            if (!is_seed[static_cast<size_t>(w)]) return true;
        }
        return false;
    };
    const auto draw_seed = [&]() -> NodeId {
        for (std::int64_t guard = 0; guard < 64 * total; ++guard) {
            const auto v = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(total)));
            if (is_seed[static_cast<size_t>(v)]) continue;
            is_seed[static_cast<size_t>(v)] = 1;
            if (viable(v)) return v;
            is_seed[static_cast<size_t>(v)] = 0;
        }
        return kNonLocated;
    };
    for (std::int32_t i = 0; i < spec.n_supply; ++i) {
        const NodeId v = draw_seed();
        if (v == kNonLocated) return false;
        seeds.push_back(v);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (auto& s : seeds) {
            if (viable(s)) continue;
            is_seed[static_cast<size_t>(s)] = 0;
            const NodeId v = draw_seed();
            if (v == kNonLocated) return false;
            s = v;
            changed = true;
        }
    }

    out.region.assign(static_cast<size_t>(total), kNonLocated);
    std::vector<std::set<NodeId>> boundary(static_cast<size_t>(spec.n_supply));
    std::vector<std::int64_t> region_size(static_cast<size_t>(spec.n_supply), 0);
    std::int64_t claimed = 0;
    auto claim = [&](NodeId v, std::int32_t r) {
        out.region[static_cast<size_t>(v)] = r;
        ++claimed;
        ++region_size[static_cast<size_t>(r)];
        for (auto& b : boundary) b.erase(v);
        for (NodeId w : adjacency[static_cast<size_t>(v)]) {
            if (out.region[static_cast<size_t>(w)] == kNonLocated) {
                boundary[static_cast<size_t>(r)].insert(w);
            }
        }
    };
    for (std::int32_t r = 0; r < spec.n_supply; ++r) claim(seeds[static_cast<size_t>(r)], r);

    // Growth: uniform random among extensible regions, except that regions
    // still at their seed are served first, and a node that is the last
    // possible first claim of such a region is reserved for it. Without the
    // two rules, some region ends up as a single node (and the attempt
    // discarded) in almost every attempt at the largest sizes.
    const std::int64_t target_claimed =
        std::max<std::int64_t>(spec.n_supply, spec.growth_fraction.scaled_floor(total));
    std::vector<std::int32_t> extensible, seedlings;
    std::vector<NodeId> options;
    while (claimed < target_claimed) {
        extensible.clear();
        seedlings.clear();
        for (std::int32_t r = 0; r < spec.n_supply; ++r) {
            if (boundary[static_cast<size_t>(r)].empty()) continue;
            extensible.push_back(r);
            if (region_size[static_cast<size_t>(r)] == 1) seedlings.push_back(r);
        }
        if (extensible.empty()) return false;  // growth stalled: cut-off seed
        const auto& pool = seedlings.empty() ? extensible : seedlings;
        const auto r = pool[rng.below(pool.size())];
        const auto& frontier = boundary[static_cast<size_t>(r)];

        options.clear();
        if (!seedlings.empty()) {
            std::set<NodeId> reserved;
            for (std::int32_t r2 : seedlings) {
                if (r2 != r && boundary[static_cast<size_t>(r2)].size() == 1) {
                    reserved.insert(*boundary[static_cast<size_t>(r2)].begin());
                }
            }
            for (NodeId v : frontier) {
                if (!reserved.count(v)) options.push_back(v);
            }
        }
        if (options.empty()) options.assign(frontier.begin(), frontier.end());
        claim(options[rng.below(options.size())], r);
    }

    // one random member per region becomes its supply node; its weight is
    // the total demand of the rest of the region
    std::vector<std::vector<NodeId>> region_members(static_cast<size_t>(spec.n_supply));
    for (NodeId v = 0; v < total; ++v) {
        const auto r = out.region[static_cast<size_t>(v)];
        if (r != kNonLocated) region_members[static_cast<size_t>(r)].push_back(v);
    }
    out.supply_node.assign(static_cast<size_t>(spec.n_supply), kNonLocated);
    for (std::int32_t r = 0; r < spec.n_supply; ++r) {
        const auto& members = region_members[static_cast<size_t>(r)];
        const NodeId v = members[rng.below(members.size())];
        Weight w = 0;
        for (NodeId a : members) {
            if (a != v) w += -out.weights[static_cast<size_t>(a)];
        }
        if (w <= 0) return false;  // single-node region
        out.weights[static_cast<size_t>(v)] = w;
        out.supply_node[static_cast<size_t>(r)] = v;
    }
    return true;
}

}  // namespace

GeneratedInstance generate(const GenSpec& spec) {
    validate(spec);
    for (std::int32_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
        Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
        Attempt a;
        if (!try_generate(spec, rng, a)) continue;

        Weight optimum = 0;
        for (NodeId s : a.supply_node) optimum += a.weights[static_cast<size_t>(s)];
        Instance instance =
            Instance::create(std::move(a.weights), a.edges, spec.kind, optimum);

        // the region map, renumbered to the instance's subgraph order
        std::vector<std::int32_t> subgraph_of_region(a.supply_node.size());
        const auto& supplies = instance.supply_nodes();
        for (size_t r = 0; r < a.supply_node.size(); ++r) {
            const auto it =
                std::lower_bound(supplies.begin(), supplies.end(), a.supply_node[r]);
            subgraph_of_region[r] =
                static_cast<std::int32_t>(std::distance(supplies.begin(), it));
        }
        std::vector<std::int32_t> assignment(a.region.size(), kNonLocated);
        for (size_t v = 0; v < a.region.size(); ++v) {
            if (a.region[v] != kNonLocated) {
                assignment[v] = subgraph_of_region[static_cast<size_t>(a.region[v])];
            }
        }
        Partition witness = Partition::from_assignment(instance, std::move(assignment));
        return {std::move(instance), std::move(witness),
                static_cast<std::uint64_t>(attempt) + 1};
    }
    throw GenError("no valid instance after " + std::to_string(spec.max_attempts) +
                   " attempts for spec " + std::to_string(spec.n_supply) + "x" +
                   std::to_string(spec.n_demand));
}

}  // namespace mpgsd
