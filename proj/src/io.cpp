#include "mpgsd/io.hpp"

#include <fstream>
#include <sstream>

namespace mpgsd {

namespace {

// Line-by-line tokenizer that strips '#' comments and blank lines and
// remembers the current line number for error messages.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-empty line, split into whitespace tokens.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_number_;
            if (const auto hash = line.find('#'); hash != std::string::npos) {
                line.resize(hash);
            }
            tokens.clear();
            std::istringstream iss(line);
            std::string tok;
            while (iss >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    int line_number() const { return line_number_; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("line " + std::to_string(line_number_) + ": " + message);
    }

private:
    std::istream& in_;
    int line_number_ = 0;
};

std::int64_t parse_int(const LineReader& reader, const std::string& token) {
    try {
        size_t pos = 0;
        const long long value = std::stoll(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        reader.fail("expected an integer, got '" + token + "'");
    }
}

}  // namespace

Instance read_instance(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tok;

    if (!reader.next(tok) || tok.size() != 2 || tok[0] != "MPGSD" || tok[1] != "1") {
        reader.fail("expected header 'MPGSD 1'");
    }
    if (!reader.next(tok) || tok.size() != 2 || tok[0] != "kind") {
        reader.fail("expected 'kind general|tree'");
    }
    GraphKind kind;
    if (tok[1] == "general") {
        kind = GraphKind::General;
    } else if (tok[1] == "tree") {
        kind = GraphKind::Tree;
    } else {
        reader.fail("unknown kind '" + tok[1] + "'");
    }

    if (!reader.next(tok) || tok.size() != 3 || tok[0] != "nodes") {
        reader.fail("expected 'nodes <n_supply> <n_demand>'");
    }
    const auto n_supply = parse_int(reader, tok[1]);
    const auto n_demand = parse_int(reader, tok[2]);
    if (n_supply < 1 || n_demand < 0) reader.fail("invalid node counts");
    const auto total = n_supply + n_demand;

    std::vector<Weight> weights(static_cast<size_t>(total), 0);
    std::vector<char> seen(static_cast<size_t>(total), 0);
    for (std::int64_t i = 0; i < total; ++i) {
        if (!reader.next(tok) || tok.size() != 2) {
            reader.fail("expected '<node_id> <weight>'");
        }
        const auto id = parse_int(reader, tok[0]);
        const auto w = parse_int(reader, tok[1]);
        if (id < 0 || id >= total) reader.fail("node id out of range");
        if (seen[static_cast<size_t>(id)]) {
            reader.fail("duplicate node id " + std::to_string(id));
        }
        if (w == 0) reader.fail("node weight must not be 0");
        seen[static_cast<size_t>(id)] = 1;
        weights[static_cast<size_t>(id)] = w;
    }

    if (!reader.next(tok) || tok.size() != 2 || tok[0] != "edges") {
        reader.fail("expected 'edges <edge_count>'");
    }
    const auto edge_count = parse_int(reader, tok[1]);
    if (edge_count < 0) reader.fail("invalid edge count");

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<size_t>(edge_count));
    for (std::int64_t i = 0; i < edge_count; ++i) {
        if (!reader.next(tok) || tok.size() != 2) {
            reader.fail("expected '<u> <v>'");
        }
        const auto u = parse_int(reader, tok[0]);
        const auto v = parse_int(reader, tok[1]);
        if (u < 0 || v < 0 || u >= total || v >= total) {
            reader.fail("edge endpoint out of range");
        }
        if (u >= v) reader.fail("edges must satisfy u < v");
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }

    std::optional<Weight> optimum;
    if (reader.next(tok)) {
        if (tok.size() != 2 || tok[0] != "optimum") {
            reader.fail("expected 'optimum <value>' or end of file");
        }
        optimum = parse_int(reader, tok[1]);
        if (reader.next(tok)) reader.fail("trailing content after optimum line");
    }

    Instance inst = [&] {
        try {
            return Instance::create(std::move(weights), edges, kind, optimum);
        } catch (const std::invalid_argument& e) {
            throw ParseError("line " + std::to_string(reader.line_number()) + ": " +
                             e.what());
        }
    }();
    if (inst.num_supply() != n_supply) {
        throw ParseError("declared " + std::to_string(n_supply) +
                         " supply nodes, found " + std::to_string(inst.num_supply()));
    }
    return inst;
}

Instance read_instance_string(const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file " + path);
    try {
        return read_instance(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_instance(const Instance& instance, std::ostream& out) {
    out << "MPGSD 1\n";
    out << "kind " << to_string(instance.kind()) << "\n";
    out << "nodes " << instance.num_supply() << " " << instance.num_demand() << "\n";
    for (NodeId v = 0; v < instance.num_nodes(); ++v) {
        out << v << " " << instance.weight(v) << "\n";
    }
    const auto edges = instance.edge_list();
    out << "edges " << edges.size() << "\n";
    for (const auto& [u, v] : edges) {
        out << u << " " << v << "\n";
    }
    if (instance.optimum_hint()) {
        out << "optimum " << *instance.optimum_hint() << "\n";
    }
}

std::string write_instance_string(const Instance& instance) {
    std::ostringstream out;
    write_instance(instance, out);
    return out.str();
}

void write_instance_file(const Instance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file " + path);
    write_instance(instance, out);
    if (!out) throw std::runtime_error("failed writing instance file " + path);
}

std::vector<std::int32_t> read_solution(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tok;
    if (!reader.next(tok) || tok.size() != 2 || tok[0] != "SOLUTION" || tok[1] != "1") {
        reader.fail("expected header 'SOLUTION 1'");
    }
    std::vector<std::pair<std::int64_t, std::int32_t>> rows;
    while (reader.next(tok)) {
        if (tok.size() != 2) reader.fail("expected '<node_id> <subgraph|-1>'");
        const auto id = parse_int(reader, tok[0]);
        const auto sub = parse_int(reader, tok[1]);
        if (id < 0) reader.fail("node id out of range");
        if (sub < kNonLocated) reader.fail("invalid subgraph index");
        rows.emplace_back(id, static_cast<std::int32_t>(sub));
    }
    std::vector<std::int32_t> assignment(rows.size(), kNonLocated);
    std::vector<char> seen(rows.size(), 0);
    for (const auto& [id, sub] : rows) {
        if (id >= static_cast<std::int64_t>(rows.size())) {
            throw ParseError("node id " + std::to_string(id) +
                             " out of range for " + std::to_string(rows.size()) +
                             " solution rows");
        }
        if (seen[static_cast<size_t>(id)]) {
            throw ParseError("duplicate node id " + std::to_string(id));
        }
        seen[static_cast<size_t>(id)] = 1;
        assignment[static_cast<size_t>(id)] = sub;
    }
    return assignment;
}

std::vector<std::int32_t> read_solution_string(const std::string& text) {
    std::istringstream in(text);
    return read_solution(in);
}

std::vector<std::int32_t> read_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open solution file " + path);
    try {
        return read_solution(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_solution(const Partition& partition, std::ostream& out) {
    out << "SOLUTION 1\n";
    for (size_t v = 0; v < partition.assignment.size(); ++v) {
        out << v << " " << partition.assignment[v] << "\n";
    }
}

std::string write_solution_string(const Partition& partition) {
    std::ostringstream out;
    write_solution(partition, out);
    return out.str();
}

void write_solution_file(const Partition& partition, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write solution file " + path);
    write_solution(partition, out);
    if (!out) throw std::runtime_error("failed writing solution file " + path);
}

}  // namespace mpgsd
