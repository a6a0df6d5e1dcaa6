#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "mpgsd/bench.hpp"
#include "mpgsd/instance_gen.hpp"
#include "mpgsd/io.hpp"
#include "test_support.hpp"

using namespace mpgsd;
using namespace mpgsd::test;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("mpgsd_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int counter() {
        static int n = 0;
        return n++;
    }
};

std::vector<std::string> make_corpus(const fs::path& dir, int count,
                                     std::uint64_t base_seed) {
    std::vector<std::string> paths;
    for (int i = 0; i < count; ++i) {
        GenSpec spec;
        spec.n_supply = 2;
        spec.n_demand = 18;
        spec.seed = mix_seed(base_seed, static_cast<std::uint64_t>(i));
        const auto gen = generate(spec);
        const auto path = dir / ("inst_2x18_" + std::to_string(i) + ".mpgsd");
        write_instance_file(gen.instance, path.string());
        paths.push_back(path.string());
    }
    return paths;
}

// CSV rows with the total_time_s column removed; everything else must be
// reproducible bit for bit.
std::string strip_time_column(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        const auto last_comma = line.rfind(',');
        if (last_comma != std::string::npos && line.find(',') != last_comma) {
            line.resize(last_comma);
        }
        out << line << "\n";
    }
    return out.str();
}

}  // namespace

TEST_SUITE("cli_bench") {

TEST_CASE("stats helpers") {
    CHECK(mean({0.0, 10.0}) == doctest::Approx(5.0));
    CHECK(population_stdev({0.0, 10.0}) == doctest::Approx(5.0));
    CHECK(mean({}) == doctest::Approx(0.0));
    CHECK(population_stdev({4.0, 4.0, 4.0}) == doctest::Approx(0.0));
}

TEST_CASE("config labels round trip") {
    for (const std::string label : {"gr-2-1", "nl-1-4", "com-3-3", "multi"}) {
        CHECK(RunConfig::parse(label).label() == label);
    }
    CHECK_THROWS_AS(RunConfig::parse("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(RunConfig::parse("gr-9-1"), std::invalid_argument);
}

TEST_CASE("reported covered demand matches a recomputation from the solution file") {
    TempDir dir;
    const auto paths = make_corpus(dir.path, 3, 42);
    for (const auto& path : paths) {
        const Instance inst = read_instance_file(path);
        const auto outcome = solve_instance(inst, RunConfig::parse("com-2-1"), {});
        const auto sol_path = path + ".sol";
        write_solution_file(outcome.partition, sol_path);
        const auto assignment = read_solution_file(sol_path);
        const Partition reread = Partition::from_assignment(inst, assignment);
        CHECK(covered_demand(inst, reread) == outcome.covered);
        CHECK(check_feasible(inst, reread).ok);
    }
}

TEST_CASE("bench aggregates per config and stays deterministic") {
    TempDir dir;
    const auto paths = make_corpus(dir.path, 4, 7);
    const std::vector<RunConfig> configs = {RunConfig::parse("gr-2-1"),
                                            RunConfig::parse("com-2-1"),
                                            RunConfig::parse("multi")};
    const BenchReport a = bench_files(paths, configs, {});
    const BenchReport b = bench_files(paths, configs, {});
    REQUIRE(a.rows.size() == 3);
    CHECK(a.rows[0].size_label == "2x18");
    CHECK(a.rows[0].kind == "general");
    CHECK(a.rows[0].instances == 4);
    for (const auto& row : a.rows) {
        CHECK(row.avg_err <= row.max_err);
        CHECK(row.stdev >= 0.0);
    }
    // pipeline order: corrections only improve on the plain greedy
    CHECK(a.rows[1].avg_err <= a.rows[0].avg_err);
    CHECK(a.rows[2].avg_err <= a.rows[1].avg_err);

    std::ostringstream csv_a, csv_b;
    write_csv(a, csv_a);
    write_csv(b, csv_b);
    CHECK(strip_time_column(csv_a.str()) == strip_time_column(csv_b.str()));
    CHECK(csv_a.str().find("size,kind,config,avg_err,max_err,stdev,total_time_s") !=
          std::string::npos);
}

TEST_CASE("mixed sizes produce a warning and grouped rows") {
    TempDir dir;
    auto paths = make_corpus(dir.path, 2, 99);
    GenSpec other;
    other.n_supply = 3;
    other.n_demand = 17;
    other.seed = 5;
    const auto gen = generate(other);
    const auto other_path = dir.path / "inst_3x17_0.mpgsd";
    write_instance_file(gen.instance, other_path.string());
    paths.push_back(other_path.string());

    const BenchReport report = bench_files(paths, {RunConfig::parse("gr-1-1")}, {});
    CHECK(report.rows.size() == 2);
    CHECK_FALSE(report.warnings.empty());
    CHECK(report.warnings.front().find("mixed sizes") != std::string::npos);
}

TEST_CASE("list_instance_files is sorted and filtered") {
    TempDir dir;
    make_corpus(dir.path, 3, 1);
    std::ofstream(dir.path / "notes.txt") << "not an instance\n";
    const auto files = list_instance_files(dir.path.string());
    REQUIRE(files.size() == 3);
    CHECK(std::is_sorted(files.begin(), files.end()));
}

}  // TEST_SUITE
