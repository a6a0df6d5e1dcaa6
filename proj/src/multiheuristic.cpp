#include "mpgsd/multiheuristic.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace mpgsd {

namespace {

struct ComboOutcome {
    ComboResult result;
    Partition partition;
};

ComboOutcome run_one(const Instance& instance, const HeuristicConfig& config,
                     const CorrectionLimits& limits) {
    const auto start = std::chrono::steady_clock::now();
    GreedyResult greedy = run_greedy(instance, config);
    run_combined(greedy.state, limits);
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    return {{config, greedy.state.covered_demand(), elapsed.count()},
            greedy.state.partition()};
}

}  // namespace

MultiResult run_multi(const Instance& instance, const CorrectionLimits& limits,
                      bool parallel) {
    const auto configs = all_heuristic_configs();
    std::vector<ComboOutcome> outcomes(configs.size());

    if (parallel) {
        std::atomic<size_t> next{0};
        const unsigned worker_count =
            std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                               static_cast<unsigned>(configs.size()));
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (unsigned w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (size_t k = next.fetch_add(1); k < configs.size();
                     k = next.fetch_add(1)) {
                    try {
                        outcomes[k] = run_one(instance, configs[k], limits);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : workers) t.join();
        if (failure) std::rethrow_exception(failure);
    } else {
        for (size_t k = 0; k < configs.size(); ++k) {
            outcomes[k] = run_one(instance, configs[k], limits);
        }
    }

    MultiResult result;
    result.per_combo.reserve(outcomes.size());
    size_t best_index = 0;
    for (size_t k = 0; k < outcomes.size(); ++k) {
        result.per_combo.push_back(outcomes[k].result);
        if (outcomes[k].result.covered > outcomes[best_index].result.covered) {
            best_index = k;
        }
    }
    result.best = std::move(outcomes[best_index].partition);
    result.best_covered = outcomes[best_index].result.covered;
    result.best_config = outcomes[best_index].result.config;
    return result;
}

}  // namespace mpgsd
