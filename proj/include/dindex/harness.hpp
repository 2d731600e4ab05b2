#pragma once

#include <dindex/constructive.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace dindex {

enum class BoundMode { thm23, thm32, conjecture11 };

std::string_view mode_name(BoundMode m);
std::optional<BoundMode> parse_mode(std::string_view name);

struct RunConfig {
    int brute_force_cap = 8;
    std::uint64_t budget_nodes = 10'000'000;
    std::chrono::milliseconds budget_time{60'000};
    int repair_attempts = 64;
    std::uint64_t seed = 1;
    int workers = 1;
    BoundMode mode = BoundMode::thm23;

    /// Throws Error unless every field is positive.
    void validate() const;
    SolveOptions solve_options() const;
    ConstructOptions construct_options() const;
};

enum class RowStatus { pass, fail, unknown, filtered, error };

std::string_view row_status_name(RowStatus s);

struct BoundRow {
    std::size_t line_no = 0;
    std::string graph6;
    int n = 0;
    int m = 0;
    int min_degree = 0;
    int max_degree = 0;
    bool connected = false;
    RowStatus status = RowStatus::error;
    std::string method;                // exact-search, theorem-2.3, ... or empty
    std::optional<int> index;          // D' or a constructed upper bound
    std::string index_kind;            // exact | upper | lower | empty
    std::optional<int> bound;          // ceil(Δ^(1/δ)) + 1 when δ >= 2
    std::optional<int> regular_bound;  // 2 for k-regular graphs with k >= 5
    double elapsed_ms = 0;
    std::string note;                  // filter reason or error text

    bool pass() const { return status == RowStatus::pass; }
    /// The bound the mode compares against.
    std::optional<int> mode_bound(BoundMode mode) const;
};

struct BoundSummary {
    BoundMode mode = BoundMode::thm23;
    std::size_t total = 0;
    std::size_t filtered = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t unknown = 0;
    std::size_t errors = 0;
    /// Largest index / bound over rows with an exact index.
    double max_ratio = 0;

    void add(const BoundRow& row, BoundMode m);
    bool all_passed() const { return failed == 0 && unknown == 0 && errors == 0; }
};

struct BoundReport {
    std::vector<BoundRow> rows;
    BoundSummary summary;
};

/// One corpus line through the mode's filter, the exact solver and, when the
/// solver runs out of budget, the matching constructor.
BoundRow evaluate_line(const Graph6Line& line, const RunConfig& config);

/// Rows in input order; `sink`, if given, sees each row as soon as all
/// earlier rows are done.
BoundReport verify_corpus(std::span<const Graph6Line> lines, const RunConfig& config,
                          const std::function<void(const BoundRow&)>& sink = {});

std::string csv_header();
std::string to_csv(const BoundRow& row);
nlohmann::json to_json(const BoundRow& row);
nlohmann::json to_json(const BoundSummary& summary);

/// Runs work(i) for i in [0, count) on `workers` threads and hands results to
/// sink(i, result) strictly in index order.
template <class T>
void run_ordered(std::size_t count, int workers, const std::function<T(std::size_t)>& work,
                 const std::function<void(std::size_t, T&&)>& sink)
{
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            sink(i, work(i));
        return;
    }
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::size_t, T> done;
    std::size_t next_job = 0;
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard lock(mu);
                if (next_job >= count || failure)
                    return;
                i = next_job++;
            }
            try {
                T result = work(i);
                std::lock_guard lock(mu);
                done.emplace(i, std::move(result));
            }
            catch (...) {
                std::lock_guard lock(mu);
                failure = std::current_exception();
            }
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min<std::size_t>(workers, count);
    for (int w = 0; w < threads; ++w)
        pool.emplace_back(worker);

    for (std::size_t emitted = 0; emitted < count; ++emitted) {
        T result;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return failure || done.contains(emitted); });
            if (failure)
                break;
            auto node = done.extract(emitted);
            result = std::move(node.mapped());
        }
        sink(emitted, std::move(result));
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace dindex
