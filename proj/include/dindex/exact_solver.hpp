#pragma once

#include <dindex/automorphism.hpp>

#include <chrono>
#include <cstdint>
#include <optional>

namespace dindex {

struct Budget {
    std::uint64_t nodes = 10'000'000;
    std::chrono::milliseconds time{60'000};
};

struct SolveOptions {
    /// Largest label count tried; 0 means Δ+1 (enough for every connected
    /// graph except K_2, which has no distinguishing labeling at all).
    int d_max = 0;
    Budget budget;
    /// Prune a partial labeling when some nontrivial automorphism preserves
    /// it while fixing every unlabeled edge. Sound but off by default.
    bool partial_pruning = false;
    /// Random complete labelings tried at each label count before the
    /// systematic search. Found labelings are verified like any leaf.
    int random_probes = 64;
    std::uint64_t seed = 0;
    AutConfig aut;
};

enum class SolveStatus {
    solved,
    budget_exhausted,  // D' unknown; lower_bound is proven
    range_exhausted,   // no distinguishing labeling with <= d_max labels
    impossible,        // no distinguishing labeling with any number of labels (K_2)
};

std::string_view status_name(SolveStatus s);

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    double elapsed_ms = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::budget_exhausted;
    int dprime = 0;       // valid when solved
    int lower_bound = 1;  // every labeling with fewer labels was refuted
    std::optional<Certificate> certificate;
    SolveStats stats;
};

/// Least number of labels in a distinguishing edge labeling. Label counts
/// d = 1, 2, ... are searched in turn; at level d only labelings that use
/// exactly d labels (in first-occurrence order) are visited, since fewer were
/// refuted at earlier levels. Throws Error if g is disconnected or edgeless.
SolveResult exact_distinguishing_index(const Graph& g, const SolveOptions& options = {});

enum class SearchOutcome { found, exhausted, budget_exhausted };

struct LabelSearchResult {
    SearchOutcome outcome = SearchOutcome::exhausted;
    std::optional<EdgeLabeling> labeling;
    SolveStats stats;
};

/// Looks for any distinguishing labeling with at most `max_labels` labels.
/// Used where a budget, not minimality, matters.
LabelSearchResult find_distinguishing_labeling(const Graph& g, int max_labels, const SolveOptions& options = {});

struct BruteForceLimits {
    int max_edges = 12;
    std::size_t max_group = 4'000'000;
};

/// Independent oracle: enumerates Aut(g) explicitly, then every labeling up to
/// renaming of labels, testing each against every automorphism. No pruning.
/// Returns nullopt when no labeling is distinguishing (K_2). Throws Error
/// when m or |Aut| exceeds the limits.
std::optional<int> brute_force_index(const Graph& g, const BruteForceLimits& limits = {});

}  // namespace dindex
