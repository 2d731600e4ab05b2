#include <dindex/exact_solver.hpp>

#include "labeled_graph.hpp"
#include "refinement_search.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace dindex {

std::string_view status_name(SolveStatus s)
{
    switch (s) {
    case SolveStatus::solved: return "solved";
    case SolveStatus::budget_exhausted: return "budget-exhausted";
    case SolveStatus::range_exhausted: return "range-exhausted";
    case SolveStatus::impossible: return "impossible";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

/// Depth-first search over labelings of one label count, with edges visited
/// in a fixed order and labels in first-occurrence (restricted growth) form.
class LevelSearch {
public:
    LevelSearch(const Graph& g, std::vector<int> edge_order, const SolveOptions& options, Clock::time_point start,
                SolveStats& stats)
        : g_(g), order_(std::move(edge_order)), options_(options), start_(start), stats_(stats),
          labels_(g.size(), 0)
    {
    }

    /// Labelings with exactly `d` labels (or at most `d` when exact is false).
    SearchOutcome run(int d, bool exact)
    {
        d_ = d;
        exact_ = exact;
        found_ = false;
        out_of_budget_ = false;
        std::fill(labels_.begin(), labels_.end(), 0);
        descend(0, 0);
        if (found_)
            return SearchOutcome::found;
        return out_of_budget_ ? SearchOutcome::budget_exhausted : SearchOutcome::exhausted;
    }

    const std::vector<int>& labels() const { return found_labels_; }

private:
    bool over_budget()
    {
        if (stats_.nodes >= options_.budget.nodes)
            return true;
        if ((stats_.nodes & 255) == 0 && Clock::now() - start_ > options_.budget.time)
            return true;
        return false;
    }

    void descend(std::size_t pos, int used)
    {
        if (found_ || out_of_budget_)
            return;
        ++stats_.nodes;
        if (over_budget()) {
            out_of_budget_ = true;
            return;
        }
        const std::size_t m = order_.size();
        if (pos == m) {
            if (exact_ && used != d_)
                return;
            ++stats_.leaves;
            EdgeLabeling lab{labels_};
            if (is_distinguishing(g_, lab).distinguishing) {
                found_ = true;
                found_labels_ = labels_;
            }
            return;
        }
        int top = std::min(d_, used + 1);
        for (int l = 1; l <= top && ! found_ && ! out_of_budget_; ++l) {
            int now_used = std::max(used, l);
            if (exact_ && static_cast<int>(m - pos - 1) < d_ - now_used)
                continue;
            labels_[order_[pos]] = l;
            if (options_.partial_pruning && pos + 1 < m && partial_is_doomed(pos + 1))
                continue;
            descend(pos + 1, now_used);
        }
        labels_[order_[pos]] = 0;
    }

    // A nontrivial automorphism that preserves the labeled prefix and maps
    // every unlabeled edge to itself preserves every completion.
    bool partial_is_doomed(std::size_t labeled)
    {
        std::vector<int> tagged(labels_.size());
        int next = d_ + 1;
        for (std::size_t i = 0; i < order_.size(); ++i) {
            int e = order_[i];
            tagged[e] = i < labeled ? labels_[e] : next++;
        }
        detail::LabeledGraph lg(g_, tagged);
        detail::RefinementSearch search(lg, {});
        return ! search.run(true).generators.empty();
    }

    const Graph& g_;
    std::vector<int> order_;
    const SolveOptions& options_;
    Clock::time_point start_;
    SolveStats& stats_;
    std::vector<int> labels_;
    std::vector<int> found_labels_;
    int d_ = 1;
    bool exact_ = true;
    bool found_ = false;
    bool out_of_budget_ = false;
};

/// Large edge orbits first, then canonical order.
std::vector<int> assignment_order(const Graph& g, const AutConfig& aut)
{
    auto group = automorphism_group(g, aut);
    auto orbits = edge_orbits(g, group);
    std::vector<int> orbit_size(g.size());
    for (const auto& o : orbits)
        for (int e : o)
            orbit_size[e] = static_cast<int>(o.size());
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return orbit_size[a] > orbit_size[b]; });
    return order;
}

std::optional<std::vector<int>> random_probe(const Graph& g, int d, bool exact, const SolveOptions& options,
                                             SolveStats& stats)
{
    if (options.random_probes <= 0 || d < 2)
        return std::nullopt;
    std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(d)));
    std::uniform_int_distribution<int> pick(1, d);
    std::vector<int> labels(g.size());
    for (int t = 0; t < options.random_probes; ++t) {
        for (int& l : labels)
            l = pick(rng);
        EdgeLabeling lab{labels};
        if (exact && lab.label_count() != d)
            continue;
        ++stats.leaves;
        if (is_distinguishing(g, lab).distinguishing)
            return labels;
    }
    return std::nullopt;
}

void check_input(const Graph& g)
{
    if (g.size() == 0)
        throw Error("graph has no edges");
    if (! is_connected(g))
        throw Error("graph is not connected");
}

}  // namespace

SolveResult exact_distinguishing_index(const Graph& g, const SolveOptions& options)
{
    check_input(g);
    auto start = Clock::now();
    SolveResult result;
    auto finish = [&]() -> SolveResult& {
        result.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return result;
    };

    int d_max = options.d_max > 0 ? options.d_max : degree_stats(g).max_degree + 1;
    int d_limit = std::min(d_max, g.size());

    auto solved = [&](int d, std::vector<int> labels) {
        result.status = SolveStatus::solved;
        result.dprime = d;
        result.lower_bound = d;
        result.certificate = is_distinguishing(g, EdgeLabeling{std::move(labels)}, Method::exact_search);
    };

    // d = 1: only the constant labeling, distinguishing iff Aut(g) is trivial.
    {
        std::vector<int> ones(g.size(), 1);
        ++result.stats.leaves;
        if (is_distinguishing(g, EdgeLabeling{ones}).distinguishing) {
            solved(1, std::move(ones));
            return finish();
        }
        result.lower_bound = 2;
    }

    LevelSearch search(g, assignment_order(g, options.aut), options, start, result.stats);
    for (int d = 2; d <= d_limit; ++d) {
        if (auto probe = random_probe(g, d, true, options, result.stats)) {
            solved(d, std::move(*probe));
            return finish();
        }
        auto outcome = search.run(d, true);
        if (outcome == SearchOutcome::found) {
            solved(d, search.labels());
            return finish();
        }
        if (outcome == SearchOutcome::budget_exhausted) {
            result.status = SolveStatus::budget_exhausted;
            return finish();
        }
        result.lower_bound = d + 1;
    }
    result.status = d_limit == g.size() && d_max >= g.size() ? SolveStatus::impossible : SolveStatus::range_exhausted;
    return finish();
}

LabelSearchResult find_distinguishing_labeling(const Graph& g, int max_labels, const SolveOptions& options)
{
    check_input(g);
    auto start = Clock::now();
    LabelSearchResult out;
    int d = std::max(1, std::min(max_labels, g.size()));
    std::vector<int> ones(g.size(), 1);
    if (is_distinguishing(g, EdgeLabeling{ones}).distinguishing) {
        out.outcome = SearchOutcome::found;
        out.labeling = EdgeLabeling{ones};
        return out;
    }
    if (auto probe = random_probe(g, d, false, options, out.stats)) {
        out.outcome = SearchOutcome::found;
        out.labeling = EdgeLabeling{std::move(*probe)};
    }
    else {
        LevelSearch search(g, assignment_order(g, options.aut), options, start, out.stats);
        out.outcome = search.run(d, false);
        if (out.outcome == SearchOutcome::found)
            out.labeling = EdgeLabeling{search.labels()};
    }
    out.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return out;
}

}  // namespace dindex
