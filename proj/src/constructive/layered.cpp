#include "layered.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dindex::detail {

namespace {

constexpr std::size_t kCandidateCap = 4096;

/// Up to kCandidateCap label vectors of length k over `alphabet`, in
/// lexicographic order of alphabet position (shuffled when randomizing).
std::vector<std::vector<int>> label_vectors(const std::vector<int>& alphabet, int k, bool randomize,
                                            std::mt19937_64& rng)
{
    std::vector<std::vector<int>> out;
    const int base = static_cast<int>(alphabet.size());
    std::size_t total = 1;
    for (int i = 0; i < k && total <= kCandidateCap; ++i)
        total *= base;
    if (total <= kCandidateCap) {
        std::vector<int> digits(k, 0);
        for (std::size_t c = 0; c < total; ++c) {
            std::vector<int> v(k);
            for (int i = 0; i < k; ++i)
                v[i] = alphabet[digits[i]];
            out.push_back(std::move(v));
            for (int i = k - 1; i >= 0; --i) {
                if (++digits[i] < base)
                    break;
                digits[i] = 0;
            }
        }
        if (randomize)
            std::shuffle(out.begin(), out.end(), rng);
        return out;
    }
    std::uniform_int_distribution<int> pick(0, base - 1);
    std::vector<int> first(k, alphabet[0]);
    out.push_back(first);
    while (out.size() < kCandidateCap) {
        std::vector<int> v(k);
        for (int& x : v)
            x = alphabet[randomize ? pick(rng) : static_cast<int>(out.size() * 2654435761U % base)];
        out.push_back(std::move(v));
    }
    return out;
}

/// Non-decreasing vectors (multisets) of length k over `alphabet`.
std::vector<std::vector<int>> label_multisets(const std::vector<int>& alphabet, int k)
{
    std::vector<std::vector<int>> out;
    const int base = static_cast<int>(alphabet.size());
    std::vector<int> idx(k, 0);
    while (out.size() < kCandidateCap) {
        std::vector<int> v(k);
        for (int i = 0; i < k; ++i)
            v[i] = alphabet[idx[i]];
        out.push_back(std::move(v));
        int i = k - 1;
        while (i >= 0 && idx[i] == base - 1)
            --i;
        if (i < 0)
            break;
        int nv = idx[i] + 1;
        for (int j = i; j < k; ++j)
            idx[j] = nv;
    }
    return out;
}

struct ChildClass {
    std::vector<Vertex> parents;
    std::vector<Vertex> members;
};

}  // namespace

LayeredState::LayeredState(const Graph& graph, Vertex root, int word_labels_, std::vector<int> preference_, int fill_,
                           std::uint64_t seed, bool randomize_)
    : g(graph), bfs(bfs_layers(graph, root)), labels(graph.size(), 0), locked(graph.size(), 0),
      ident_class(graph.order(), -1), word_labels(word_labels_), preference(std::move(preference_)), fill(fill_),
      rng(seed), randomize(randomize_)
{
}

std::vector<int> LayeredState::filled() const
{
    auto out = labels;
    for (int& l : out)
        if (l == 0)
            l = fill;
    return out;
}

std::vector<int> count_vector(const LayeredState& s, Vertex x)
{
    std::vector<int> counts(s.word_labels + 2, 0);
    for (Vertex w : s.g.neighbors(x)) {
        int l = s.labels[s.g.edge_index(x, w)];
        if (l >= static_cast<int>(counts.size()))
            counts.resize(l + 1, 0);
        ++counts[l];
    }
    return counts;
}

std::vector<int> LayeredState::layered_key(Vertex x) const
{
    const int width = word_labels + 2;
    std::vector<int> key(3 * width, 0);
    for (Vertex w : g.neighbors(x)) {
        int rel = layer(w) - layer(x) + 1;  // 0 up, 1 same, 2 down
        int l = std::min(labels[g.edge_index(x, w)], width - 1);
        ++key[rel * width + l];
    }
    return key;
}

bool LayeredState::identities_hold() const
{
    std::map<int, std::set<std::vector<int>>> seen;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (ident_class[x] < 0)
            continue;
        if (! seen[ident_class[x]].insert(layered_key(x)).second)
            return false;
    }
    return true;
}

std::vector<Vertex> LayeredState::unfixed(std::span<const Vertex> among) const
{
    auto f = filled();
    auto group = labeled_automorphism_group(g, f);
    if (group.generators.empty())
        return {};
    auto orbit = vertex_orbit_ids(g.order(), group.generators);
    std::vector<int> size(g.order(), 0);
    for (int id : orbit)
        ++size[id];
    std::vector<Vertex> out;
    for (Vertex u : among)
        if (size[orbit[u]] > 1)
            out.push_back(u);
    return out;
}

bool assign_distinct_counts(LayeredState& s, Vertex x, std::span<const int> edges,
                            std::vector<std::vector<int>>& taken)
{
    std::vector<int> free;
    for (int e : edges)
        if (s.labels[e] == 0)
            free.push_back(e);
    if (free.empty()) {
        auto cv = count_vector(s, x);
        bool fresh = std::find(taken.begin(), taken.end(), cv) == taken.end();
        taken.push_back(std::move(cv));
        return fresh;
    }
    auto candidates = label_multisets(s.preference, static_cast<int>(free.size()));
    if (s.randomize)
        std::shuffle(candidates.begin(), candidates.end(), s.rng);
    for (const auto& c : candidates) {
        for (std::size_t i = 0; i < free.size(); ++i)
            s.labels[free[i]] = c[i];
        auto cv = count_vector(s, x);
        if (std::find(taken.begin(), taken.end(), cv) == taken.end()) {
            taken.push_back(std::move(cv));
            return true;
        }
    }
    for (std::size_t i = 0; i < free.size(); ++i)
        s.labels[free[i]] = candidates.front()[i];
    taken.push_back(count_vector(s, x));
    return false;
}

namespace {

std::vector<ChildClass> child_classes(const LayeredState& s, int i)
{
    std::map<std::vector<Vertex>, std::vector<Vertex>> by_parents;
    for (Vertex w : s.bfs.layers[i + 1]) {
        std::vector<Vertex> parents;
        for (Vertex x : s.g.neighbors(w))
            if (s.layer(x) == i)
                parents.push_back(x);
        by_parents[parents].push_back(w);
    }
    std::vector<ChildClass> out;
    for (auto& [parents, members] : by_parents)
        out.push_back({parents, members});
    return out;
}

std::vector<int> word(const LayeredState& s, const ChildClass& c, Vertex w)
{
    std::vector<int> out;
    for (Vertex x : c.parents)
        out.push_back(s.labels[s.g.edge_index(x, w)]);
    return out;
}

int collisions(const LayeredState& s, const std::vector<ChildClass>& classes)
{
    int total = 0;
    for (const auto& c : classes) {
        std::map<std::vector<int>, int> freq;
        for (Vertex w : c.members)
            total += freq[word(s, c, w)]++;
    }
    return total;
}

void assign_words(LayeredState& s, const std::vector<ChildClass>& classes)
{
    for (const auto& c : classes) {
        std::set<std::vector<int>> used;
        for (Vertex w : c.members) {
            std::vector<int> free;
            for (std::size_t k = 0; k < c.parents.size(); ++k)
                if (s.labels[s.g.edge_index(c.parents[k], w)] == 0)
                    free.push_back(static_cast<int>(k));
            if (! free.empty()) {
                auto candidates = label_vectors(s.preference, static_cast<int>(free.size()), s.randomize, s.rng);
                const std::vector<int>* chosen = &candidates.front();
                for (const auto& cand : candidates) {
                    for (std::size_t f = 0; f < free.size(); ++f)
                        s.label_of(c.parents[free[f]], w) = cand[f];
                    if (! used.contains(word(s, c, w))) {
                        chosen = &cand;
                        break;
                    }
                }
                for (std::size_t f = 0; f < free.size(); ++f)
                    s.label_of(c.parents[free[f]], w) = (*chosen)[f];
            }
            used.insert(word(s, c, w));
        }
    }
}

std::vector<int> downward_edges(const LayeredState& s, Vertex x)
{
    std::vector<int> out;
    for (Vertex w : s.g.neighbors(x))
        if (s.layer(w) == s.layer(x) + 1) {
            int e = s.g.edge_index(x, w);
            if (! s.locked[e] && s.labels[e] != 0)
                out.push_back(e);
        }
    return out;
}

// Action 1: permute the labels already sitting on a parent's downward edges.
void permute_components(LayeredState& s, int i, const std::vector<ChildClass>& classes, int& current)
{
    bool improved = true;
    while (improved && current > 0) {
        improved = false;
        for (Vertex x : s.bfs.layers[i]) {
            auto down = downward_edges(s, x);
            for (std::size_t a = 0; a < down.size(); ++a)
                for (std::size_t b = a + 1; b < down.size(); ++b) {
                    if (s.labels[down[a]] == s.labels[down[b]])
                        continue;
                    std::swap(s.labels[down[a]], s.labels[down[b]]);
                    int now = collisions(s, classes);
                    if (now < current) {
                        current = now;
                        improved = true;
                    }
                    else
                        std::swap(s.labels[down[a]], s.labels[down[b]]);
                }
        }
    }
}

// Action 2: give a parent a fresh tuple on its downward edges, provided the
// parent stays distinguishable within its identification class.
void retuple(LayeredState& s, int i, const std::vector<ChildClass>& classes, int& current)
{
    bool improved = true;
    while (improved && current > 0) {
        improved = false;
        for (Vertex x : s.bfs.layers[i]) {
            auto down = downward_edges(s, x);
            if (down.empty())
                continue;
            std::vector<int> saved;
            for (int e : down)
                saved.push_back(s.labels[e]);
            auto candidates = label_vectors(s.preference, static_cast<int>(down.size()), s.randomize, s.rng);
            int best = current;
            std::vector<int> best_labels;
            for (const auto& cand : candidates) {
                for (std::size_t k = 0; k < down.size(); ++k)
                    s.labels[down[k]] = cand[k];
                int now = collisions(s, classes);
                if (now < best && s.identities_hold()) {
                    best = now;
                    best_labels = cand;
                    if (best == 0)
                        break;
                }
            }
            const auto& apply = best_labels.empty() ? saved : best_labels;
            for (std::size_t k = 0; k < down.size(); ++k)
                s.labels[down[k]] = apply[k];
            if (best < current) {
                current = best;
                improved = true;
            }
        }
    }
}

// Actions 3-5: label edges near the still-unfixed vertices, one edge at a
// time, keeping whichever label leaves the fewest vertices unfixed.
void label_nearby(LayeredState& s, int i, std::vector<Vertex> scope)
{
    const int depth = s.bfs.eccentricity();
    std::vector<Vertex> targets = s.unfixed(scope);
    if (targets.empty())
        return;

    auto candidates = [&](const std::vector<Vertex>& tgt) {
        std::vector<int> group3, group4, group5;
        std::set<int> seen;
        auto add = [&](std::vector<int>& grp, int e) {
            if (s.labels[e] == 0 && seen.insert(e).second)
                grp.push_back(e);
        };
        for (Vertex w : tgt)
            for (Vertex y : s.g.neighbors(w)) {
                if (s.layer(y) == s.layer(w))
                    add(group3, s.g.edge_index(w, y));
                else if (s.layer(y) == s.layer(w) + 1)
                    add(group4, s.g.edge_index(w, y));
            }
        for (Vertex w : tgt)
            for (Vertex y : s.g.neighbors(w)) {
                if (s.layer(y) != s.layer(w) + 1 || s.layer(y) > depth)
                    continue;
                for (Vertex z : s.g.neighbors(y))
                    if (s.layer(z) == s.layer(y))
                        add(group5, s.g.edge_index(y, z));
            }
        std::vector<int> all;
        for (auto* grp : {&group3, &group4, &group5})
            all.insert(all.end(), grp->begin(), grp->end());
        return all;
    };

    (void)i;
    for (int e : candidates(targets)) {
        int best_label = 0;
        std::size_t best = targets.size();
        for (int l : s.preference) {
            s.labels[e] = l;
            auto now = s.unfixed(scope);
            if (now.size() < best) {
                best = now.size();
                best_label = l;
            }
        }
        s.labels[e] = 0;
        if (best_label != 0 && best < targets.size()) {
            s.labels[e] = best_label;
            s.locked[e] = 1;
            targets = s.unfixed(scope);
            if (targets.empty())
                return;
        }
    }
}

void fill_layer(LayeredState& s, int layer)
{
    for (Vertex u : s.bfs.layers[layer])
        for (Vertex w : s.g.neighbors(u))
            if (s.layer(w) == layer && s.label_of(u, w) == 0)
                s.label_of(u, w) = s.fill;
}

}  // namespace

void propagate_layers(LayeredState& s)
{
    const int depth = s.bfs.eccentricity();
    std::vector<Vertex> settled;
    for (int i = 0; i <= std::min(1, depth); ++i)
        settled.insert(settled.end(), s.bfs.layers[i].begin(), s.bfs.layers[i].end());

    for (int i = 1; i < depth; ++i) {
        auto classes = child_classes(s, i);
        assign_words(s, classes);
        int current = collisions(s, classes);
        if (current > 0)
            permute_components(s, i, classes, current);
        if (current > 0)
            retuple(s, i, classes, current);

        settled.insert(settled.end(), s.bfs.layers[i + 1].begin(), s.bfs.layers[i + 1].end());
        label_nearby(s, i, settled);
        fill_layer(s, i + 1);
        if (! s.unfixed(settled).empty())
            s.failed_layers.push_back(i + 1);
    }
    for (int& l : s.labels)
        if (l == 0)
            l = s.fill;
}

Construction with_fallback_certificate(const Graph& g, Construction best, std::uint64_t seed)
{
    if (best.certificate.labeling.labels.empty()) {
        best.certificate = is_distinguishing(g, EdgeLabeling{std::vector<int>(g.size(), 1)}, Method::repair);
        best.certificate.seed = seed;
    }
    return best;
}

Construction finish(const Graph& g, Construction best, int budget, const ConstructOptions& options,
                    Method fallback_method)
{
    auto opts = options.fallback;
    opts.seed = options.seed;
    auto found = find_distinguishing_labeling(g, budget, opts);
    if (found.outcome == SearchOutcome::found) {
        Construction out;
        out.certificate = is_distinguishing(g, *found.labeling, fallback_method);
        out.certificate.seed = options.seed;
        out.budget = budget;
        out.route = "repair";
        out.attempts = best.attempts;
        return out;
    }
    return with_fallback_certificate(g, std::move(best), options.seed);
}

}  // namespace dindex::detail
