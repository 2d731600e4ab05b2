#include "refinement_search.hpp"

#include <dindex/bitkernels.hpp>

#include <algorithm>
#include <numeric>

namespace dindex::detail {

namespace {

std::vector<int> rank_values(std::span<const int> values)
{
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin());
    return out;
}

std::vector<Vertex> orbit_of(Vertex b, int n, std::span<const Permutation> gens)
{
    std::vector<char> seen(n, 0);
    std::vector<Vertex> orbit{b};
    seen[b] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const auto& p : gens) {
            Vertex y = p(orbit[i]);
            if (! seen[y]) {
                seen[y] = 1;
                orbit.push_back(y);
            }
        }
    return orbit;
}

}  // namespace

RefinementSearch::RefinementSearch(const LabeledGraph& lg, std::span<const int> vertex_colors)
    : lg_(lg), n_(lg.order())
{
    if (vertex_colors.empty())
        initial_.color.assign(n_, 0);
    else
        initial_.color = rank_values(vertex_colors);
    initial_.cells = n_ == 0 ? 0 : *std::max_element(initial_.color.begin(), initial_.color.end()) + 1;
}

void RefinementSearch::refine(Coloring& c) const
{
    const int w = lg_.words();
    const int labels = lg_.num_labels();
    const auto& k = kernels::active();
    while (c.cells < n_) {
        const int cells = c.cells;
        const std::size_t stride = 1 + static_cast<std::size_t>(labels) * cells;

        masks_.assign(static_cast<std::size_t>(cells) * w, 0);
        for (Vertex u = 0; u < n_; ++u)
            masks_[static_cast<std::size_t>(c.color[u]) * w + (u >> 6)] |= std::uint64_t{1} << (u & 63);

        sig_.resize(stride * n_);
        for (Vertex u = 0; u < n_; ++u) {
            std::uint32_t* s = sig_.data() + stride * u;
            s[0] = static_cast<std::uint32_t>(c.color[u]);
            for (int l = 0; l < labels; ++l)
                k.cell_counts(lg_.row(l, u), masks_.data(), cells, w, s + 1 + static_cast<std::size_t>(l) * cells);
        }

        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        auto sig_of = [&](int u) { return sig_.data() + stride * u; };
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            return std::lexicographical_compare(sig_of(a), sig_of(a) + stride, sig_of(b), sig_of(b) + stride);
        });

        int next = 0;
        std::vector<int> fresh(n_);
        for (int i = 0; i < n_; ++i) {
            if (i > 0 && ! std::equal(sig_of(order_[i - 1]), sig_of(order_[i - 1]) + stride, sig_of(order_[i])))
                ++next;
            fresh[order_[i]] = next;
        }
        int new_cells = n_ == 0 ? 0 : next + 1;
        c.color = std::move(fresh);
        if (new_cells == cells)
            break;
        c.cells = new_cells;
    }
}

RefinementSearch::Coloring RefinementSearch::individualize(const Coloring& c, Vertex x) const
{
    Coloring out;
    out.color.resize(n_);
    for (Vertex u = 0; u < n_; ++u)
        out.color[u] = 2 * c.color[u] + (u == x ? 0 : 1);
    out.color = rank_values(out.color);
    out.cells = *std::max_element(out.color.begin(), out.color.end()) + 1;
    refine(out);
    return out;
}

std::vector<int> RefinementSearch::cell_sizes(const Coloring& c) const
{
    std::vector<int> sizes(c.cells, 0);
    for (int col : c.color)
        ++sizes[col];
    return sizes;
}

std::vector<Vertex> RefinementSearch::target_cell(const Coloring& c) const
{
    auto sizes = cell_sizes(c);
    auto it = std::find_if(sizes.begin(), sizes.end(), [](int s) { return s > 1; });
    std::vector<Vertex> members;
    if (it == sizes.end())
        return members;
    int target = static_cast<int>(it - sizes.begin());
    for (Vertex u = 0; u < n_; ++u)
        if (c.color[u] == target)
            members.push_back(u);
    return members;
}

bool RefinementSearch::find_automorphism(const Coloring& c, std::size_t depth, std::vector<Vertex>& out) const
{
    if (c.cells == n_) {
        out.assign(n_, 0);
        for (Vertex u = 0; u < n_; ++u)
            out[ref_vertex_of_color_[c.color[u]]] = u;
        return lg_.preserved_by(out);
    }
    for (Vertex y : target_cell(c)) {
        Coloring child = individualize(c, y);
        if (cell_sizes(child) != path_sizes_[depth + 1])
            continue;
        if (find_automorphism(child, depth + 1, out))
            return true;
    }
    return false;
}

RefinementSearch::Result RefinementSearch::run(bool stop_at_first)
{
    Result result;
    path_.clear();
    path_sizes_.clear();

    Coloring root = initial_;
    refine(root);
    path_.push_back(root);
    std::vector<Vertex> base;
    while (path_.back().cells < n_) {
        Vertex b = target_cell(path_.back()).front();
        base.push_back(b);
        path_.push_back(individualize(path_.back(), b));
    }
    for (const auto& p : path_)
        path_sizes_.push_back(cell_sizes(p));
    ref_vertex_of_color_.assign(n_, 0);
    for (Vertex u = 0; u < n_; ++u)
        ref_vertex_of_color_[path_.back().color[u]] = u;

    std::vector<Vertex> images;
    for (std::size_t depth = base.size(); depth-- > 0;) {
        Vertex b = base[depth];
        auto orbit = orbit_of(b, n_, result.generators);
        for (Vertex x : target_cell(path_[depth])) {
            if (x == b || std::find(orbit.begin(), orbit.end(), x) != orbit.end())
                continue;
            Coloring child = individualize(path_[depth], x);
            if (cell_sizes(child) != path_sizes_[depth + 1])
                continue;
            if (find_automorphism(child, depth + 1, images)) {
                result.generators.push_back(Permutation{images});
                if (stop_at_first)
                    return result;
                orbit = orbit_of(b, n_, result.generators);
            }
        }
        result.order *= orbit.size();
    }
    return result;
}

}  // namespace dindex::detail
