#include <dindex/constructive.hpp>

#include <algorithm>

namespace dindex {

std::string_view gadget_kind_name(GadgetKind k)
{
    switch (k) {
    case GadgetKind::none: return "none";
    case GadgetKind::single_triangle: return "single-triangle";
    case GadgetKind::friendship: return "friendship";
    }
    return "unknown";
}

std::vector<Vertex> PendantGadget::vertices() const
{
    std::vector<Vertex> out;
    for (auto [a, b] : triangles) {
        out.push_back(a);
        out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PendantGadget find_pendant_gadget(const Graph& g, Vertex hub)
{
    if (hub < 0 || hub >= g.order())
        throw Error("gadget hub out of range");
    PendantGadget out;
    out.hub = hub;
    for (Vertex a : g.neighbors(hub)) {
        if (g.degree(a) != 2)
            continue;
        for (Vertex b : g.neighbors(a))
            if (b > a && b != hub && g.degree(b) == 2 && g.adjacent(b, hub))
                out.triangles.emplace_back(a, b);
    }
    if (out.triangles.size() == 1)
        out.kind = GadgetKind::single_triangle;
    else if (out.triangles.size() > 1)
        out.kind = GadgetKind::friendship;
    return out;
}

GadgetLabeling label_friendship_gadget(const PendantGadget& gadget)
{
    if (gadget.kind == GadgetKind::none)
        throw Error("no pendant gadget to label");

    auto spoke = [&](Vertex x) { return Edge{std::min(gadget.hub, x), std::max(gadget.hub, x)}; };
    GadgetLabeling out;
    if (gadget.kind == GadgetKind::single_triangle) {
        auto [a, b] = gadget.triangles.front();
        out.assignments = {{spoke(a), 0}, {spoke(b), 1}, {Edge{a, b}, 2}};
        out.labels = 3;
        return out;
    }

    // Least r with C(r,2) * r >= triangles: one pattern per (spoke pair, outer).
    const int count = static_cast<int>(gadget.triangles.size());
    int r = 2;
    while (r * (r - 1) / 2 * r < count)
        ++r;
    out.labels = r;
    int k = 0;
    for (int s0 = 0; s0 < r && k < count; ++s0)
        for (int s1 = s0 + 1; s1 < r && k < count; ++s1)
            for (int outer = 0; outer < r && k < count; ++outer, ++k) {
                auto [a, b] = gadget.triangles[k];
                out.assignments.push_back({spoke(a), s0});
                out.assignments.push_back({spoke(b), s1});
                out.assignments.push_back({Edge{a, b}, outer});
            }
    return out;
}

}  // namespace dindex
