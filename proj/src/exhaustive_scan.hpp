#pragma once

#include <dindex/graph.hpp>

#include <functional>
#include <span>

namespace dindex::detail {

/// Backtracking scan over all vertex permutations, assigning images to
/// 0,1,2,... in turn and rejecting a prefix as soon as an adjacency between
/// assigned vertices is not mirrored. Calls visit(images) for every
/// automorphism, identity included; stops early if visit returns false.
void scan_automorphisms(const Graph& g, const std::function<bool(std::span<const Vertex>)>& visit);

}  // namespace dindex::detail
