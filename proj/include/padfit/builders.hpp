#pragma once

// Ready-made controller building blocks and the pressable-pair graph.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "padfit/universe.hpp"

namespace padfit {

// Inputs of one finger group plus the pairs that can be held together.
class PressGraph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    // Edges are normalized to (low, high) and deduplicated. Throws
    // InvalidEdge for a self-loop or an endpoint outside `nodes`.
    PressGraph(UniverseRef universe, Word nodes, std::vector<Edge> edges);

    const UniverseRef& universe() const noexcept { return universe_; }
    Word nodes() const noexcept { return nodes_; }
    std::size_t node_count() const noexcept;
    std::span<const Edge> edges() const noexcept { return edges_; }

private:
    UniverseRef universe_;
    Word nodes_;
    std::vector<Edge> edges_;
};

using NameEdge = std::pair<std::string, std::string>;

PressGraph make_press_graph(const UniverseRef& u, std::span<const std::string> nodes,
                            std::span<const NameEdge> edges);

// Graph whose nodes are exactly the edge endpoints.
PressGraph press_graph_from_pairs(const UniverseRef& u, std::span<const NameEdge> edges);

// {} plus every node alone plus every edge.
PredicateSet from_press_graph(const PressGraph& g);

// Eight-way pad: at most one of left/right with at most one of up/down.
PredicateSet dpad8(const UniverseRef& u, const std::string& left, const std::string& right,
                   const std::string& up, const std::string& down);

// Four-way stick: at most one direction.
PredicateSet stick4(const UniverseRef& u, const std::string& left, const std::string& right,
                    const std::string& up, const std::string& down);

enum class FaceKind { Two = 2, Four = 4, Six = 6 };

// two:  one edge.
// four: diamond given as (top, right, bottom, left); neighbors on the ring
//       are pressable together, opposite buttons are not.
// six:  2x3 grid, top row first; horizontal and vertical neighbors.
PressGraph face_layout(const UniverseRef& u, FaceKind kind, std::span<const std::string> names);

// Shoulder buttons on opposite hands: any combination.
PredicateSet trigger_pair(const UniverseRef& u, const std::string& l, const std::string& r);

// Left fold of `simultaneously`. Parts must not share constants.
PredicateSet combine_components(const UniverseRef& u, std::span<const PredicateSet> parts);

} // namespace padfit
