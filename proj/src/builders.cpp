#include "padfit/builders.hpp"

#include <algorithm>
#include <bit>

#include "padfit/combinators.hpp"
#include "padfit/error.hpp"

namespace padfit {

namespace {

void require_distinct(std::span<const std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            if (names[i] == names[j]) {
                throw Error(ErrorCode::DuplicateConstant, names[i]);
            }
        }
    }
}

} // namespace

PressGraph::PressGraph(UniverseRef universe, Word nodes, std::vector<Edge> edges)
    : universe_(std::move(universe)), nodes_(nodes), edges_(std::move(edges)) {
    if ((nodes_ & ~universe_->mask()) != 0) {
        throw Error(ErrorCode::UnknownConstant, "node outside universe '" + universe_->name() + "'");
    }
    for (auto& [a, b] : edges_) {
        if (a >= universe_->size() || b >= universe_->size()) {
            throw Error(ErrorCode::InvalidEdge, "endpoint outside universe '" + universe_->name() + "'");
        }
        if (a == b) {
            throw Error(ErrorCode::InvalidEdge, "self-loop on " + universe_->constant(a));
        }
        if (a > b) {
            std::swap(a, b);
        }
        if (!((nodes_ >> a) & 1u) || !((nodes_ >> b) & 1u)) {
            throw Error(ErrorCode::InvalidEdge, "endpoint is not a node");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::size_t PressGraph::node_count() const noexcept {
    return static_cast<std::size_t>(std::popcount(nodes_));
}

PressGraph make_press_graph(const UniverseRef& u, std::span<const std::string> nodes,
                            std::span<const NameEdge> edges) {
    Word node_bits = 0;
    for (const auto& n : nodes) {
        node_bits |= Word{1} << u->require_index(n);
    }
    std::vector<PressGraph::Edge> idx;
    idx.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        idx.emplace_back(u->require_index(a), u->require_index(b));
    }
    return PressGraph(u, node_bits, std::move(idx));
}

PressGraph press_graph_from_pairs(const UniverseRef& u, std::span<const NameEdge> edges) {
    std::vector<std::string> nodes;
    for (const auto& [a, b] : edges) {
        nodes.push_back(a);
        nodes.push_back(b);
    }
    return make_press_graph(u, nodes, edges);
}

PredicateSet from_press_graph(const PressGraph& g) {
    std::vector<Word> words{0};
    for (Word rest = g.nodes(); rest != 0; rest &= rest - 1) {
        words.push_back(rest & (~rest + 1));
    }
    for (const auto& [a, b] : g.edges()) {
        words.push_back((Word{1} << a) | (Word{1} << b));
    }
    return PredicateSet(g.universe(), std::move(words));
}

PredicateSet dpad8(const UniverseRef& u, const std::string& left, const std::string& right,
                   const std::string& up, const std::string& down) {
    const std::vector<std::string> all{left, right, up, down};
    require_distinct(all);
    const std::vector<std::string> horizontal{left, right};
    const std::vector<std::string> vertical{up, down};
    return simultaneously(at_most_1(u, horizontal), at_most_1(u, vertical));
}

PredicateSet stick4(const UniverseRef& u, const std::string& left, const std::string& right,
                    const std::string& up, const std::string& down) {
    const std::vector<std::string> all{left, right, up, down};
    require_distinct(all);
    return at_most_1(u, all);
}

PressGraph face_layout(const UniverseRef& u, FaceKind kind, std::span<const std::string> names) {
    const auto want = static_cast<std::size_t>(kind);
    if (names.size() != want) {
        throw Error(ErrorCode::ArityMismatch,
                    "face" + std::to_string(want) + " takes " + std::to_string(want) + " buttons, got " +
                        std::to_string(names.size()));
    }
    require_distinct(names);

    std::vector<std::pair<std::size_t, std::size_t>> pos;
    switch (kind) {
    case FaceKind::Two:
        pos = {{0, 1}};
        break;
    case FaceKind::Four:
        pos = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
        break;
    case FaceKind::Six:
        pos = {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
        break;
    }
    std::vector<NameEdge> edges;
    edges.reserve(pos.size());
    for (const auto& [a, b] : pos) {
        edges.emplace_back(names[a], names[b]);
    }
    return make_press_graph(u, names, edges);
}

PredicateSet trigger_pair(const UniverseRef& u, const std::string& l, const std::string& r) {
    if (l == r) {
        throw Error(ErrorCode::DuplicateConstant, l);
    }
    return simultaneously(maybe(u, l), maybe(u, r));
}

PredicateSet combine_components(const UniverseRef& u, std::span<const PredicateSet> parts) {
    PredicateSet acc = no_input(u);
    Word seen = 0;
    for (const auto& part : parts) {
        require_same_universe(u, part.universe());
        const Word support = part.support();
        if ((support & seen) != 0) {
            throw Error(ErrorCode::OverlappingParts, format_set(*u, support & seen));
        }
        seen |= support;
        acc = simultaneously(acc, part);
    }
    return acc;
}

} // namespace padfit
