#pragma once

// Search over one-button-per-action mappings.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "padfit/mapping.hpp"
#include "padfit/universe.hpp"

namespace padfit {

// assignment[a] is the controller input driving game action a; all distinct.
using Assignment = std::vector<std::size_t>;

struct EnumerationResult {
    std::uint64_t valid_count = 0;
    // The first `limit` valid assignments in lexicographic order.
    std::vector<Assignment> first;
};

Mapping assignment_mapping(const UniverseRef& controller, const UniverseRef& game, const Assignment& a);

namespace serial {

// Walks every injective assignment in lexicographic order and validates each
// through check_triplet.
EnumerationResult enumerate_injective(const PredicateSet& controller, const PredicateSet& game,
                                      std::size_t limit);

} // namespace serial

namespace parallel {

// Same result as serial::enumerate_injective. Work is split by the inputs
// chosen for the first two actions; each branch is searched on one thread and
// the branches are merged in lexicographic order.
EnumerationResult enumerate_injective(const PredicateSet& controller, const PredicateSet& game,
                                      std::size_t limit);

} // namespace parallel

} // namespace padfit
