#pragma once

#include <span>
#include <string>
#include <vector>

#include "padfit/universe.hpp"

namespace padfit {

// Every union of one member of `p` with one member of `q`. `no_input` is the
// identity and the empty family absorbs.
PredicateSet simultaneously(const PredicateSet& p, const PredicateSet& q);

PredicateSet union_or(const PredicateSet& p, const PredicateSet& q);

// {{}}: nothing pressed.
PredicateSet no_input(const UniverseRef& u);

// One of `names`, alone. Throws EmptyChoice for an empty list.
PredicateSet choose1(const UniverseRef& u, std::span<const std::string> names);

// choose1 plus the empty set.
PredicateSet at_most_1(const UniverseRef& u, std::span<const std::string> names);

PredicateSet maybe(const UniverseRef& u, const std::string& name);

// The single-member family {names}.
PredicateSet combo(const UniverseRef& u, std::span<const std::string> names);

} // namespace padfit
