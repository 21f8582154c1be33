#pragma once

#include <string>
#include <vector>

#include "padfit/mapping.hpp"
#include "padfit/universe.hpp"

namespace padfit {

enum class Engine { Set, Dnf };

struct ValidityReport {
    bool valid = false;
    // Game requirements the mapped controller cannot produce, ascending.
    std::vector<Word> missing;
    // Controller inputs that appear in no pair, universe order.
    std::vector<std::string> unmapped_sources;
    // Game actions no pair reaches, universe order.
    std::vector<std::string> unmapped_targets;
    std::size_t controller_size = 0;
    std::size_t mapped_size = 0;
    std::size_t required_size = 0;
};

// Non-strict inclusion: every member of `p` is a member of `q`.
bool is_sub_predicate(const PredicateSet& p, const PredicateSet& q);

// Valid iff the game family is a sub-predicate of the controller family
// after mapping the controller through `m`. With Engine::Dnf the coverage
// test runs against the minimized formula of the mapped controller instead
// of the set; both engines give the same report.
ValidityReport check_triplet(const PredicateSet& controller, const PredicateSet& game, const Mapping& m,
                             Engine engine = Engine::Set);

std::vector<Word> uncovered_requirements(const PredicateSet& controller, const PredicateSet& game,
                                         const Mapping& m);

} // namespace padfit
