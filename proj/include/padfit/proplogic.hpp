#pragma once

#include <span>
#include <string>
#include <vector>

#include "padfit/cube.hpp"
#include "padfit/universe.hpp"

namespace padfit {

// A disjunction of cubes over one universe, kept sorted by (care, values) and
// deduplicated. No cubes means constant false.
class Dnf {
public:
    explicit Dnf(UniverseRef universe) : universe_(std::move(universe)) {}
    // Canonicalizes; throws if a cube mentions a variable outside the
    // universe or sets a value bit outside its care mask.
    Dnf(UniverseRef universe, std::vector<Cube> cubes);

    const UniverseRef& universe() const noexcept { return universe_; }
    std::span<const Cube> cubes() const noexcept { return cubes_; }
    std::size_t size() const noexcept { return cubes_.size(); }

    bool evaluate(Word assignment) const;

    friend bool operator==(const Dnf& a, const Dnf& b) {
        return a.cubes_ == b.cubes_ && same_universe(a.universe_, b.universe_);
    }

private:
    UniverseRef universe_;
    std::vector<Cube> cubes_;
};

// One full minterm per member.
Dnf predicate_to_dnf(const PredicateSet& p);

// Every assignment satisfying some cube, don't-cares expanded.
PredicateSet dnf_to_predicate(const Dnf& d);

bool cube_covers(const Cube& c, const InputSet& x);

// All prime implicants of the function whose on-set is exactly `on_set`,
// in canonical cube order.
std::vector<Cube> qm_prime_implicants(const PredicateSet& on_set);
// Word-level form: `minterms` over `width` variables, need not be sorted.
std::vector<Cube> prime_implicants(std::span<const Word> minterms, std::size_t width);

// An equivalent formula built from prime implicants: essentials first, then
// a greedy cover (most newly covered minterms, ties to the lowest cube).
// Never returns more cubes than `d` has.
Dnf qm_minimize(const Dnf& d);

// True iff every game requirement, read as a full assignment, satisfies the
// controller formula.
bool check_via_dnf(const PredicateSet& game, const Dnf& mapped_controller);

// Requirements whose assignment satisfies no cube, ascending.
std::vector<Word> uncovered_by_dnf(const PredicateSet& game, const Dnf& mapped_controller);

// "!a & c | b"; "true" for the empty-care cube, "false" for no cubes.
std::string format_dnf(const Dnf& d);

} // namespace padfit
