#include "padfit/combinators.hpp"

#include <algorithm>
#include <iterator>

#include "padfit/error.hpp"
#include "padfit/kernels.hpp"

namespace padfit {

PredicateSet simultaneously(const PredicateSet& p, const PredicateSet& q) {
    require_same_universe(p.universe(), q.universe());
    return PredicateSet(p.universe(), kernels::parallel::union_product(p.members(), q.members()));
}

PredicateSet union_or(const PredicateSet& p, const PredicateSet& q) {
    require_same_universe(p.universe(), q.universe());
    std::vector<Word> out;
    out.reserve(p.size() + q.size());
    std::set_union(p.members().begin(), p.members().end(), q.members().begin(), q.members().end(),
                   std::back_inserter(out));
    return PredicateSet(p.universe(), std::move(out));
}

PredicateSet no_input(const UniverseRef& u) {
    return PredicateSet(u, {Word{0}});
}

PredicateSet choose1(const UniverseRef& u, std::span<const std::string> names) {
    if (names.empty()) {
        throw Error(ErrorCode::EmptyChoice, "choose1 over no constants");
    }
    std::vector<Word> out;
    out.reserve(names.size());
    for (const auto& n : names) {
        out.push_back(Word{1} << u->require_index(n));
    }
    return PredicateSet(u, std::move(out));
}

PredicateSet at_most_1(const UniverseRef& u, std::span<const std::string> names) {
    return union_or(no_input(u), choose1(u, names));
}

PredicateSet maybe(const UniverseRef& u, const std::string& name) {
    return PredicateSet(u, {Word{0}, Word{1} << u->require_index(name)});
}

PredicateSet combo(const UniverseRef& u, std::span<const std::string> names) {
    return PredicateSet(u, {input_set(u, names).bits()});
}

} // namespace padfit
