#include "padfit/validity.hpp"

#include "padfit/kernels.hpp"
#include "padfit/proplogic.hpp"

namespace padfit {

namespace {

std::vector<std::string> names_outside(const Universe& u, Word used) {
    return u.names_of(u.mask() & ~used);
}

} // namespace

bool is_sub_predicate(const PredicateSet& p, const PredicateSet& q) {
    require_same_universe(p.universe(), q.universe());
    if (p.size() > q.size()) {
        return false;
    }
    return kernels::parallel::missing(p.members(), q.members()).empty();
}

std::vector<Word> uncovered_requirements(const PredicateSet& controller, const PredicateSet& game,
                                         const Mapping& m) {
    require_same_universe(game.universe(), m.target());
    const PredicateSet mapped = map_predicate(controller, m);
    return kernels::parallel::missing(game.members(), mapped.members());
}

ValidityReport check_triplet(const PredicateSet& controller, const PredicateSet& game, const Mapping& m,
                             Engine engine) {
    require_same_universe(game.universe(), m.target());
    const PredicateSet mapped = map_predicate(controller, m);

    ValidityReport r;
    if (engine == Engine::Dnf) {
        r.missing = uncovered_by_dnf(game, qm_minimize(predicate_to_dnf(mapped)));
    } else {
        r.missing = kernels::parallel::missing(game.members(), mapped.members());
    }
    r.valid = r.missing.empty();
    r.unmapped_sources = names_outside(*m.source(), m.mapped_sources());
    r.unmapped_targets = names_outside(*m.target(), m.reached_targets());
    r.controller_size = controller.size();
    r.mapped_size = mapped.size();
    r.required_size = game.size();
    return r;
}

} // namespace padfit
