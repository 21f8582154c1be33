#include "padfit/proplogic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "padfit/error.hpp"
#include "padfit/kernels.hpp"

namespace padfit {

namespace {

void canonicalize(std::vector<Cube>& cubes) {
    std::sort(cubes.begin(), cubes.end());
    cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());
}

// Cube `inner` denotes a subset of the assignments of `outer`.
bool contained_in(const Cube& inner, const Cube& outer) {
    return (outer.care & ~inner.care) == 0 && (inner.values & outer.care) == outer.values;
}

std::vector<std::vector<std::uint32_t>> coverage(std::span<const Cube> primes, std::span<const Word> on) {
    std::vector<std::vector<std::uint32_t>> covers(primes.size());
    for (std::size_t p = 0; p < primes.size(); ++p) {
        for (std::size_t m = 0; m < on.size(); ++m) {
            if (primes[p].covers(on[m])) {
                covers[p].push_back(static_cast<std::uint32_t>(m));
            }
        }
    }
    return covers;
}

// Drops chosen cubes whose minterms are all covered by the others, visiting
// in selection order.
std::vector<std::size_t> irredundant(std::vector<std::size_t> chosen,
                                     const std::vector<std::vector<std::uint32_t>>& covers,
                                     std::size_t minterm_count) {
    std::vector<std::uint32_t> hits(minterm_count, 0);
    for (std::size_t p : chosen) {
        for (auto m : covers[p]) {
            ++hits[m];
        }
    }
    std::vector<std::size_t> kept;
    for (std::size_t p : chosen) {
        bool redundant = std::all_of(covers[p].begin(), covers[p].end(), [&](auto m) { return hits[m] > 1; });
        if (redundant) {
            for (auto m : covers[p]) {
                --hits[m];
            }
        } else {
            kept.push_back(p);
        }
    }
    return kept;
}

std::vector<std::size_t> greedy_cover(const std::vector<std::vector<std::uint32_t>>& covers,
                                      std::size_t minterm_count) {
    std::vector<std::uint32_t> by_minterm_count(minterm_count, 0);
    std::vector<std::size_t> last_cover(minterm_count, 0);
    for (std::size_t p = 0; p < covers.size(); ++p) {
        for (auto m : covers[p]) {
            ++by_minterm_count[m];
            last_cover[m] = p;
        }
    }

    std::vector<std::uint8_t> taken(covers.size(), 0);
    std::vector<std::uint8_t> covered(minterm_count, 0);
    std::vector<std::size_t> chosen;
    auto take = [&](std::size_t p) {
        if (taken[p]) {
            return;
        }
        taken[p] = 1;
        chosen.push_back(p);
        for (auto m : covers[p]) {
            covered[m] = 1;
        }
    };

    // Essential primes, in canonical order.
    std::vector<std::size_t> essential;
    for (std::size_t m = 0; m < minterm_count; ++m) {
        if (by_minterm_count[m] == 1) {
            essential.push_back(last_cover[m]);
        }
    }
    std::sort(essential.begin(), essential.end());
    for (std::size_t p : essential) {
        take(p);
    }

    for (;;) {
        std::size_t best = covers.size();
        std::size_t best_gain = 0;
        for (std::size_t p = 0; p < covers.size(); ++p) {
            if (taken[p]) {
                continue;
            }
            std::size_t gain = 0;
            for (auto m : covers[p]) {
                gain += covered[m] ? 0 : 1;
            }
            if (gain > best_gain) {
                best = p;
                best_gain = gain;
            }
        }
        if (best == covers.size()) {
            break;
        }
        take(best);
    }
    return chosen;
}

} // namespace

Dnf::Dnf(UniverseRef universe, std::vector<Cube> cubes)
    : universe_(std::move(universe)), cubes_(std::move(cubes)) {
    const Word outside = ~universe_->mask();
    for (const Cube& c : cubes_) {
        if ((c.care & outside) != 0 || (c.values & ~c.care) != 0) {
            throw Error(ErrorCode::UnknownConstant, "malformed cube over '" + universe_->name() + "'");
        }
    }
    canonicalize(cubes_);
}

bool Dnf::evaluate(Word assignment) const {
    return std::any_of(cubes_.begin(), cubes_.end(), [&](const Cube& c) { return c.covers(assignment); });
}

Dnf predicate_to_dnf(const PredicateSet& p) {
    const Word all = p.universe()->mask();
    std::vector<Cube> cubes;
    cubes.reserve(p.size());
    for (Word w : p.members()) {
        cubes.push_back(Cube{all, w});
    }
    return Dnf(p.universe(), std::move(cubes));
}

PredicateSet dnf_to_predicate(const Dnf& d) {
    const Word all = d.universe()->mask();
    std::vector<Word> words;
    for (const Cube& c : d.cubes()) {
        const Word free = all & ~c.care;
        // Walks every submask of `free`, ending after the empty one.
        Word s = free;
        for (;;) {
            words.push_back(c.values | s);
            if (s == 0) {
                break;
            }
            s = (s - 1) & free;
        }
    }
    return PredicateSet(d.universe(), std::move(words));
}

bool cube_covers(const Cube& c, const InputSet& x) {
    return c.covers(x.bits());
}

std::vector<Cube> prime_implicants(std::span<const Word> minterms, std::size_t width) {
    const Word all = width >= 64 ? ~Word{0} : (Word{1} << width) - 1;
    std::vector<Cube> level;
    level.reserve(minterms.size());
    for (Word m : minterms) {
        level.push_back(Cube{all, m & all});
    }
    canonicalize(level);

    std::vector<Cube> primes;
    while (!level.empty()) {
        std::vector<std::uint8_t> merged(level.size(), 0);
        std::vector<Cube> next;
        for (std::size_t i = 0; i < level.size(); ++i) {
            const Cube c = level[i];
            for (Word zeros = c.care & ~c.values; zeros != 0; zeros &= zeros - 1) {
                const Word bit = zeros & (~zeros + 1);
                const Cube partner{c.care, c.values | bit};
                auto it = std::lower_bound(level.begin(), level.end(), partner);
                if (it != level.end() && *it == partner) {
                    merged[i] = 1;
                    merged[static_cast<std::size_t>(it - level.begin())] = 1;
                    next.push_back(Cube{c.care & ~bit, c.values});
                }
            }
        }
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (!merged[i]) {
                primes.push_back(level[i]);
            }
        }
        canonicalize(next);
        level = std::move(next);
    }
    canonicalize(primes);
    return primes;
}

std::vector<Cube> qm_prime_implicants(const PredicateSet& on_set) {
    return prime_implicants(on_set.members(), on_set.universe()->size());
}

Dnf qm_minimize(const Dnf& d) {
    const PredicateSet on = dnf_to_predicate(d);
    if (on.empty()) {
        return Dnf(d.universe());
    }
    const std::vector<Cube> primes = qm_prime_implicants(on);
    const auto covers = coverage(primes, on.members());

    std::vector<std::size_t> chosen = irredundant(greedy_cover(covers, on.size()), covers, on.size());

    if (chosen.size() > d.size()) {
        // Greedy overshot. Grow each input cube into the first prime that
        // contains it; that cover is no larger than the input.
        std::vector<std::size_t> grown;
        for (const Cube& c : d.cubes()) {
            for (std::size_t p = 0; p < primes.size(); ++p) {
                if (contained_in(c, primes[p])) {
                    grown.push_back(p);
                    break;
                }
            }
        }
        std::sort(grown.begin(), grown.end());
        grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
        chosen = irredundant(std::move(grown), covers, on.size());
    }

    std::vector<Cube> cubes;
    cubes.reserve(chosen.size());
    for (std::size_t p : chosen) {
        cubes.push_back(primes[p]);
    }
    return Dnf(d.universe(), std::move(cubes));
}

std::vector<Word> uncovered_by_dnf(const PredicateSet& game, const Dnf& mapped_controller) {
    require_same_universe(game.universe(), mapped_controller.universe());
    return kernels::parallel::uncovered(game.members(), mapped_controller.cubes());
}

bool check_via_dnf(const PredicateSet& game, const Dnf& mapped_controller) {
    return uncovered_by_dnf(game, mapped_controller).empty();
}

std::string format_dnf(const Dnf& d) {
    if (d.cubes().empty()) {
        return "false";
    }
    const Universe& u = *d.universe();
    std::string out;
    bool first_cube = true;
    for (const Cube& c : d.cubes()) {
        if (!first_cube) {
            out += " | ";
        }
        first_cube = false;
        if (c.care == 0) {
            out += "true";
            continue;
        }
        bool first_lit = true;
        for (Word rest = c.care; rest != 0; rest &= rest - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(rest));
            if (!first_lit) {
                out += " & ";
            }
            first_lit = false;
            if (((c.values >> i) & 1u) == 0) {
                out += '!';
            }
            out += u.constant(i);
        }
    }
    return out;
}

} // namespace padfit
