#include "padfit/enumerate.hpp"

#include <algorithm>
#include <cstdint>

#include "padfit/error.hpp"
#include "padfit/kernels.hpp"
#include "padfit/validity.hpp"

namespace padfit {

namespace {

void require_enough_inputs(const PredicateSet& controller, const PredicateSet& game) {
    if (game.universe()->size() > controller.universe()->size()) {
        throw Error(ErrorCode::ArityMismatch, std::to_string(game.universe()->size()) + " actions but only " +
                                                  std::to_string(controller.universe()->size()) + " inputs");
    }
}

void serial_walk(const PredicateSet& controller, const PredicateSet& game, std::size_t limit, Assignment& cur,
                 std::vector<bool>& used, EnumerationResult& out) {
    const std::size_t inputs = controller.universe()->size();
    if (cur.size() == game.universe()->size()) {
        const Mapping m = assignment_mapping(controller.universe(), game.universe(), cur);
        if (check_triplet(controller, game, m).valid) {
            ++out.valid_count;
            if (out.first.size() < limit) {
                out.first.push_back(cur);
            }
        }
        return;
    }
    for (std::size_t i = 0; i < inputs; ++i) {
        if (used[i]) {
            continue;
        }
        used[i] = true;
        cur.push_back(i);
        serial_walk(controller, game, limit, cur, used, out);
        cur.pop_back();
        used[i] = false;
    }
}

// Word-level search of one branch, reusing buffers across leaves.
class BranchSearch {
public:
    BranchSearch(std::span<const Word> controller, std::span<const Word> game, std::size_t inputs,
                 std::size_t actions, std::size_t limit)
        : controller_(controller), game_(game), inputs_(inputs), actions_(actions), limit_(limit),
          mapped_(controller.size()) {}

    EnumerationResult run(const Assignment& prefix) {
        EnumerationResult out;
        Assignment cur = prefix;
        Word used = 0;
        for (std::size_t i : cur) {
            used |= Word{1} << i;
        }
        walk(cur, used, out);
        return out;
    }

private:
    void walk(Assignment& cur, Word used, EnumerationResult& out) {
        if (cur.size() == actions_) {
            if (valid(cur)) {
                ++out.valid_count;
                if (out.first.size() < limit_) {
                    out.first.push_back(cur);
                }
            }
            return;
        }
        for (std::size_t i = 0; i < inputs_; ++i) {
            if ((used >> i) & 1u) {
                continue;
            }
            cur.push_back(i);
            walk(cur, used | (Word{1} << i), out);
            cur.pop_back();
        }
    }

    bool valid(const Assignment& a) {
        kernels::ImageTable image{};
        for (std::size_t action = 0; action < a.size(); ++action) {
            image[a[action]] = Word{1} << action;
        }
        for (std::size_t i = 0; i < controller_.size(); ++i) {
            mapped_[i] = kernels::apply_image(image, controller_[i]);
        }
        std::sort(mapped_.begin(), mapped_.end());
        return std::all_of(game_.begin(), game_.end(),
                           [&](Word g) { return std::binary_search(mapped_.begin(), mapped_.end(), g); });
    }

    std::span<const Word> controller_;
    std::span<const Word> game_;
    std::size_t inputs_;
    std::size_t actions_;
    std::size_t limit_;
    std::vector<Word> mapped_;
};

} // namespace

Mapping assignment_mapping(const UniverseRef& controller, const UniverseRef& game, const Assignment& a) {
    std::vector<Mapping::IndexPair> pairs;
    pairs.reserve(a.size());
    for (std::size_t action = 0; action < a.size(); ++action) {
        pairs.emplace_back(a[action], action);
    }
    return Mapping(controller, game, std::move(pairs));
}

namespace serial {

EnumerationResult enumerate_injective(const PredicateSet& controller, const PredicateSet& game,
                                      std::size_t limit) {
    require_enough_inputs(controller, game);
    EnumerationResult out;
    Assignment cur;
    std::vector<bool> used(controller.universe()->size(), false);
    serial_walk(controller, game, limit, cur, used, out);
    return out;
}

} // namespace serial

namespace parallel {

EnumerationResult enumerate_injective(const PredicateSet& controller, const PredicateSet& game,
                                      std::size_t limit) {
    require_enough_inputs(controller, game);
    const std::size_t inputs = controller.universe()->size();
    const std::size_t actions = game.universe()->size();

    std::vector<Assignment> prefixes;
    for (std::size_t i = 0; i < inputs; ++i) {
        if (actions == 1) {
            prefixes.push_back({i});
            continue;
        }
        for (std::size_t j = 0; j < inputs; ++j) {
            if (j != i) {
                prefixes.push_back({i, j});
            }
        }
    }

    std::vector<EnumerationResult> partial(prefixes.size());
    const auto n = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel
    {
        BranchSearch search(controller.members(), game.members(), inputs, actions, limit);
#pragma omp for schedule(dynamic)
        for (std::int64_t p = 0; p < n; ++p) {
            partial[static_cast<std::size_t>(p)] = search.run(prefixes[static_cast<std::size_t>(p)]);
        }
    }

    EnumerationResult out;
    for (auto& r : partial) {
        out.valid_count += r.valid_count;
        for (auto& a : r.first) {
            if (out.first.size() >= limit) {
                break;
            }
            out.first.push_back(std::move(a));
        }
    }
    return out;
}

} // namespace parallel

} // namespace padfit
