#include "padfit/mapping.hpp"

#include <algorithm>

#include "padfit/error.hpp"

namespace padfit {

Mapping::Mapping(UniverseRef source, UniverseRef target, std::vector<IndexPair> pairs)
    : source_(std::move(source)), target_(std::move(target)), pairs_(std::move(pairs)) {
    if (source_ == target_) {
        throw Error(ErrorCode::SameUniverse, "mapping from '" + source_->name() + "' onto itself");
    }
    for (const auto& [s, t] : pairs_) {
        if (s >= source_->size()) {
            throw Error(ErrorCode::UnknownConstant, "source index " + std::to_string(s));
        }
        if (t >= target_->size()) {
            throw Error(ErrorCode::UnknownConstant, "target index " + std::to_string(t));
        }
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    for (const auto& [s, t] : pairs_) {
        image_[s] |= Word{1} << t;
    }
}

std::vector<kernels::WordPair> Mapping::word_pairs() const {
    std::vector<kernels::WordPair> out;
    out.reserve(pairs_.size());
    for (const auto& [s, t] : pairs_) {
        out.emplace_back(Word{1} << s, Word{1} << t);
    }
    return out;
}

Word Mapping::mapped_sources() const noexcept {
    Word w = 0;
    for (const auto& [s, t] : pairs_) {
        w |= Word{1} << s;
    }
    return w;
}

Word Mapping::reached_targets() const noexcept {
    Word w = 0;
    for (const auto& [s, t] : pairs_) {
        w |= Word{1} << t;
    }
    return w;
}

Mapping new_mapping(const UniverseRef& source, const UniverseRef& target,
                    std::span<const NamePair> pairs) {
    std::vector<Mapping::IndexPair> indices;
    indices.reserve(pairs.size());
    for (const auto& [from, to] : pairs) {
        auto s = source->index_of(from);
        if (!s) {
            throw Error(ErrorCode::UnknownConstant, "source " + from);
        }
        auto t = target->index_of(to);
        if (!t) {
            throw Error(ErrorCode::UnknownConstant, "target " + to);
        }
        indices.emplace_back(*s, *t);
    }
    return Mapping(source, target, std::move(indices));
}

InputSet map_input_set(const InputSet& x, const Mapping& m) {
    require_same_universe(x.universe(), m.source());
    return InputSet(m.target(), kernels::apply_image(m.image(), x.bits()));
}

PredicateSet map_predicate(const PredicateSet& p, const Mapping& m) {
    require_same_universe(p.universe(), m.source());
    return PredicateSet(m.target(), kernels::parallel::map_words(p.members(), m.image()));
}

} // namespace padfit
