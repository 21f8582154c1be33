#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "padfit/kernels.hpp"
#include "padfit/universe.hpp"

namespace padfit {

// A many-to-many relation from source constants (buttons) to target
// constants (actions). One button may drive several actions, several buttons
// may drive one action, and a button may drive nothing.
class Mapping {
public:
    using IndexPair = std::pair<std::size_t, std::size_t>;

    // Throws SameUniverse when both handles are the same universe.
    Mapping(UniverseRef source, UniverseRef target, std::vector<IndexPair> pairs);

    const UniverseRef& source() const noexcept { return source_; }
    const UniverseRef& target() const noexcept { return target_; }
    // Sorted by (source index, target index), no duplicates.
    std::span<const IndexPair> pairs() const noexcept { return pairs_; }

    // Targets reached from each source bit.
    const kernels::ImageTable& image() const noexcept { return image_; }
    // Pairs as one-hot (source word, target word).
    std::vector<kernels::WordPair> word_pairs() const;

    Word mapped_sources() const noexcept;
    Word reached_targets() const noexcept;

    friend bool operator==(const Mapping& a, const Mapping& b) {
        return a.pairs_ == b.pairs_ && same_universe(a.source_, b.source_) &&
               same_universe(a.target_, b.target_);
    }

private:
    UniverseRef source_;
    UniverseRef target_;
    std::vector<IndexPair> pairs_;
    kernels::ImageTable image_{};
};

using NamePair = std::pair<std::string, std::string>;

Mapping new_mapping(const UniverseRef& source, const UniverseRef& target,
                    std::span<const NamePair> pairs);

InputSet map_input_set(const InputSet& x, const Mapping& m);

PredicateSet map_predicate(const PredicateSet& p, const Mapping& m);

} // namespace padfit
