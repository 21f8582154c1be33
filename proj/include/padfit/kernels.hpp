#pragma once

// Word-level inner loops behind the set operations. Each kernel exists twice:
// `serial` is the straightforward reference kept for testing and benchmarks,
// `parallel` is the OpenMP version the library calls. Both return identical
// results in identical order for identical input.

#include <array>
#include <bit>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "padfit/cube.hpp"
#include "padfit/universe.hpp"

namespace padfit::kernels {

// Below this many outer iterations the parallel kernels stay on one thread.
inline constexpr std::size_t kParallelMin = 2048;

// image[b] = OR of every target bit paired with source bit b.
using ImageTable = std::array<Word, kMaxConstants>;

// A single source bit paired with a single target bit, both as one-hot words.
using WordPair = std::pair<Word, Word>;

ImageTable make_image_table(std::span<const WordPair> pairs);

inline Word apply_image(const ImageTable& image, Word src) noexcept {
    Word out = 0;
    for (; src != 0; src &= src - 1) {
        out |= image[static_cast<std::size_t>(std::countr_zero(src))];
    }
    return out;
}

namespace serial {

// All pairwise unions a[i] | b[j], row-major, not canonicalized.
std::vector<Word> union_product(std::span<const Word> a, std::span<const Word> b);

// Bit-by-bit scan of the pair list for every source word.
std::vector<Word> map_words(std::span<const Word> src, std::size_t src_width,
                            std::span<const WordPair> pairs);

// Members of `sub` not found in `super`, by linear search; keeps `sub` order.
std::vector<Word> missing(std::span<const Word> sub, std::span<const Word> super);

// Minterms satisfying none of the cubes; keeps input order.
std::vector<Word> uncovered(std::span<const Word> minterms, std::span<const Cube> cubes);

} // namespace serial

namespace parallel {

std::vector<Word> union_product(std::span<const Word> a, std::span<const Word> b);

std::vector<Word> map_words(std::span<const Word> src, const ImageTable& image);

// `super` must be sorted ascending.
std::vector<Word> missing(std::span<const Word> sub, std::span<const Word> super);

std::vector<Word> uncovered(std::span<const Word> minterms, std::span<const Cube> cubes);

} // namespace parallel

int max_threads();

} // namespace padfit::kernels
