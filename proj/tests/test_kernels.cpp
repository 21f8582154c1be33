#include <gtest/gtest.h>

#include <algorithm>

#include "padfit/kernels.hpp"
#include "test_support.hpp"

using namespace padfit;
using namespace padfit::kernels;
using padfit::oracle::Random;

namespace {

std::vector<Word> random_words(Random& rng, std::size_t count, std::size_t width) {
    const Word mask = width == 64 ? ~Word{0} : (Word{1} << width) - 1;
    std::vector<Word> out(count);
    for (auto& w : out) {
        w = (static_cast<Word>(rng.engine()()) << 32 ^ rng.engine()()) & mask;
    }
    return out;
}

std::vector<WordPair> random_pairs(Random& rng, std::size_t src_width, std::size_t dst_width) {
    std::vector<WordPair> pairs;
    for (std::size_t s = 0; s < src_width; ++s) {
        for (std::size_t t = 0; t < dst_width; ++t) {
            if (rng.coin(0.15)) {
                pairs.emplace_back(Word{1} << s, Word{1} << t);
            }
        }
    }
    return pairs;
}

std::vector<Cube> random_cubes(Random& rng, std::size_t count, std::size_t width) {
    std::vector<Cube> cubes;
    auto cares = random_words(rng, count, width);
    auto values = random_words(rng, count, width);
    for (std::size_t i = 0; i < count; ++i) {
        cubes.push_back(Cube{cares[i], values[i] & cares[i]});
    }
    return cubes;
}

} // namespace

TEST(Kernels, UnionProductMatchesSerial) {
    Random rng(101);
    for (std::size_t n : std::initializer_list<std::size_t>{0, 1u, 7u, 50u, 100u}) {
        auto a = random_words(rng, n, 20);
        auto b = random_words(rng, n / 2 + 1, 20);
        EXPECT_EQ(parallel::union_product(a, b), serial::union_product(a, b));
    }
    auto big_a = random_words(rng, kParallelMin + 37, 30);
    auto big_b = random_words(rng, 5, 30);
    EXPECT_EQ(parallel::union_product(big_a, big_b), serial::union_product(big_a, big_b));
}

TEST(Kernels, MapWordsMatchesSerial) {
    Random rng(102);
    for (std::size_t width : {1, 6, 20, 64}) {
        auto pairs = random_pairs(rng, width, 12);
        auto image = make_image_table(pairs);
        for (std::size_t n : std::initializer_list<std::size_t>{0, 3u, 300u, kParallelMin * 3 + 1}) {
            auto src = random_words(rng, n, width);
            EXPECT_EQ(parallel::map_words(src, image), serial::map_words(src, width, pairs));
        }
    }
}

TEST(Kernels, MissingMatchesSerial) {
    Random rng(103);
    for (std::size_t n : std::initializer_list<std::size_t>{0, 10u, 500u, kParallelMin * 2 + 5}) {
        auto super = random_words(rng, n, 14);
        std::sort(super.begin(), super.end());
        super.erase(std::unique(super.begin(), super.end()), super.end());
        auto sub = random_words(rng, n + 3, 14);
        EXPECT_EQ(parallel::missing(sub, super), serial::missing(sub, super));
    }
}

TEST(Kernels, UncoveredMatchesSerial) {
    Random rng(104);
    for (std::size_t n : std::initializer_list<std::size_t>{0, 20u, kParallelMin + 11}) {
        auto minterms = random_words(rng, n, 16);
        auto cubes = random_cubes(rng, 9, 16);
        EXPECT_EQ(parallel::uncovered(minterms, cubes), serial::uncovered(minterms, cubes));
        EXPECT_EQ(parallel::uncovered(minterms, {}), minterms);
    }
}

TEST(Kernels, ApplyImage) {
    std::vector<WordPair> pairs{{1, 4}, {1, 1}, {2, 1}};
    auto image = make_image_table(pairs);
    EXPECT_EQ(apply_image(image, 0), 0u);
    EXPECT_EQ(apply_image(image, 1), 5u);
    EXPECT_EQ(apply_image(image, 3), 5u);
    EXPECT_EQ(apply_image(image, 4), 0u);
    EXPECT_GE(max_threads(), 1);
}
