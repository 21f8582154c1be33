#include <gtest/gtest.h>

#include <numeric>

#include "padfit/combinators.hpp"
#include "padfit/error.hpp"
#include "padfit/mapping.hpp"
#include "test_support.hpp"

using namespace padfit;
using padfit::oracle::Random;

namespace {

struct Silvergun {
    UniverseRef pad = new_universe("saturn", {"A", "B", "C", "X", "Y", "Z", "R"});
    UniverseRef game = new_universe("silvergun", {"a", "b", "c"});
    std::vector<NamePair> pairs{{"A", "a"}, {"B", "b"}, {"C", "c"}, {"X", "b"}, {"X", "c"}, {"Y", "a"},
                                {"Y", "c"}, {"Z", "a"}, {"Z", "b"}, {"R", "a"}, {"R", "b"}, {"R", "c"}};
    Mapping m = new_mapping(pad, game, pairs);
};

} // namespace

TEST(Mapping, PlatformerPairs) {
    auto c = new_universe("pad", {"dpad_left", "dpad_right", "dpad_up", "dpad_down", "button_a", "button_b"});
    auto g = new_universe("game", {"left", "right", "up", "down", "jump"});
    std::vector<NamePair> pairs{{"dpad_left", "left"}, {"dpad_right", "right"}, {"dpad_up", "up"},
                                {"dpad_down", "down"}, {"button_a", "jump"}};
    auto m = new_mapping(c, g, pairs);
    EXPECT_EQ(m.pairs().size(), 5u);
    EXPECT_EQ(m.mapped_sources() & (Word{1} << 5), 0u);
}

TEST(Mapping, SilvergunHasTwelvePairs) {
    Silvergun s;
    EXPECT_EQ(s.m.pairs().size(), 12u);
    // Duplicates collapse.
    auto doubled = s.pairs;
    doubled.insert(doubled.end(), s.pairs.begin(), s.pairs.end());
    EXPECT_EQ(new_mapping(s.pad, s.game, doubled), s.m);
}

TEST(Mapping, EmptyIsLegal) {
    Silvergun s;
    auto m = new_mapping(s.pad, s.game, {});
    EXPECT_TRUE(m.pairs().empty());
    EXPECT_EQ(map_input_set(input_set(s.pad, {"A", "R"}), m).bits(), 0u);
}

TEST(Mapping, Errors) {
    Silvergun s;
    std::vector<NamePair> bad_src{{"Q", "a"}};
    std::vector<NamePair> bad_dst{{"A", "q"}};
    try {
        new_mapping(s.pad, s.game, bad_src);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownConstant);
    }
    EXPECT_THROW(new_mapping(s.pad, s.game, bad_dst), Error);
    try {
        new_mapping(s.pad, s.pad, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SameUniverse);
    }
}

TEST(MapInputSet, SilvergunFullSets) {
    Silvergun s;
    const Word abc = 0b111;
    EXPECT_EQ(map_input_set(input_set(s.pad, {"R"}), s.m).bits(), abc);
    EXPECT_EQ(map_input_set(input_set(s.pad, {"A", "X"}), s.m).bits(), abc);
    EXPECT_EQ(map_input_set(input_set(s.pad, {"B", "Y"}), s.m).bits(), abc);
    EXPECT_EQ(map_input_set(input_set(s.pad, {"C", "Z"}), s.m).bits(), abc);
    EXPECT_EQ(map_input_set(input_set(s.pad, {"Y"}), s.m), input_set(s.game, {"a", "c"}));
}

TEST(MapInputSet, UnmappedMemberDropsOut) {
    auto c = new_universe("C", {"CLeft", "CRight", "CUp", "CDown", "CA", "CB"});
    auto g = new_universe("G", {"GLeft", "GRight", "GUp", "GDown", "GJump"});
    std::vector<NamePair> fig2{{"CLeft", "GLeft"}, {"CRight", "GRight"}, {"CUp", "GUp"}, {"CDown", "GDown"},
                               {"CB", "GJump"}};
    auto m = new_mapping(c, g, fig2);
    EXPECT_EQ(map_input_set(input_set(c, {"CLeft", "CUp", "CA"}), m), input_set(g, {"GLeft", "GUp"}));
    EXPECT_THROW(map_input_set(input_set(g, {"GUp"}), m), Error);
}

TEST(MapPredicate, CollapsesAndPreservesEmpty) {
    auto c = new_universe("C", {"CA", "CB"});
    auto g = new_universe("G", {"jump"});
    std::vector<NamePair> only_b{{"CB", "jump"}};
    auto m = new_mapping(c, g, only_b);
    EXPECT_EQ(map_predicate(predicate_from_sets(c, {{"CA"}, {"CB"}}), m), predicate_from_sets(g, {{}, {"jump"}}));
    EXPECT_EQ(map_predicate(no_input(c), m), no_input(g));
}

TEST(MapPredicate, AgreesWithNameOracle) {
    Random rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto src = oracle::letters(rng.between(1, 6), "src", 'a');
        auto dst = oracle::letters(rng.between(1, 6), "dst", 'p');
        auto m = rng.mapping(src, dst);
        std::vector<std::pair<std::string, std::string>> named;
        for (const auto& [s, t] : m.pairs()) {
            named.emplace_back(src->constant(s), dst->constant(t));
        }
        const Word x = rng.word(*src);
        const auto names = src->names_of(x);
        const auto want = oracle::map_names({names.begin(), names.end()}, named);
        const auto got = map_input_set(InputSet(src, x), m).names();
        EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), want);
    }
}

TEST(MapPredicate, Properties) {
    Random rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        auto src = oracle::letters(rng.between(1, 6), "src");
        auto dst = oracle::letters(rng.between(1, 6), "dst");
        auto m = rng.mapping(src, dst);
        auto p = rng.family(src, 10);
        auto q = rng.family(src, 10);

        const Word r = rng.word(*src), s = rng.word(*src);
        EXPECT_EQ(map_input_set(InputSet(src, r | s), m).bits(),
                  map_input_set(InputSet(src, r), m).bits() | map_input_set(InputSet(src, s), m).bits());
        EXPECT_EQ(map_predicate(simultaneously(p, q), m), simultaneously(map_predicate(p, m), map_predicate(q, m)));
        EXPECT_EQ(map_predicate(union_or(p, q), m), union_or(map_predicate(p, m), map_predicate(q, m)));
        EXPECT_LE(map_predicate(p, m).size(), p.size());

        // Monotone: p within p|q maps within the image of p|q.
        auto big = map_predicate(union_or(p, q), m);
        auto small = map_predicate(p, m);
        for (Word w : small.members()) {
            EXPECT_TRUE(big.contains(w));
        }
    }
}

TEST(MapPredicate, BijectiveRenamingPreservesSize) {
    Random rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = rng.between(1, 6);
        auto src = oracle::letters(n, "src");
        auto dst = oracle::letters(n, "dst", 'p');
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng.engine());
        std::vector<Mapping::IndexPair> pairs;
        for (std::size_t i = 0; i < n; ++i) {
            pairs.emplace_back(i, perm[i]);
        }
        Mapping m(src, dst, pairs);
        auto p = rng.family(src, 20);
        EXPECT_EQ(map_predicate(p, m).size(), p.size());
    }
}
