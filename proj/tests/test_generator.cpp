#include <gtest/gtest.h>

#include <set>

#include "stonewb/error.hpp"
#include "stonewb/generator.hpp"

using namespace stonewb;

TEST(Generator, PosetCounts) {
    const std::size_t labeled[] = {1, 3, 19, 219, 4231};
    const std::size_t classes[] = {1, 2, 5, 16, 63, 318};
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(gen_posets(n, PosetMode::labeled).size(), labeled[n - 1]) << n;
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(gen_posets(n).size(), classes[n - 1]) << n;
    EXPECT_THROW(gen_posets(7), SizeError);
}

TEST(Generator, CanonicalDigestsDistinct) {
    auto s = gen_posets(5);
    std::set<std::string> d(s.digests.begin(), s.digests.end());
    EXPECT_EQ(d.size(), s.size());
    auto a = FinitePoset::from_pairs({0, 1, 2}, {{0, 1}});
    auto b = FinitePoset::from_pairs({0, 1, 2}, {{2, 0}});
    EXPECT_EQ(canonical_digest(a), canonical_digest(b));
}

TEST(Generator, CPosetCounts) {
    const std::size_t dist[] = {1, 2, 6, 22};
    const std::size_t all[] = {1, 2, 10, 138};
    for (std::size_t n = 1; n <= 4; ++n) {
        auto d = gen_distributive_cposets(n);
        EXPECT_EQ(d.size(), dist[n - 1]) << n;
        for (const auto& p : d.items) ASSERT_TRUE(validate_cposet(p).pass() && is_distributive(p));
        EXPECT_EQ(gen_cposets(n).size(), all[n - 1]) << n;
    }
}

TEST(Generator, SpaceCounts) {
    struct Row { std::size_t p, b, count; };
    const Row rows[] = {{0, 0, 1}, {0, 1, 1}, {1, 1, 0}, {1, 2, 1}, {2, 2, 1}, {2, 3, 3}, {2, 4, 1},
                        {3, 3, 3}, {3, 4, 10}, {3, 5, 9}, {3, 6, 5}, {4, 4, 11}, {4, 5, 48}};
    for (const auto& r : rows) EXPECT_EQ(gen_spaces(r.p, r.b).size(), r.count) << r.p << "," << r.b;
}

TEST(Generator, LatticeCounts) {
    const std::size_t counts[] = {1, 1, 1, 2, 5};
    for (std::size_t n = 1; n <= 5; ++n) {
        auto s = gen_lattices(n);
        EXPECT_EQ(s.size(), counts[n - 1]) << n;
        for (const auto& l : s.items) ASSERT_TRUE(validate_lattice(l).pass());
    }
}

TEST(Generator, RandomStreamsAreSeeded) {
    auto a = gen_distributive_cposets_random(6, 25, 42);
    auto b = gen_distributive_cposets_random(6, 25, 42);
    auto c = gen_distributive_cposets_random(6, 25, 43);
    EXPECT_EQ(a.digests, b.digests);
    EXPECT_NE(a.digests, c.digests);
    EXPECT_EQ(a.seed, 42u);
    for (const auto& p : a.items) ASSERT_TRUE(is_distributive(p));
    auto r = gen_posets_random(5, 10, 1);
    EXPECT_EQ(r.digests, gen_posets_random(5, 10, 1).digests);
}

TEST(Generator, Rng) {
    Rng rng(9);
    for (int i = 0; i < 1000; ++i) ASSERT_LT(rng.below(7), 7u);
    Rng x(5), y(5);
    for (int i = 0; i < 50; ++i) ASSERT_EQ(x.below(1000), y.below(1000));
}

TEST(Generator, Maps) {
    EXPECT_EQ(all_maps(2, 3).size(), 9u);
    EXPECT_EQ(all_maps(2, 3)[1], (PositionMap{0, 1}));
    EXPECT_TRUE(all_maps(1, 0).empty());
    EXPECT_EQ(all_maps(0, 2).size(), 1u);
    std::vector<CPoset> corpus;
    for (std::size_t n = 1; n <= 3; ++n)
        for (auto& p : gen_distributive_cposets(n).items) corpus.push_back(p);
    for (const auto& m : gen_strict_maps(corpus))
        ASSERT_TRUE(check_strict(corpus[m.source], corpus[m.target], m.map).pass);
    auto spaces = gen_spaces_upto(2, 4).items;
    auto sm = gen_spectral_maps(spaces);
    EXPECT_FALSE(sm.empty());
    for (const auto& m : sm) ASSERT_TRUE(check_spectral(m.map, spaces[m.source], spaces[m.target]).pass);
}
