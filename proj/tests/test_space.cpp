#include <gtest/gtest.h>

#include <algorithm>

#include "stonewb/error.hpp"
#include "stonewb/space.hpp"

using namespace stonewb;

namespace {

SpaceWithBase sierpinski() { return SpaceWithBase::from_lists({0, 1}, {{}, {0}, {0, 1}}); }
SpaceWithBase discrete2() { return SpaceWithBase::from_lists({0, 1}, {{0}, {1}}); }

bool has_cell(const Classification& c, const std::string& name) {
    return std::find(c.cells.begin(), c.cells.end(), name) != c.cells.end();
}

}  // namespace

TEST(Space, SierpinskiValid) {
    auto s = sierpinski();
    EXPECT_TRUE(validate_space(s).pass());
    EXPECT_TRUE(s.injective());
    EXPECT_EQ(s.opens(), (std::vector<Mask>{0, 1, 3}));
    EXPECT_EQ(s.closure_of(bit(0)), 3u);
    EXPECT_EQ(s.closure_of(bit(1)), 2u);
    auto o = specialization_order(s);
    EXPECT_TRUE(o.leq(1, 0));
    EXPECT_FALSE(o.leq(0, 1));
}

TEST(Space, SierpinskiNeedsEmptyBaseSet) {
    // Sober with a down-directed base, so the empty set must be a base set.
    auto s = SpaceWithBase::from_lists({0, 1}, {{0}, {0, 1}});
    auto r = validate_space(s);
    EXPECT_FALSE(r.pass());
    EXPECT_FALSE(r.find("empty-in-base-iff-sober-and-down-directed")->pass);
}

TEST(Space, OnePoint) {
    EXPECT_FALSE(validate_space(SpaceWithBase::from_lists({7}, {{7}})).pass());
    EXPECT_TRUE(validate_space(SpaceWithBase::from_lists({7}, {{}, {7}})).pass());
    EXPECT_TRUE(validate_space(SpaceWithBase::from_lists({}, {})).pass());
}

TEST(Space, DiscreteTwo) {
    auto s = discrete2();
    EXPECT_TRUE(validate_space(s).pass());
    auto c = classify(s);
    EXPECT_TRUE(c.valid);
    EXPECT_FALSE(c.has_empty);
    EXPECT_FALSE(c.has_whole);
    EXPECT_FALSE(c.down_directed);
    EXPECT_TRUE(is_almost_sober(s, SoberMode::strict_literal));
}

TEST(Space, T0AndBasisFailures) {
    auto r = validate_space(SpaceWithBase::from_lists({0, 1}, {{}, {0, 1}}));
    EXPECT_FALSE(r.find("T0")->pass);
    auto r2 = validate_space(SpaceWithBase::from_lists({0, 1, 2}, {{0, 1}, {1, 2}, {0, 1, 2}}));
    EXPECT_FALSE(r2.find("basis-intersections")->pass);
    auto r3 = validate_space(SpaceWithBase::from_lists({0, 1}, {{}, {0}}));
    EXPECT_FALSE(r3.find("basis-covers")->pass);
}

TEST(Space, BadInput) {
    EXPECT_THROW(SpaceWithBase::from_lists({0, 1}, {{2}}), InputError);
    EXPECT_THROW(SpaceWithBase::from_lists({0, 1}, {{0}}, {0, 3}), InputError);
    EXPECT_THROW(SpaceWithBase::make({0, 0}, {}), InputError);
}

TEST(Space, NonInjectiveBase) {
    auto s = SpaceWithBase::from_lists({0, 1}, {{}, {0}, {0, 1}}, {0, 1, 1, 2});
    EXPECT_EQ(s.base_count(), 4u);
    EXPECT_FALSE(s.injective());
    EXPECT_EQ(s.distinct_base(), (std::vector<Mask>{0, 1, 3}));
    EXPECT_TRUE(s.in_base(1));
    EXPECT_FALSE(s.in_base(2));
}

TEST(Space, Classification) {
    auto c = classify(sierpinski());
    EXPECT_TRUE(c.valid);
    EXPECT_TRUE(c.has_empty && c.has_whole);
    EXPECT_TRUE(c.multiplicative && c.additive);
    EXPECT_TRUE(has_cell(c, "ASpec"));
    EXPECT_EQ(to_string(SoberMode::strict_literal), "strict-literal");
    EXPECT_EQ(sober_mode_from_string("standard"), SoberMode::standard);
}

TEST(Space, Inc) {
    auto inc = inc_from_space(discrete2());
    using E = std::pair<std::size_t, Natural>;
    EXPECT_EQ(inc.entries, (std::vector<E>{{0, 1}, {0, 3}, {1, 2}, {1, 3}}));
    EXPECT_TRUE(inc.contains(1, 3));
    EXPECT_FALSE(inc.contains(0, 2));
    EXPECT_EQ(full_maxk(3), 7u);
    auto cut = inc_from_space(discrete2(), 2);
    EXPECT_EQ(cut.entries, (std::vector<E>{{0, 1}, {1, 2}}));
}

TEST(Space, Spectral) {
    auto d = discrete2();
    EXPECT_TRUE(check_spectral({1, 0}, d, d).pass);
    auto bad = check_spectral({0, 1}, d, sierpinski());
    EXPECT_FALSE(bad.pass);
    EXPECT_NE(bad.failure.find("not a base set"), std::string::npos);
    EXPECT_TRUE(check_spectral({0, 1}, sierpinski(), sierpinski()).pass);
}
