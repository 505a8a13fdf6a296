#include <gtest/gtest.h>

#include "stonewb/error.hpp"
#include "stonewb/poset.hpp"

using namespace stonewb;

namespace {

// Diamond 0 < 1, 2 < 3, with labels deliberately out of order.
FinitePoset diamond() {
    return FinitePoset::from_pairs({30, 10, 20, 0},
                                   {{0, 10}, {0, 20}, {10, 30}, {20, 30}, {0, 30}});
}

}  // namespace

TEST(Poset, PositionsFollowLabelOrder) {
    auto p = diamond();
    EXPECT_EQ(p.labels(), (std::vector<Natural>{0, 10, 20, 30}));
    EXPECT_EQ(p.position(20), 2u);
    EXPECT_FALSE(p.position(5).has_value());
    EXPECT_TRUE(p.leq(0, 3));
    EXPECT_FALSE(p.leq(1, 2));
}

TEST(Poset, Closures) {
    auto p = diamond();
    EXPECT_EQ(p.down_closure(bit(1)), bit(0) | bit(1));
    EXPECT_EQ(p.up_closure(bit(1)), bit(1) | bit(3));
    EXPECT_EQ(p.lower_bounds(bit(1) | bit(2)), bit(0));
    EXPECT_EQ(p.upper_bounds(0), p.all());
    EXPECT_TRUE(p.is_down_set(bit(0) | bit(2)));
    EXPECT_FALSE(p.is_up_set(bit(0)));
}

TEST(Poset, MeetJoin) {
    auto p = diamond();
    EXPECT_EQ(p.meet(1, 2), 0u);
    EXPECT_EQ(p.join(1, 2), 3u);
    auto anti = FinitePoset::from_pairs({0, 1}, {});
    EXPECT_FALSE(anti.meet(0, 1).has_value());
    EXPECT_FALSE(anti.down_directed(anti.all()));
    EXPECT_FALSE(anti.down_directed(0));
    EXPECT_TRUE(p.up_directed(bit(1) | bit(2) | bit(3)));
}

TEST(Poset, CoversAndPairs) {
    auto p = diamond();
    EXPECT_EQ(p.covers().size(), 4u);
    EXPECT_EQ(p.strict_pairs().size(), 5u);
}

TEST(Poset, Validation) {
    EXPECT_TRUE(validate_poset(diamond()).pass());
    auto cyc = FinitePoset::from_pairs({0, 1}, {{0, 1}, {1, 0}});
    auto r = validate_poset(cyc);
    EXPECT_FALSE(r.pass());
    ASSERT_NE(r.find("antisymmetric"), nullptr);
    EXPECT_FALSE(r.find("antisymmetric")->pass);
    auto nontrans = FinitePoset::from_pairs({0, 1, 2}, {{0, 1}, {1, 2}});
    EXPECT_FALSE(validate_poset(nontrans).pass());
}

TEST(Poset, BadInput) {
    EXPECT_THROW(FinitePoset::from_pairs({0, 0}, {}), InputError);
    EXPECT_THROW(FinitePoset::from_pairs({0}, {{0, 1}}), InputError);
    std::vector<Natural> big(40);
    for (std::size_t i = 0; i < big.size(); ++i) big[i] = i;
    EXPECT_THROW(FinitePoset::from_pairs(big, {}), SizeError);
}
