#include <gtest/gtest.h>

#include <limits>

#include "stonewb/encoding.hpp"
#include "stonewb/error.hpp"

using namespace stonewb;

TEST(Pairing, SmallValues) {
    EXPECT_EQ(pair(0, 0), 0u);
    EXPECT_EQ(pair(1, 2), 7u);
    EXPECT_EQ(pair(2, 1), 8u);
    EXPECT_EQ(unpair(7), (std::pair<Natural, Natural>{1, 2}));
    EXPECT_EQ(unpair(11), (std::pair<Natural, Natural>{1, 3}));
}

TEST(Pairing, RoundTripDense) {
    for (Natural n = 0; n < 5000; ++n) {
        auto [x, y] = unpair(n);
        ASSERT_EQ(pair(x, y), n) << n;
    }
}

TEST(Pairing, UnpairTotalAtTop) {
    const Natural top = std::numeric_limits<Natural>::max();
    auto [x, y] = unpair(top);
    // (x, y) may not be re-pairable, but unpair itself must not throw.
    EXPECT_LE(x, top);
    EXPECT_LE(y, top);
    auto [a, b] = unpair(pair(3'000'000'000ULL, 1'000'000'000ULL));
    EXPECT_EQ(a, 3'000'000'000ULL);
    EXPECT_EQ(b, 1'000'000'000ULL);
}

TEST(Pairing, Overflow) {
    EXPECT_THROW(pair(40, Natural{1} << 40), OverflowError);
    EXPECT_THROW(pair(std::numeric_limits<Natural>::max(), 0), OverflowError);
}

TEST(SetCode, Examples) {
    EXPECT_EQ(set_decode(0), FinSet{});
    EXPECT_EQ(set_decode(5), (FinSet{0, 2}));
    EXPECT_EQ(set_decode(6), (FinSet{1, 2}));
    EXPECT_EQ(set_encode(FinSet{3}), 8u);
    EXPECT_EQ(set_encode(FinSet{63}), Natural{1} << 63);
    EXPECT_THROW(set_encode(FinSet{64}), OverflowError);
    for (Natural k = 0; k < 4096; ++k) ASSERT_EQ(set_encode(set_decode(k)), k);
}

TEST(FinSet, SortedUnique) {
    FinSet s{4, 1, 4, 2};
    EXPECT_EQ(s.elements(), (std::vector<Natural>{1, 2, 4}));
    EXPECT_TRUE(FinSet({1, 4}).subset_of(s));
    EXPECT_FALSE(s.subset_of(FinSet{1, 2}));
}

TEST(EnumOperator, Apply) {
    // <0,{}>, <1,{0}>, <2,{0,1}>
    auto a = EnumOperatorCode::from_entries({{0, 0}, {1, 1}, {2, 3}});
    EXPECT_EQ(enum_apply(a, {}), FinSet{0});
    EXPECT_EQ(enum_apply(a, {0}), (FinSet{0, 1}));
    EXPECT_EQ(enum_apply(a, {1}), FinSet{0});
    EXPECT_EQ(enum_apply(a, {0, 1}), (FinSet{0, 1, 2}));
}

TEST(EnumOperator, CodesSortedAndDeduped) {
    auto a = EnumOperatorCode::from_codes({8, 7, 8, 0});
    EXPECT_EQ(a.codes(), (std::vector<Natural>{0, 7, 8}));
    auto e = a.entries();
    ASSERT_EQ(e.size(), 3u);
    EXPECT_EQ(e[1], (OperatorEntry{1, 2}));
}

TEST(EnumOperator, JsonForms) {
    auto a = EnumOperatorCode::from_entries({{1, 2}, {0, 1}});
    auto codes = operator_to_json(a, OperatorForm::pair_codes);
    auto objects = operator_to_json(a, OperatorForm::objects);
    EXPECT_EQ(operator_from_json(codes), a);
    EXPECT_EQ(operator_from_json(objects), a);
    auto mixed = nlohmann::json::parse(R"([1, {"x": 1, "set": [1]}])");
    EXPECT_EQ(operator_from_json(mixed), a);
    EXPECT_THROW(operator_from_json(nlohmann::json::parse(R"([{"x": 1}])")), InputError);
    EXPECT_THROW(operator_from_json(nlohmann::json::parse(R"("x")")), InputError);
}
