#include <gtest/gtest.h>

#include "stonewb/error.hpp"
#include "stonewb/lattices.hpp"
#include "stonewb/presentations.hpp"

using namespace stonewb;

TEST(Relabel, ArbitraryLabels) {
    auto p = cposet_from_lattice(lattice_grid2());
    auto r = relabel_cposet(p, {31, 4, 17, 0});
    EXPECT_TRUE(r.verified.pass) << r.verified.failure;
    EXPECT_EQ(r.cposet.poset().labels(), (std::vector<Natural>{0, 4, 17, 31}));
    EXPECT_EQ(r.to_source, (PositionMap{3, 1, 2, 0}));
    EXPECT_TRUE(validate_cposet(r.cposet).pass());
    auto back = relabel_canonical(r.cposet);
    EXPECT_TRUE(back.verified.pass);
    EXPECT_EQ(back.cposet.poset().labels(), (std::vector<Natural>{0, 1, 2, 3}));
}

TEST(Relabel, Errors) {
    auto p = cposet_from_lattice(lattice_chain(3));
    EXPECT_THROW(relabel_cposet(p, {1, 1, 2}), InputError);
    EXPECT_THROW(relabel_cposet(p, {0, 1, 63}), OverflowError);
}

TEST(Injectivize, KeepsFirstOccurrences) {
    auto s = SpaceWithBase::from_lists({0, 1}, {{0}, {0, 1}}, {0, 0, 1});
    auto r = injectivize_base(s);
    EXPECT_EQ(r.kept, (std::vector<std::size_t>{0, 2}));
    EXPECT_TRUE(r.space.injective());
    EXPECT_EQ(r.space.betas(), (std::vector<Mask>{1, 3}));
}

TEST(PosetToCPoset, TwoChain) {
    auto p = poset_to_cposet(FinitePoset::from_pairs({0, 1}, {{0, 1}}));
    EXPECT_EQ(p.code().codes(), (std::vector<Natural>{pair(0, 1), pair(0, 2), pair(1, 2)}));
    EXPECT_EQ(p.closure(bit(1)), 3u);
    EXPECT_TRUE(validate_cposet(p).pass());
}

TEST(Reports, Shapes) {
    auto p = cposet_from_lattice(lattice_grid2());
    auto j = presentation_report(p);
    EXPECT_EQ(j["kind"], "cposet");
    EXPECT_EQ(j["carrier_size"], 4);
    EXPECT_TRUE(j["distributive"].get<bool>());
    auto s = SpaceWithBase::from_lists({0, 1}, {{0}, {0, 1}}, {0, 0, 1});
    auto js = presentation_report(s);
    EXPECT_FALSE(js["beta_injective"].get<bool>());
    EXPECT_EQ(js["injectivization"]["kept"], nlohmann::json::parse("[0, 2]"));
    auto sp = spectrum_presentation_report(p);
    EXPECT_EQ(sp["kind"], "spectrum");
    EXPECT_TRUE(sp["inc_provenance"]["matches_extensional"].get<bool>());
}
