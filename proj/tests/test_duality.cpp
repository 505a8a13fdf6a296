#include <gtest/gtest.h>

#include "stonewb/duality.hpp"
#include "stonewb/error.hpp"
#include "stonewb/generator.hpp"
#include "stonewb/lattices.hpp"
#include "stonewb/presentations.hpp"

using namespace stonewb;

namespace {

SpaceWithBase sierpinski() { return SpaceWithBase::from_lists({0, 1}, {{}, {0}, {0, 1}}); }
SpaceWithBase discrete2() { return SpaceWithBase::from_lists({0, 1}, {{0}, {1}}); }
CPoset chain(std::size_t n) { return cposet_from_lattice(lattice_chain(n)); }

}  // namespace

TEST(FunctorP, Discrete) {
    auto p = functor_P_obj(discrete2());
    EXPECT_TRUE(validate_cposet(p).pass());
    EXPECT_EQ(p.size(), 2u);
    EXPECT_FALSE(p.poset().leq(0, 1));
    EXPECT_FALSE(p.poset().leq(1, 0));
    EXPECT_EQ(p.closure(3), 3u);
}

TEST(FunctorP, SierpinskiIsThreeChain) {
    auto p = functor_P_obj(sierpinski());
    EXPECT_TRUE(validate_cposet(p).pass());
    EXPECT_TRUE(p.poset().leq(0, 1));
    EXPECT_TRUE(p.poset().leq(1, 2));
    EXPECT_EQ(p.closure(bit(1)), 3u);
    EXPECT_TRUE(is_distributive(p));
    EXPECT_EQ(functor_T_obj(p).point_count(), 2u);
}

TEST(FunctorP, NonInjectiveRejected) {
    auto s = SpaceWithBase::from_lists({0, 1}, {{}, {0}, {0, 1}}, {0, 1, 1, 2});
    EXPECT_THROW(functor_P_obj(s), PreconditionError);
}

TEST(Unit, SmallSpaces) {
    for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& s : gen_spaces_upto(n, 5).items) {
            auto u = unit_map(s);
            ASSERT_TRUE(u.pass) << u.failure;
            ASSERT_EQ(u.spectrum.point_count(), s.point_count());
            ASSERT_TRUE(check_effective_spectral(u.forward, s, u.spectrum).pass);
            ASSERT_TRUE(check_effective_spectral(u.inverse, u.spectrum, s).pass);
        }
    }
}

TEST(Counit, SmallCPosets) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& p : gen_distributive_cposets(n).items) {
            auto c = counit_map(p);
            ASSERT_TRUE(c.report.pass) << c.report.failure;
            ASSERT_EQ(c.xi, identity_map(p.size()));
        }
    }
}

TEST(Morphisms, SpaceSide) {
    auto d = discrete2();
    auto r = morphism_duality_check({1, 0}, d, d);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(functor_P_mor({1, 0}, d, d), (PositionMap{1, 0}));
    EXPECT_THROW(functor_P_mor({0, 1}, d, sierpinski()), PreconditionError);
}

TEST(Morphisms, CPosetSide) {
    auto c2 = chain(2), c3 = chain(3);
    auto m = functor_T_mor({0, 2}, c2, c3);
    EXPECT_EQ(m.h, (PositionMap{0, 2}));
    EXPECT_TRUE(check_effective_spectral(m, functor_T_obj(c3), functor_T_obj(c2)).pass);
    EXPECT_TRUE(morphism_duality_check({0, 2}, c2, c3).pass());
    EXPECT_THROW(functor_T_mor({0, 0, 0}, c3, c2), PreconditionError);
}

TEST(Morphisms, Contravariance) {
    auto c2 = chain(2), c3 = chain(3), c4 = chain(4);
    EXPECT_TRUE(check_contravariance({0, 2}, {0, 1, 3}, c2, c3, c4).pass());
    auto d = discrete2();
    EXPECT_TRUE(check_contravariance({1, 0}, {1, 0}, d, d, d).pass());
    EXPECT_EQ(compose({2, 0, 1}, {1, 2}), (PositionMap{0, 1}));
}

TEST(Lds, DownSetOperators) {
    auto a = poset_to_cposet(FinitePoset::from_pairs({0, 1, 2}, {{0, 1}, {0, 2}}));
    EXPECT_TRUE(is_downset_cposet(a));
    auto r = check_lds(a, a, identity_map(3));
    EXPECT_TRUE(r.pass()) << r.failure;
    Mask w = 0;
    EXPECT_FALSE(is_downset_cposet(cposet_from_lattice(lattice_grid2()), &w));
    EXPECT_NE(w, 0u);
}
