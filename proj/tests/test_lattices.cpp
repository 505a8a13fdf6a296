#include <gtest/gtest.h>

#include "stonewb/error.hpp"
#include "stonewb/lattices.hpp"

using namespace stonewb;

TEST(Lattice, BuiltinsValid) {
    EXPECT_TRUE(validate_lattice(lattice_m3()).pass());
    EXPECT_TRUE(validate_lattice(lattice_grid2()).pass());
    EXPECT_TRUE(validate_lattice(lattice_chain(4)).pass());
}

TEST(Lattice, JoinIdealClosureOnDiamond) {
    auto j = lattice_grid2().join_reduct();
    EXPECT_EQ(join_ideal_closure(j, 0), 0u);
    EXPECT_EQ(join_ideal_closure(j, bit(1)), bit(0) | bit(1));
    EXPECT_EQ(join_ideal_closure(j, bit(1) | bit(2)), 15u);
}

TEST(Lattice, M3VersusGrid) {
    EXPECT_FALSE(is_distributive(cposet_from_lattice(lattice_m3())));
    EXPECT_TRUE(is_distributive(cposet_from_lattice(lattice_grid2())));
    auto bad = check_semilattice_duality(lattice_m3());
    EXPECT_FALSE(bad.pass());
    EXPECT_FALSE(bad.find("distributive")->pass);
    auto good = check_semilattice_duality(lattice_grid2());
    EXPECT_TRUE(good.pass());
    EXPECT_NE(good.find("meet-witness"), nullptr);
    EXPECT_NE(good.find("join-witness"), nullptr);
    EXPECT_NE(good.find("cell-ASpec"), nullptr);
}

TEST(Semilattice, Duality) {
    auto g = lattice_grid2();
    EXPECT_TRUE(check_semilattice_duality(g.meet_reduct()).pass());
    EXPECT_TRUE(check_semilattice_duality(g.join_reduct()).pass());
    auto meet_p = cposet_from_semilattice(g.meet_reduct());
    EXPECT_EQ(meet_p.closure(bit(1) | bit(2)), bit(0) | bit(1) | bit(2));
    auto join_p = cposet_from_semilattice(g.join_reduct());
    EXPECT_EQ(join_p.closure(bit(1) | bit(2)), 15u);
}

TEST(Semilattice, Validation) {
    // Not commutative: 0*1 = 0 but 1*0 = 1.
    Semilattice s{SemilatticeKind::join, {0, 1}, OpTable(2, {0, 0, 1, 1})};
    auto r = validate_semilattice(s);
    EXPECT_FALSE(r.pass());
    EXPECT_FALSE(r.find("commutative")->pass);
    Semilattice range{SemilatticeKind::meet, {0, 1}, OpTable(2, {0, 0, 0, 5})};
    EXPECT_FALSE(validate_semilattice(range).pass());
    auto chain = lattice_chain(3);
    auto wrong = FinitePoset::from_pairs({0, 1, 2}, {{1, 0}, {2, 1}, {2, 0}});
    EXPECT_FALSE(validate_lattice(chain, &wrong).pass());
}

TEST(Witness, Search) {
    auto s = SpaceWithBase::from_lists({0, 1}, {{}, {0}, {0, 1}});
    auto m = find_meet_witness(s);
    ASSERT_TRUE(m.witness.has_value());
    EXPECT_EQ(m.witness->table(1, 2), 1u);
    auto d = SpaceWithBase::from_lists({0, 1}, {{0}, {1}});
    auto dm = find_meet_witness(d);
    EXPECT_FALSE(dm.witness.has_value());
    EXPECT_EQ(dm.offending, (std::pair<std::size_t, std::size_t>{0, 1}));
    EXPECT_FALSE(find_join_witness(d).witness.has_value());
}

TEST(Lattice, FromOrder) {
    EXPECT_FALSE(lattice_from_order(FinitePoset::from_pairs({0, 1}, {})).has_value());
    auto l = lattice_from_order(lattice_m3().order());
    ASSERT_TRUE(l.has_value());
    EXPECT_EQ(l->meet, lattice_m3().meet);
    EXPECT_EQ(l->join, lattice_m3().join);
}
