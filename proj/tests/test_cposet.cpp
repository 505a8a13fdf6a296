#include <gtest/gtest.h>

#include "stonewb/cposet.hpp"
#include "stonewb/error.hpp"
#include "stonewb/lattices.hpp"
#include "stonewb/presentations.hpp"

using namespace stonewb;

namespace {

FinitePoset chain(std::size_t n) {
    std::vector<Natural> carrier;
    std::vector<std::pair<Natural, Natural>> leq;
    for (Natural i = 0; i < n; ++i) {
        carrier.push_back(i);
        for (Natural j = 0; j < i; ++j) leq.emplace_back(j, i);
    }
    return FinitePoset::from_pairs(carrier, leq);
}

}  // namespace

TEST(CPoset, ChainIdealsAndPrimes) {
    auto p = poset_to_cposet(chain(3));
    EXPECT_TRUE(validate_cposet(p).pass());
    EXPECT_EQ(enumerate_ideals(p).ideals(), (std::vector<Mask>{0, 1, 3, 7}));
    EXPECT_EQ(enumerate_primes(p), (std::vector<Mask>{1, 3}));
    EXPECT_TRUE(is_distributive(p));
    EXPECT_EQ(closure(p, FinSet{1}), (FinSet{0, 1}));
    EXPECT_THROW(closure(p, FinSet{9}), InputError);
}

TEST(CPoset, PrimeCriteria) {
    auto p = poset_to_cposet(chain(3));
    auto r = is_prime(p, 3);
    EXPECT_TRUE(r.prime);
    EXPECT_TRUE(r.proper && r.complement_is_filter && r.meet_prime && r.lower_bound_condition);
    EXPECT_FALSE(is_prime(p, 0).prime);
    EXPECT_FALSE(is_prime(p, 7).prime);
    EXPECT_THROW(is_prime(p, 2), PreconditionError);  // {1} is not a down-set
}

TEST(CPoset, M3IsNotDistributive) {
    auto p = cposet_from_lattice(lattice_m3());
    EXPECT_TRUE(validate_cposet(p).pass());
    auto d = check_distributive(p);
    EXPECT_FALSE(d.distributive);
    ASSERT_TRUE(d.witness.has_value());
}

TEST(CPoset, PrimeSeparation) {
    auto p = poset_to_cposet(chain(3));
    EXPECT_EQ(prime_separation(p, bit(0), bit(2)), 1u);
    EXPECT_EQ(prime_separation(p, bit(0) | bit(1), bit(2)), 3u);
    EXPECT_THROW(prime_separation(p, bit(0) | bit(1), bit(1) | bit(2)), PreconditionError);
}

TEST(CPoset, BadOperatorCodeIsNamed) {
    auto poset = FinitePoset::from_pairs({0}, {});
    try {
        CPoset::make(poset, EnumOperatorCode::from_codes({1, 11}));
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("11"), std::string::npos) << e.what();
    }
}

TEST(CPoset, OrderMustMatchClosure) {
    // 0 <= 1 in the order, but the operator never puts 0 into phi({1}).
    auto poset = FinitePoset::from_pairs({0, 1}, {{0, 1}});
    auto code = EnumOperatorCode::from_entries({{0, 1}, {1, 2}});
    auto r = validate_cposet(CPoset::make(poset, code));
    EXPECT_FALSE(r.pass());
    ASSERT_NE(r.find("order-matches-closure"), nullptr);
    EXPECT_FALSE(r.find("order-matches-closure")->pass);
}

TEST(CPoset, OperatorFromClosureRebuildsTable) {
    for (const auto& p : {poset_to_cposet(chain(4)), cposet_from_lattice(lattice_m3()),
                          cposet_from_lattice(lattice_grid2())}) {
        auto code = operator_from_closure(p.poset(), p.closure_table());
        auto q = CPoset::make(p.poset(), code);
        EXPECT_TRUE(std::ranges::equal(p.closure_table(), q.closure_table()));
        EXPECT_LE(code.size(), p.code().size() + p.size() * p.size());
    }
}

TEST(CPoset, Morphisms) {
    auto c2 = poset_to_cposet(chain(2));
    auto c3 = poset_to_cposet(chain(3));
    EXPECT_TRUE(check_strict(c2, c3, {0, 2}).pass);
    EXPECT_TRUE(check_dp_isomorphism(c3, c3, {0, 1, 2}).pass);
    EXPECT_FALSE(check_dp_isomorphism(c2, c3, {0, 2}).pass);  // not surjective
    EXPECT_FALSE(check_dp_isomorphism(c3, c3, {2, 1, 0}).pass);
    EXPECT_THROW(require_total({0, 5}, 2, 3), InputError);
    EXPECT_EQ(image({0, 2}, 3u), 5u);
    EXPECT_EQ(preimage({0, 2}, 4u), 2u);
}

TEST(CPoset, StrictFailsWhenPrimePullsBackToEverything) {
    // Chain 0<1<2 onto the 2-chain collapsing 1 and 2: the prime {0} of the
    // target pulls back to {0}, fine; collapsing 0 and 1 gives {0,1} from
    // prime {0}, also fine. Constant map to the bottom pulls {0} back to all.
    auto c2 = poset_to_cposet(chain(2));
    auto c3 = poset_to_cposet(chain(3));
    EXPECT_FALSE(check_strict(c3, c2, {0, 0, 0}).pass);
    EXPECT_TRUE(check_strict(c3, c2, {0, 1, 1}).pass);
}
