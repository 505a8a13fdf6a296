#include <gtest/gtest.h>

#include "stonewb/error.hpp"
#include "stonewb/generator.hpp"
#include "stonewb/lattices.hpp"
#include "stonewb/presentations.hpp"
#include "stonewb/spectrum.hpp"

using namespace stonewb;

namespace {

CPoset chain_cposet(std::size_t n) { return cposet_from_lattice(lattice_chain(n)); }

}  // namespace

TEST(Spectrum, TwoChainHasOnePoint) {
    auto s = spectrum(chain_cposet(2));
    EXPECT_EQ(s.underlying.point_count(), 1u);
    EXPECT_EQ(s.primes, std::vector<Mask>{1});
    EXPECT_TRUE(s.basis_verified);
}

TEST(Spectrum, ThreeChain) {
    auto s = spectrum(chain_cposet(3));
    ASSERT_EQ(s.underlying.point_count(), 2u);
    EXPECT_EQ(s.underlying.betas(), (std::vector<Mask>{0, 1, 3}));
    EXPECT_TRUE(validate_space(s.underlying).pass());
    EXPECT_EQ(v_of_set(s, bit(1) | bit(2)), 3u);
    EXPECT_EQ(v_of_set(chain_cposet(3), bit(0)), 0u);
}

TEST(Spectrum, NonDistributiveRejected) {
    EXPECT_THROW(spectrum(cposet_from_lattice(lattice_m3())), PreconditionError);
}

TEST(Spectrum, LphiOnSmallCorpus) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& p : gen_distributive_cposets(n).items) {
            auto r = check_lphi(p);
            ASSERT_TRUE(r.pass()) << n;
            ASSERT_EQ(r.parts.size(), 5u);
        }
    }
}

TEST(Spectrum, EmptyBoundaryReportedSeparately) {
    // A least element lies in every prime, so V of it is empty like V of {}.
    auto r = check_lphi(chain_cposet(3));
    EXPECT_TRUE(r.pass());
    EXPECT_TRUE(r.empty_boundary_fails);
    auto anti = poset_to_cposet(FinitePoset::from_pairs({0, 1}, {}));
    EXPECT_FALSE(check_lphi(anti).empty_boundary_fails);
}

TEST(Spectrum, IncFromOperatorMatchesSpace) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& p : gen_distributive_cposets(n).items) {
            const Natural maxk = full_maxk(p.size());
            auto from_code = inc_from_operator(p, maxk);
            auto from_space = inc_from_space(spectrum(p).underlying, maxk);
            ASSERT_EQ(from_code, from_space) << n;
        }
    }
}

TEST(Spectrum, OperatorFromInc) {
    auto inc = inc_from_space(SpaceWithBase::from_lists({0, 1}, {{0}, {1}}));
    auto a = operator_from_inc(inc);
    EXPECT_EQ(a.codes(), (std::vector<Natural>{pair(0, 1), pair(0, 3), pair(1, 2), pair(1, 3)}));
}
