#include <gtest/gtest.h>

#include <random>

#include "stonewb/kernels.hpp"

using namespace stonewb;
namespace k = stonewb::kernels;

namespace {

std::vector<k::CompiledEntry> random_entries(std::mt19937_64& rng, std::size_t n, std::size_t count) {
    std::vector<k::CompiledEntry> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back({rng() % n, static_cast<Mask>(rng() % (Mask{1} << n))});
    return out;
}

// Make a table extensive and idempotent by iterating to a fixed point.
std::vector<Mask> saturate(std::vector<Mask> t) {
    for (Mask x = 0; x < t.size(); ++x) t[x] |= x;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Mask x = 0; x < t.size(); ++x) {
            Mask y = t[x] | t[t[x]];
            if (y != t[x]) t[x] = y, changed = true;
        }
    }
    return t;
}

}  // namespace

TEST(Kernels, ClosureTableAgrees) {
    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 12; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            auto e = random_entries(rng, n, 3 * n);
            ASSERT_EQ(k::serial::closure_table(n, e), k::parallel::closure_table(n, e)) << n;
        }
    }
    EXPECT_EQ(k::parallel::closure_table(0, {}), std::vector<Mask>{0});
}

TEST(Kernels, FixedPointsAndAxiomsAgree) {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 10; ++n) {
        auto raw = k::serial::closure_table(n, random_entries(rng, n, 2 * n));
        auto closed = saturate(raw);
        for (const auto& t : {raw, closed}) {
            ASSERT_EQ(k::serial::fixed_points(t), k::parallel::fixed_points(t));
            ASSERT_EQ(k::serial::closure_axioms(n, t), k::parallel::closure_axioms(n, t));
        }
    }
}

TEST(Kernels, AxiomScanFindsFirstFailure) {
    // n = 1, phi({}) = {0}, phi({0}) = {}: not extensive at {0}.
    std::vector<Mask> t{1, 0};
    auto s = k::serial::closure_axioms(1, t);
    ASSERT_TRUE(s.not_extensive.has_value());
    EXPECT_EQ(*s.not_extensive, 1u);
    EXPECT_TRUE(s.not_monotone.has_value());
}

TEST(Kernels, DistributivityAgrees) {
    std::mt19937_64 rng(3);
    for (std::size_t n = 2; n <= 7; ++n) {
        for (int rep = 0; rep < 4; ++rep) {
            auto t = saturate(k::serial::closure_table(n, random_entries(rng, n, n)));
            auto ideals = k::serial::fixed_points(t);
            ASSERT_EQ(k::serial::distributivity_violation(ideals, t),
                      k::parallel::distributivity_violation(ideals, t));
        }
    }
}

TEST(Kernels, DistributivityWitnessOnM3Shape) {
    // Closure on {a,b,c}: any two generate everything. Ideals {}, {a}, {b},
    // {c}, {a,b,c} form M3.
    std::vector<Mask> t(8);
    for (Mask x = 0; x < 8; ++x) t[x] = std::popcount(x) >= 2 ? 7 : x;
    auto ideals = k::serial::fixed_points(t);
    auto w = k::parallel::distributivity_violation(ideals, t);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w, k::serial::distributivity_violation(ideals, t));
}

TEST(Kernels, UnionTableAgrees) {
    std::mt19937_64 rng(5);
    for (std::size_t m = 0; m <= 14; ++m) {
        std::vector<Mask> sets(m);
        for (auto& s : sets) s = static_cast<Mask>(rng() & 0xffff);
        ASSERT_EQ(k::serial::union_table(sets), k::parallel::union_table(sets)) << m;
    }
    std::vector<Mask> sets{1, 2, 4};
    auto u = k::serial::union_table(sets);
    EXPECT_EQ(u[5], 5u);
    EXPECT_EQ(u[0], 0u);
}
