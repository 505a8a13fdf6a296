#pragma once

// Instance generation for the property suites: exhaustive streams deduped
// by canonical form, and seeded random streams.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stonewb/cposet.hpp"
#include "stonewb/lattices.hpp"
#include "stonewb/space.hpp"

namespace stonewb {

template <class T>
struct InstanceStream {
    std::string kind;
    std::size_t size_bound = 0;
    std::optional<std::uint64_t> seed;
    std::vector<T> items;
    std::vector<std::string> digests;  // canonical form per item

    std::size_t size() const { return items.size(); }
};

/// mt19937_64 with a bounded draw that does not depend on the standard
/// library's distributions, so streams agree across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    bool coin() { return below(2) == 1; }

  private:
    std::mt19937_64 engine_;
};

/// Lexicographically least relation matrix over all carrier permutations,
/// as a hex string prefixed by the size.
std::string canonical_digest(const FinitePoset& p);

enum class PosetMode { labeled, canonical };

/// Exhaustive, n <= 6: every labeled partial order on {0..n-1}, or one per
/// isomorphism class.
InstanceStream<FinitePoset> gen_posets(std::size_t n, PosetMode mode = PosetMode::canonical);
/// `count` random posets on {0..n-1}.
InstanceStream<FinitePoset> gen_posets_random(std::size_t n, std::size_t count, std::uint64_t seed);

/// Exhaustive, n <= 5: every distributive c-poset on {0..n-1}, one per
/// isomorphism class (poset classes times closure families up to
/// automorphism).
InstanceStream<CPoset> gen_distributive_cposets(std::size_t n);
/// All c-posets, distributive or not, same dedup.
InstanceStream<CPoset> gen_cposets(std::size_t n);
/// `count` random distributive c-posets with carriers of 1..max_n elements.
InstanceStream<CPoset> gen_distributive_cposets_random(std::size_t max_n, std::size_t count, std::uint64_t seed);

/// Exhaustive, n_points <= 5 and n_base <= 6: spaces on {0..n_points-1}
/// with exactly n_base distinct base sets (ascending), one per class under
/// point permutations. valid_only drops spaces failing validate_space.
InstanceStream<SpaceWithBase> gen_spaces(std::size_t n_points, std::size_t n_base, bool valid_only = true);
/// Every valid space with at most max_points points and max_base base sets.
InstanceStream<SpaceWithBase> gen_spaces_upto(std::size_t max_points, std::size_t max_base);

/// Lattices with n elements (one per class).
InstanceStream<Lattice> gen_lattices(std::size_t n);

/// A map together with its endpoints, which index into a corpus.
struct MapInstance {
    std::size_t source;
    std::size_t target;
    PositionMap map;
};

/// Every total map between members of `corpus` passing check_strict.
std::vector<MapInstance> gen_strict_maps(const std::vector<CPoset>& corpus);
/// Every total map between members of `corpus` passing check_spectral.
std::vector<MapInstance> gen_spectral_maps(const std::vector<SpaceWithBase>& corpus);

/// All total maps from n points to m points, in lexicographic order.
std::vector<PositionMap> all_maps(std::size_t n, std::size_t m);

}  // namespace stonewb
