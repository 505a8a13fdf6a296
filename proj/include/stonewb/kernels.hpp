#pragma once

// Exhaustive inner loops over all subsets of a small universe. Every kernel
// has a serial reference (the direct definition, kept for tests and
// benchmarks) and an OpenMP version used by the library. Both return
// identical, deterministically ordered results.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "stonewb/bits.hpp"

namespace stonewb::kernels {

/// <x,k> with x and D_k translated to positions: x is emitted from any
/// subset containing `need`.
struct CompiledEntry {
    std::size_t target;
    Mask need;
};

/// First failing subset (in ascending mask order) for each closure axiom.
struct ClosureAxiomScan {
    std::optional<Mask> not_extensive;
    std::optional<Mask> not_monotone;    // some X minus one element maps outside phi(X)
    std::optional<Mask> not_idempotent;

    friend bool operator==(const ClosureAxiomScan&, const ClosureAxiomScan&) = default;
};

using Triple = std::array<std::size_t, 3>;

namespace serial {

/// table[X] = Gamma(X) for every X below 2^n, entry by entry.
std::vector<Mask> closure_table(std::size_t n, std::span<const CompiledEntry> entries);

/// Ascending list of X with table[X] == X.
std::vector<Mask> fixed_points(std::span<const Mask> table);

ClosureAxiomScan closure_axioms(std::size_t n, std::span<const Mask> table);

/// First (x,y,z) of ideal indices, lexicographically, with
/// x & join(y,z) != join(x & y, x & z), join(a,b) = table[a | b].
std::optional<Triple> distributivity_violation(std::span<const Mask> ideals,
                                               std::span<const Mask> table);

/// u[k] = union of sets[j] over j in D_k, for every k below 2^sets.size().
std::vector<Mask> union_table(std::span<const Mask> sets);

}  // namespace serial

namespace parallel {

/// OR-zeta transform over the subset lattice.
std::vector<Mask> closure_table(std::size_t n, std::span<const CompiledEntry> entries);
std::vector<Mask> fixed_points(std::span<const Mask> table);
ClosureAxiomScan closure_axioms(std::size_t n, std::span<const Mask> table);
std::optional<Triple> distributivity_violation(std::span<const Mask> ideals,
                                               std::span<const Mask> table);
/// Layered by highest bit.
std::vector<Mask> union_table(std::span<const Mask> sets);

}  // namespace parallel

}  // namespace stonewb::kernels
