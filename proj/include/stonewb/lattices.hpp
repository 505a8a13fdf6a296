#pragma once

// Semilattices and lattices given by operation tables, the join-ideal
// closure psi, and the meet / join witnesses on a base.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stonewb/cposet.hpp"
#include "stonewb/poset.hpp"
#include "stonewb/space.hpp"

namespace stonewb {

enum class SemilatticeKind { meet, join };

std::string to_string(SemilatticeKind kind);

/// Square operation table over positions of the sorted labels.
class OpTable {
  public:
    OpTable() = default;
    OpTable(std::size_t n, std::vector<std::size_t> cells);

    std::size_t size() const { return n_; }
    std::size_t operator()(std::size_t a, std::size_t b) const { return cells_[a * n_ + b]; }
    const std::vector<std::size_t>& cells() const { return cells_; }

    friend bool operator==(const OpTable&, const OpTable&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<std::size_t> cells_;
};

struct Semilattice {
    SemilatticeKind kind = SemilatticeKind::join;
    std::vector<Natural> labels;  // ascending
    OpTable op;

    /// a <= b iff a^b = a (meet) or avb = b (join).
    FinitePoset order() const;
};

struct Lattice {
    std::vector<Natural> labels;
    OpTable meet;
    OpTable join;

    Semilattice meet_reduct() const { return {SemilatticeKind::meet, labels, meet}; }
    Semilattice join_reduct() const { return {SemilatticeKind::join, labels, join}; }
    FinitePoset order() const { return meet_reduct().order(); }
};

/// Table entries in range, idempotent, commutative, associative; the
/// derived order is checked against `supplied` when given.
ValidationReport validate_semilattice(const Semilattice& s, const FinitePoset* supplied = nullptr);
/// Both reducts, absorption, and agreement of the two derived orders.
ValidationReport validate_lattice(const Lattice& l, const FinitePoset* supplied = nullptr);

/// psi(X) = { s : s <= a0 v ... v an, ai in X }. PreconditionError for an
/// invalid join table.
Mask join_ideal_closure(const Semilattice& s, Mask x);

/// Join kind: closure psi. Meet kind: down-set closure.
CPoset cposet_from_semilattice(const Semilattice& s);
/// The lattice as a c-poset with psi.
CPoset cposet_from_lattice(const Lattice& l);

struct SemilatticeWitness {
    SemilatticeKind kind = SemilatticeKind::meet;
    OpTable table;  // over base indices
};

struct WitnessSearch {
    std::optional<SemilatticeWitness> witness;
    std::optional<std::pair<std::size_t, std::size_t>> offending;  // first pair without a match
};

/// Scan i, j ascending; first base index k with beta(k) = beta(i) op beta(j).
WitnessSearch find_meet_witness(const SpaceWithBase& s);
WitnessSearch find_join_witness(const SpaceWithBase& s);

/// Builds the spectrum of the c-poset and checks that the operation
/// table(s) transport to witnesses on its base.
ValidationReport check_semilattice_duality(const Semilattice& s);
ValidationReport check_semilattice_duality(const Lattice& l);

/// Meet and join tables of a poset that is a lattice; nullopt otherwise.
std::optional<Lattice> lattice_from_order(const FinitePoset& p);

/// The five-element modular lattice M3 (0 < a, b, c < 1) and the 2x2 grid.
Lattice lattice_m3();
Lattice lattice_grid2();
/// Chain 0 < 1 < ... < n-1.
Lattice lattice_chain(std::size_t n);

}  // namespace stonewb
