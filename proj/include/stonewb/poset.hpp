#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stonewb/bits.hpp"

namespace stonewb {

/// Outcome of one named axiom check.
struct Check {
    std::string name;
    bool pass = true;
    std::string witness;  // first counterexample, empty when passing
};

/// A list of checks; passes when every entry does.
struct ValidationReport {
    std::vector<Check> checks;

    bool pass() const;
    const Check* find(const std::string& name) const;
    void add(std::string name, bool pass, std::string witness = {});
};

/// Finite relation on a carrier of natural labels. Elements are addressed by
/// position in the ascending label order; `below(i)` holds every j with j <= i.
class FinitePoset {
  public:
    FinitePoset() = default;

    /// `leq` pairs are label pairs (a, b) meaning a <= b; the reflexive
    /// closure is taken, nothing else. Throws InputError on unknown labels or
    /// duplicate carrier entries, SizeError above the exhaustive ceiling.
    static FinitePoset from_pairs(std::vector<Natural> carrier,
                                  const std::vector<std::pair<Natural, Natural>>& leq);

    /// Same, with positions and a ready-made down-set table.
    static FinitePoset from_below(std::vector<Natural> labels, std::vector<Mask> below);

    std::size_t size() const { return labels_.size(); }
    const std::vector<Natural>& labels() const { return labels_; }
    Natural label(std::size_t i) const { return labels_[i]; }
    std::optional<std::size_t> position(Natural label) const;

    bool leq(std::size_t a, std::size_t b) const { return contains(below_[b], a); }
    Mask below(std::size_t i) const { return below_[i]; }
    Mask above(std::size_t i) const;
    const std::vector<Mask>& below_table() const { return below_; }
    Mask all() const { return full_mask(size()); }

    /// Down-set generated by X.
    Mask down_closure(Mask x) const;
    /// Up-set generated by X.
    Mask up_closure(Mask x) const;
    bool is_down_set(Mask x) const { return down_closure(x) == x; }
    bool is_up_set(Mask x) const { return up_closure(x) == x; }

    /// Common lower bounds L(X) and upper bounds U(X); both are the whole
    /// carrier for X empty.
    Mask lower_bounds(Mask x) const;
    Mask upper_bounds(Mask x) const;

    /// Any two members share a lower (upper) bound inside X. The empty set
    /// is not directed.
    bool down_directed(Mask x) const;
    bool up_directed(Mask x) const;

    /// Greatest lower bound / least upper bound of a and b when it exists.
    std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
    std::optional<std::size_t> join(std::size_t a, std::size_t b) const;

    /// Label pairs (a,b), a <= b, a != b, ascending.
    std::vector<std::pair<Natural, Natural>> strict_pairs() const;
    /// Covering pairs of the Hasse diagram, as positions.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

    std::string describe(Mask x) const;

    friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

  private:
    std::vector<Natural> labels_;
    std::vector<Mask> below_;
};

/// Reflexivity, antisymmetry and transitivity.
ValidationReport validate_poset(const FinitePoset& p);

}  // namespace stonewb
