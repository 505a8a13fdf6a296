#pragma once

// Finite T0 spaces presented by an indexed base beta: index -> subset of
// points. beta need not be injective.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "stonewb/bits.hpp"
#include "stonewb/cposet.hpp"
#include "stonewb/poset.hpp"

namespace stonewb {

/// Reading of "[almost] sober". `standard` quantifies over irreducible
/// closed sets; `strict_literal` over every (proper) nonempty closed set.
enum class SoberMode { standard, strict_literal };

std::string to_string(SoberMode mode);
SoberMode sober_mode_from_string(const std::string& s);

class SpaceWithBase {
  public:
    SpaceWithBase() = default;

    /// `points` are labels (any order, no duplicates); beta[i] is a mask
    /// over positions of the sorted labels. InputError / SizeError.
    static SpaceWithBase make(std::vector<Natural> points, std::vector<Mask> beta);

    /// Base given as label lists; beta_ids maps index -> list id (identity
    /// when empty). Dangling ids or unknown points raise InputError.
    static SpaceWithBase from_lists(std::vector<Natural> points,
                                    const std::vector<std::vector<Natural>>& base_sets,
                                    const std::vector<std::size_t>& beta_ids = {});

    std::size_t point_count() const { return points_.size(); }
    std::size_t base_count() const { return beta_.size(); }
    const std::vector<Natural>& points() const { return points_; }
    Natural point(std::size_t i) const { return points_[i]; }
    Mask beta(std::size_t i) const { return beta_[i]; }
    const std::vector<Mask>& betas() const { return beta_; }
    Mask all() const { return full_mask(points_.size()); }

    bool injective() const;
    bool in_base(Mask u) const;
    /// Distinct base sets, ascending.
    std::vector<Mask> distinct_base() const;
    /// All unions of base sets together with the empty set and the whole
    /// space, ascending.
    std::vector<Mask> opens() const;
    /// Topological closure of a point set.
    Mask closure_of(Mask x) const;

    std::string describe(Mask x) const;

    friend bool operator==(const SpaceWithBase&, const SpaceWithBase&) = default;

  private:
    std::vector<Natural> points_;
    std::vector<Mask> beta_;
};

/// T0, basis axioms and the two base biconditionals (empty set / whole
/// space in the base).
ValidationReport validate_space(const SpaceWithBase& s, SoberMode mode = SoberMode::standard);

/// y <= x iff y lies in the closure of {x}; so the down-set of x is cl{x}.
FinitePoset specialization_order(const SpaceWithBase& s);

struct SobrietyReport {
    bool standard = true;
    bool strict_literal = true;
    std::string standard_witness;
    std::string literal_witness;

    bool in(SoberMode mode) const { return mode == SoberMode::standard ? standard : strict_literal; }
};

/// Proper nonempty closed sets only.
SobrietyReport almost_sober_report(const SpaceWithBase& s);
bool is_almost_sober(const SpaceWithBase& s, SoberMode mode = SoberMode::standard);
/// Every closed nonempty set, the whole space included.
SobrietyReport sober_report(const SpaceWithBase& s);

struct Classification {
    SoberMode mode = SoberMode::standard;
    bool valid = false;
    bool has_empty = false;
    bool has_whole = false;
    bool up_directed = false;
    bool down_directed = false;
    bool zero_base = false;
    bool one_base = false;
    bool multiplicative = false;
    bool additive = false;
    bool almost_sober = false;
    bool compact = true;
    bool compact_open_base = true;
    std::vector<std::string> cells;
};

Classification classify(const SpaceWithBase& s, SoberMode mode = SoberMode::standard);

/// { (i,k) : D_k nonempty, beta(i) within the union of beta over D_k }.
struct IncPredicate {
    std::size_t index_count = 0;
    std::vector<std::pair<std::size_t, Natural>> entries;  // ascending
    Natural skipped_from = 0;   // codes >= skipped_from name missing indices
    Natural skipped_count = 0;

    bool contains(std::size_t i, Natural k) const;
    friend bool operator==(const IncPredicate& a, const IncPredicate& b) {
        return a.index_count == b.index_count && a.entries == b.entries;
    }
};

/// 2^m - 1: every subset of m indices.
Natural full_maxk(std::size_t index_count);

IncPredicate inc_from_space(const SpaceWithBase& s, Natural maxk);
inline IncPredicate inc_from_space(const SpaceWithBase& s) { return inc_from_space(s, full_maxk(s.base_count())); }

/// Every base set of s1 pulls back along f to a base set of s0.
MorphismReport check_spectral(const PositionMap& f, const SpaceWithBase& s0, const SpaceWithBase& s1);

}  // namespace stonewb
