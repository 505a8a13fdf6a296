#pragma once

// c-posets: a finite poset together with a closure operator given as an
// enumeration-operator code. Subsets of the carrier are position masks.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stonewb/bits.hpp"
#include "stonewb/encoding.hpp"
#include "stonewb/kernels.hpp"
#include "stonewb/poset.hpp"

namespace stonewb {

/// Total map between carriers, by position: image of position i is map[i].
using PositionMap = std::vector<std::size_t>;

class CPoset {
  public:
    CPoset() = default;

    /// Every pair of `code` must decode to <x,k> with x in the carrier and
    /// D_k a subset of it; otherwise InputError names the offending code.
    static CPoset make(FinitePoset poset, EnumOperatorCode code);

    const FinitePoset& poset() const { return poset_; }
    const EnumOperatorCode& code() const { return code_; }
    std::size_t size() const { return poset_.size(); }
    Mask all() const { return poset_.all(); }

    /// Gamma_A restricted to the carrier.
    Mask closure(Mask x) const { return (*table_)[x]; }
    std::span<const Mask> closure_table() const { return *table_; }
    std::shared_ptr<const std::vector<Mask>> shared_table() const { return table_; }
    std::span<const kernels::CompiledEntry> compiled() const { return compiled_; }

    Mask to_mask(const FinSet& labels) const;
    FinSet to_labels(Mask m) const;

  private:
    FinitePoset poset_;
    EnumOperatorCode code_;
    std::vector<kernels::CompiledEntry> compiled_;
    std::shared_ptr<const std::vector<Mask>> table_ = std::make_shared<const std::vector<Mask>>(1, 0);
};

/// Least code for a closure table over the carrier of `poset`: <x, X> for
/// nonempty X with x in phi(X) but in no phi(X minus y), y in X.
EnumOperatorCode operator_from_closure(const FinitePoset& poset, std::span<const Mask> table);

/// Poset axioms plus the closure axioms, each checked on every subset.
ValidationReport validate_cposet(const CPoset& p);

/// Closure of a label set; InputError for labels outside the carrier.
FinSet closure(const CPoset& p, const FinSet& x);

/// All phi-closed subsets in ascending mask order.
class IdealLattice {
  public:
    IdealLattice(std::vector<Mask> ideals, std::shared_ptr<const std::vector<Mask>> table)
        : ideals_(std::move(ideals)), table_(std::move(table)) {}

    const std::vector<Mask>& ideals() const { return ideals_; }
    std::size_t size() const { return ideals_.size(); }
    Mask meet(Mask a, Mask b) const { return a & b; }
    Mask join(Mask a, Mask b) const { return (*table_)[a | b]; }
    bool contains(Mask m) const;

  private:
    std::vector<Mask> ideals_;
    std::shared_ptr<const std::vector<Mask>> table_;
};

IdealLattice enumerate_ideals(const CPoset& p);

/// The three primality criteria, evaluated independently.
struct PrimeReport {
    bool proper = false;
    bool complement_is_filter = false;
    bool meet_prime = false;         // intersection-prime in the ideal lattice
    bool lower_bound_condition = false;  // L(a0,a1) in I forces a0 or a1 in I
    bool prime = false;
    std::string witness;  // why a criterion fails
};

/// PreconditionError when `ideal` is not phi-closed; ConsistencyFault when
/// the three criteria disagree on a proper ideal.
PrimeReport is_prime(const CPoset& p, Mask ideal);
PrimeReport is_prime(const CPoset& p, const IdealLattice& lattice, Mask ideal);

/// Primes in ascending mask order, selected by the lower-bound criterion.
std::vector<Mask> enumerate_primes(const CPoset& p);

struct DistributivityReport {
    bool distributive = true;
    std::optional<kernels::Triple> witness;  // masks of x, y, z
};

DistributivityReport check_distributive(const CPoset& p);
bool is_distributive(const CPoset& p);

/// Smallest prime Q (by mask) with ideal within Q and Q disjoint from
/// `filter`. PreconditionError on malformed input or when no prime exists.
Mask prime_separation(const CPoset& p, Mask ideal, Mask filter);

struct MorphismReport {
    bool pass = true;
    std::string failure;  // first failed property with witness
};

/// Surjective, order preserving and reflecting, commuting with closures.
MorphismReport check_dp_isomorphism(const CPoset& p0, const CPoset& p1, const PositionMap& g);

/// Preimage of every prime of p1 is prime in p0.
MorphismReport check_strict(const CPoset& p0, const CPoset& p1, const PositionMap& f);

/// Image and preimage of position masks under a position map.
Mask image(const PositionMap& f, Mask x);
Mask preimage(const PositionMap& f, Mask y);

/// InputError unless every image is below `target_size`.
void require_total(const PositionMap& f, std::size_t source_size, std::size_t target_size);

}  // namespace stonewb
