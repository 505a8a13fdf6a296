#pragma once

// The functors P (spaces to c-posets) and T (c-posets to spectra) on objects
// and maps, the unit and counit of the duality, and the morphism checks.

#include <string>
#include <vector>

#include "stonewb/cposet.hpp"
#include "stonewb/space.hpp"
#include "stonewb/spectrum.hpp"

namespace stonewb {

/// Spectral map between spaces with base carrying its index witness:
/// pointmap^{-1}(C_i) = B_{h[i]}, C the base of the target and B of the source.
struct EffectiveSpectralMap {
    PositionMap pointmap;
    PositionMap h;
};

/// Carrier = base indices, order = inclusion of base sets, operator read
/// off Inc. PreconditionError for a non-injective base.
CPoset functor_P_obj(const SpaceWithBase& s);

/// The underlying space of the spectrum.
SpaceWithBase functor_T_obj(const CPoset& p);

/// Index map of P(f): base(s1) -> base(s0), U -> f^{-1}(U). PreconditionError
/// when some pullback is not a base set.
PositionMap functor_P_mor(const PositionMap& f, const SpaceWithBase& s0, const SpaceWithBase& s1);

/// T(f): Spec p1 -> Spec p0, I -> f^{-1}(I), with h = f. PreconditionError
/// for a non-strict f.
EffectiveSpectralMap functor_T_mor(const PositionMap& f, const CPoset& p0, const CPoset& p1);

/// pointmap^{-1}(beta1(i)) = beta0(h[i]) for every base index i of s1.
MorphismReport check_effective_spectral(const EffectiveSpectralMap& m, const SpaceWithBase& s0,
                                        const SpaceWithBase& s1);

struct UnitReport {
    bool pass = true;
    std::string failure;
    SpaceWithBase spectrum;        // T(P(s))
    EffectiveSpectralMap forward;  // s -> T(P(s))
    EffectiveSpectralMap inverse;  // T(P(s)) -> s
};

/// f_X(x) = { V in B : x not in V }, checked to be a bijection onto the
/// primes of P(s) with f_X^{-1}(V_A) = A for every base index A.
UnitReport unit_map(const SpaceWithBase& s, SoberMode mode = SoberMode::standard);

struct CounitReport {
    PositionMap xi;  // base index of V_a -> a
    MorphismReport report;
};

/// xi: P(T(p)) -> p, checked as a DP-isomorphism.
CounitReport counit_map(const CPoset& p);

/// Lemma-level checks on single maps and composable pairs.
ValidationReport morphism_duality_check(const PositionMap& f, const SpaceWithBase& s0, const SpaceWithBase& s1);
ValidationReport morphism_duality_check(const PositionMap& f, const CPoset& p0, const CPoset& p1);

/// P(g o f) = P(f) o P(g) for f: s0 -> s1, g: s1 -> s2.
ValidationReport check_contravariance(const PositionMap& f, const PositionMap& g, const SpaceWithBase& s0,
                                      const SpaceWithBase& s1, const SpaceWithBase& s2);
/// T(g o f) = T(f) o T(g) for f: p0 -> p1, g: p1 -> p2.
ValidationReport check_contravariance(const PositionMap& f, const PositionMap& g, const CPoset& p0,
                                      const CPoset& p1, const CPoset& p2);

/// (g o f)[i] = g[f[i]].
PositionMap compose(const PositionMap& g, const PositionMap& f);
PositionMap identity_map(std::size_t n);

struct LdsReport {
    bool isomorphism = false;  // xi is a DP-isomorphism p0 -> p1
    bool target_downset = false;
    bool conclusion = false;   // phi0 = down-closure on p0
    std::string failure;
    bool pass() const { return isomorphism && target_downset && conclusion; }
};

/// True when phi(X) is the down-set of X for every X.
bool is_downset_cposet(const CPoset& p, Mask* witness = nullptr);
LdsReport check_lds(const CPoset& p0, const CPoset& p1, const PositionMap& xi);

}  // namespace stonewb
