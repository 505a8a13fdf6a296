#pragma once

// Normal forms of presentations: relabeled carriers, injective bases, the
// down-set operator of a plain poset, and a report of materialized data.

#include <utility>
#include <vector>

#include "json.hpp"
#include "stonewb/cposet.hpp"
#include "stonewb/space.hpp"
#include "stonewb/spectrum.hpp"

namespace stonewb {

struct Relabeled {
    CPoset cposet;
    PositionMap to_source;  // position in the result -> position in the source
    MorphismReport verified;
};

/// new_labels[i] is the new label of source position i; they must be
/// distinct, and the relabeled pair codes must fit 64 bits (labels below
/// 32 always do; OverflowError otherwise). The code becomes
///   B = { <g(x), k'> : <x,k> in A, D_k' = g(D_k) }.
Relabeled relabel_cposet(const CPoset& p, const std::vector<Natural>& new_labels);

/// Onto 0..n-1, in source order.
Relabeled relabel_canonical(const CPoset& p);

struct Injectivized {
    SpaceWithBase space;
    std::vector<std::size_t> kept;  // u: first occurrences, ascending
};

Injectivized injectivize_base(const SpaceWithBase& s);

/// A = { <a, code({b})> : a <= b }, so phi(X) is the down-set of X.
CPoset poset_to_cposet(const FinitePoset& s);

nlohmann::json presentation_report(const CPoset& p);
nlohmann::json presentation_report(const SpaceWithBase& s);
/// Spectrum of p, with Inc traced back to the operator code of p.
nlohmann::json spectrum_presentation_report(const CPoset& p);

}  // namespace stonewb
