#pragma once

// The prime-ideal spectrum of a distributive c-poset, with the V_a / V_X
// identities as exhaustive checks, and the two translations between an
// operator code and the Inc predicate of the spectrum.

#include <string>
#include <vector>

#include "stonewb/cposet.hpp"
#include "stonewb/encoding.hpp"
#include "stonewb/space.hpp"

namespace stonewb {

/// Points are the primes of the source (labelled 0..p-1 in ascending mask
/// order); base index a is carrier position a, with beta(a) = V_a.
struct SpectrumSpace {
    SpaceWithBase underlying;
    std::vector<Mask> primes;           // over carrier positions
    std::vector<Natural> source_labels;  // carrier of the source c-poset
    bool basis_verified = false;
};

/// PreconditionError for a non-distributive source.
SpectrumSpace spectrum(const CPoset& p);

/// V_X = { I : X not within I }, as a mask over the primes.
Mask v_of_set(const SpectrumSpace& s, Mask x);
Mask v_of_set(const CPoset& p, Mask x);

struct LphiPart {
    std::string name;
    bool pass = true;
    bool applicable = true;
    std::size_t cases = 0;
    std::string counterexample;
};

struct LphiReport {
    std::vector<LphiPart> parts;  // (i) .. (v)
    bool join_hypothesis = true;  // a v b in phi(a,b) whenever a v b exists
    bool empty_boundary_fails = false;  // (ii) read at X = empty fails: some V_a is empty
    bool pass() const;
};

/// Exhaustive check of the five V_a identities on a distributive c-poset.
LphiReport check_lphi(const CPoset& p);

/// Inc of the spectrum read off the operator code alone: (i,k) with
/// <i,k'> in the code for some nonempty D_k' within D_k. Indices are
/// carrier positions; k ranges over 1..maxk with D_k over valid indices.
IncPredicate inc_from_operator(const EnumOperatorCode& code, const std::vector<Natural>& carrier, Natural maxk);
IncPredicate inc_from_operator(const CPoset& p, Natural maxk);

/// A = { <j,k> : (j,k) in Inc }.
EnumOperatorCode operator_from_inc(const IncPredicate& inc);

}  // namespace stonewb
