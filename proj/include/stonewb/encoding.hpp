#pragma once

// Numeric codings: Cantor pairing, the canonical numbering D_k of finite
// sets, and generalized enumeration operators.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "json.hpp"
#include "stonewb/bits.hpp"

namespace stonewb {

/// <x,y> = (x+y)(x+y+1)/2 + x. Throws OverflowError instead of wrapping.
Natural pair(Natural x, Natural y);

/// Inverse of pair(); total on the whole 64-bit range.
std::pair<Natural, Natural> unpair(Natural n);

/// Finite set of naturals kept sorted and duplicate free.
class FinSet {
  public:
    FinSet() = default;
    FinSet(std::initializer_list<Natural> xs);
    explicit FinSet(std::vector<Natural> xs);

    const std::vector<Natural>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool contains(Natural x) const;
    bool subset_of(const FinSet& other) const;

    friend bool operator==(const FinSet&, const FinSet&) = default;
    friend auto operator<=>(const FinSet&, const FinSet&) = default;

  private:
    std::vector<Natural> elems_;
};

/// D_k: the exponents of the binary expansion of k. D_0 is empty.
FinSet set_decode(Natural k);

/// Inverse of set_decode. Elements >= 64 do not fit a 64-bit code and raise
/// OverflowError.
Natural set_encode(const FinSet& s);

/// One decoded element <x,k> of an operator code.
struct OperatorEntry {
    Natural x;
    Natural k;

    friend bool operator==(const OperatorEntry&, const OperatorEntry&) = default;
};

/// Finite set A of pair codes defining Gamma_A.
class EnumOperatorCode {
  public:
    EnumOperatorCode() = default;
    static EnumOperatorCode from_codes(std::vector<Natural> codes);
    static EnumOperatorCode from_entries(const std::vector<OperatorEntry>& entries);

    const std::vector<Natural>& codes() const { return codes_; }
    std::vector<OperatorEntry> entries() const;
    std::size_t size() const { return codes_.size(); }
    bool empty() const { return codes_.empty(); }

    friend bool operator==(const EnumOperatorCode&, const EnumOperatorCode&) = default;

  private:
    std::vector<Natural> codes_;  // ascending, unique
};

/// Gamma_A(B) = { x | exists k: <x,k> in A and D_k subset of B }, ascending.
FinSet enum_apply(const EnumOperatorCode& a, const FinSet& b);

/// Serialization forms of an operator code.
enum class OperatorForm { pair_codes, objects };

nlohmann::json operator_to_json(const EnumOperatorCode& a, OperatorForm form);

/// Accepts an array whose members are pair codes or {"x":..,"set":[..]}
/// objects (the two may be mixed). Throws InputError.
EnumOperatorCode operator_from_json(const nlohmann::json& j);

}  // namespace stonewb
