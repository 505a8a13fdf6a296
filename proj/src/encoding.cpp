#include "stonewb/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "stonewb/error.hpp"

namespace stonewb {

namespace {

using Wide = unsigned __int128;

constexpr Wide kNaturalMax = std::numeric_limits<Natural>::max();

Wide triangle(Wide w) { return w * (w + 1) / 2; }

}  // namespace

Natural pair(Natural x, Natural y) {
    const Wide s = Wide{x} + Wide{y};
    const Wide code = triangle(s) + x;
    if (code > kNaturalMax) {
        throw OverflowError("pair(" + std::to_string(x) + ", " + std::to_string(y) +
                            ") exceeds 64 bits");
    }
    return static_cast<Natural>(code);
}

std::pair<Natural, Natural> unpair(Natural n) {
    // w = floor((sqrt(8n+1)-1)/2), corrected after the floating estimate
    auto w = static_cast<Wide>((std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
    while (w > 0 && triangle(w) > n) --w;
    while (triangle(w + 1) <= n) ++w;
    const auto x = static_cast<Natural>(Wide{n} - triangle(w));
    const auto y = static_cast<Natural>(w - x);
    return {x, y};
}

FinSet::FinSet(std::initializer_list<Natural> xs) : FinSet(std::vector<Natural>(xs)) {}

FinSet::FinSet(std::vector<Natural> xs) : elems_(std::move(xs)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FinSet::contains(Natural x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool FinSet::subset_of(const FinSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

FinSet set_decode(Natural k) {
    std::vector<Natural> out;
    for (Natural x = 0; k != 0; ++x, k >>= 1) {
        if (k & 1U) out.push_back(x);
    }
    return FinSet(std::move(out));
}

Natural set_encode(const FinSet& s) {
    Natural k = 0;
    for (Natural x : s) {
        if (x >= 64) {
            throw OverflowError("set code of a set containing " + std::to_string(x) +
                                " exceeds 64 bits");
        }
        k |= Natural{1} << x;
    }
    return k;
}

EnumOperatorCode EnumOperatorCode::from_codes(std::vector<Natural> codes) {
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    EnumOperatorCode a;
    a.codes_ = std::move(codes);
    return a;
}

EnumOperatorCode EnumOperatorCode::from_entries(const std::vector<OperatorEntry>& entries) {
    std::vector<Natural> codes;
    codes.reserve(entries.size());
    for (const auto& e : entries) codes.push_back(pair(e.x, e.k));
    return from_codes(std::move(codes));
}

std::vector<OperatorEntry> EnumOperatorCode::entries() const {
    std::vector<OperatorEntry> out;
    out.reserve(codes_.size());
    for (Natural c : codes_) {
        auto [x, k] = unpair(c);
        out.push_back({x, k});
    }
    return out;
}

FinSet enum_apply(const EnumOperatorCode& a, const FinSet& b) {
    // D_k only reaches elements < 64, so B is folded into one word
    Natural bmask = 0;
    for (Natural x : b) {
        if (x < 64) bmask |= Natural{1} << x;
    }
    std::vector<Natural> out;
    for (Natural c : a.codes()) {
        auto [x, k] = unpair(c);
        if ((k & ~bmask) == 0) out.push_back(x);
    }
    return FinSet(std::move(out));
}

nlohmann::json operator_to_json(const EnumOperatorCode& a, OperatorForm form) {
    auto out = nlohmann::json::array();
    for (Natural c : a.codes()) {
        if (form == OperatorForm::pair_codes) {
            out.push_back(c);
        } else {
            auto [x, k] = unpair(c);
            out.push_back({{"x", x}, {"set", set_decode(k).elements()}});
        }
    }
    return out;
}

namespace {

Natural json_natural(const nlohmann::json& v, const std::string& where) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw InputError(where + ": expected a natural number, got " + v.dump());
    }
    return v.get<Natural>();
}

}  // namespace

EnumOperatorCode operator_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InputError("operator: expected an array");
    std::vector<Natural> codes;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& item = j[i];
        const std::string where = "operator[" + std::to_string(i) + "]";
        if (item.is_object()) {
            if (!item.contains("x") || !item.contains("set") || !item["set"].is_array()) {
                throw InputError(where + ": object form needs \"x\" and \"set\"");
            }
            std::vector<Natural> elems;
            for (const auto& e : item["set"]) elems.push_back(json_natural(e, where + ".set"));
            try {
                codes.push_back(pair(json_natural(item["x"], where + ".x"), set_encode(FinSet(elems))));
            } catch (const OverflowError& err) {
                throw InputError(where + ": " + err.what());
            }
        } else {
            codes.push_back(json_natural(item, where));
        }
    }
    return EnumOperatorCode::from_codes(std::move(codes));
}

}  // namespace stonewb
