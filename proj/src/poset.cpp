#include "stonewb/poset.hpp"

#include <algorithm>
#include <sstream>

#include "stonewb/error.hpp"

namespace stonewb {

bool ValidationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

void ValidationReport::add(std::string name, bool pass, std::string witness) {
    checks.push_back({std::move(name), pass, std::move(witness)});
}

namespace {

void check_carrier(const std::vector<Natural>& labels, const char* what) {
    for (std::size_t i = 1; i < labels.size(); ++i) {
        if (labels[i] == labels[i - 1]) {
            throw InputError(std::string(what) + ": duplicate element " + std::to_string(labels[i]));
        }
    }
    require_exhaustive(labels.size(), what);
}

}  // namespace

FinitePoset FinitePoset::from_pairs(std::vector<Natural> carrier,
                                    const std::vector<std::pair<Natural, Natural>>& leq) {
    std::sort(carrier.begin(), carrier.end());
    check_carrier(carrier, "carrier");
    FinitePoset p;
    p.labels_ = std::move(carrier);
    p.below_.assign(p.labels_.size(), 0);
    for (std::size_t i = 0; i < p.labels_.size(); ++i) p.below_[i] = bit(i);
    for (auto [a, b] : leq) {
        auto pa = p.position(a);
        auto pb = p.position(b);
        if (!pa || !pb) {
            throw InputError("leq pair [" + std::to_string(a) + ", " + std::to_string(b) +
                             "] references an element outside the carrier");
        }
        p.below_[*pb] |= bit(*pa);
    }
    return p;
}

FinitePoset FinitePoset::from_below(std::vector<Natural> labels, std::vector<Mask> below) {
    if (labels.size() != below.size()) throw InputError("poset: label and relation sizes differ");
    if (!std::is_sorted(labels.begin(), labels.end())) throw InputError("poset: labels must ascend");
    check_carrier(labels, "carrier");
    const Mask all = full_mask(labels.size());
    for (Mask m : below) {
        if (!subset_of(m, all)) throw InputError("poset: relation references a missing position");
    }
    FinitePoset p;
    p.labels_ = std::move(labels);
    p.below_ = std::move(below);
    return p;
}

std::optional<std::size_t> FinitePoset::position(Natural label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

Mask FinitePoset::above(std::size_t i) const {
    Mask m = 0;
    for (std::size_t j = 0; j < size(); ++j) {
        if (contains(below_[j], i)) m |= bit(j);
    }
    return m;
}

Mask FinitePoset::down_closure(Mask x) const {
    Mask m = 0;
    for (std::size_t i : members(x)) m |= below_[i];
    return m;
}

Mask FinitePoset::up_closure(Mask x) const {
    Mask m = 0;
    for (std::size_t i : members(x)) m |= above(i);
    return m;
}

Mask FinitePoset::lower_bounds(Mask x) const {
    Mask m = all();
    for (std::size_t i : members(x)) m &= below_[i];
    return m;
}

Mask FinitePoset::upper_bounds(Mask x) const {
    Mask m = all();
    for (std::size_t i : members(x)) m &= above(i);
    return m;
}

bool FinitePoset::down_directed(Mask x) const {
    if (x == 0) return false;
    for (std::size_t a : members(x)) {
        for (std::size_t b : members(x)) {
            if ((lower_bounds(bit(a) | bit(b)) & x) == 0) return false;
        }
    }
    return true;
}

bool FinitePoset::up_directed(Mask x) const {
    if (x == 0) return false;
    for (std::size_t a : members(x)) {
        for (std::size_t b : members(x)) {
            if ((upper_bounds(bit(a) | bit(b)) & x) == 0) return false;
        }
    }
    return true;
}

std::optional<std::size_t> FinitePoset::meet(std::size_t a, std::size_t b) const {
    const Mask lb = lower_bounds(bit(a) | bit(b));
    for (std::size_t c : members(lb)) {
        if (subset_of(lb, below_[c])) return c;
    }
    return std::nullopt;
}

std::optional<std::size_t> FinitePoset::join(std::size_t a, std::size_t b) const {
    const Mask ub = upper_bounds(bit(a) | bit(b));
    for (std::size_t c : members(ub)) {
        if (subset_of(ub, above(c))) return c;
    }
    return std::nullopt;
}

std::vector<std::pair<Natural, Natural>> FinitePoset::strict_pairs() const {
    std::vector<std::pair<Natural, Natural>> out;
    for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = 0; b < size(); ++b) {
            if (a != b && leq(a, b)) out.emplace_back(labels_[a], labels_[b]);
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = 0; b < size(); ++b) {
            if (a == b || !leq(a, b)) continue;
            bool cover = true;
            for (std::size_t c = 0; c < size() && cover; ++c) {
                if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
            }
            if (cover) out.emplace_back(a, b);
        }
    }
    return out;
}

std::string FinitePoset::describe(Mask x) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (std::size_t i : members(x)) {
        os << (first ? "" : ",") << labels_[i];
        first = false;
    }
    os << '}';
    return os.str();
}

ValidationReport validate_poset(const FinitePoset& p) {
    ValidationReport r;
    const std::size_t n = p.size();
    std::string refl, anti, trans;
    for (std::size_t a = 0; a < n && refl.empty(); ++a) {
        if (!p.leq(a, a)) refl = std::to_string(p.label(a));
    }
    for (std::size_t a = 0; a < n && anti.empty(); ++a) {
        for (std::size_t b = a + 1; b < n && anti.empty(); ++b) {
            if (p.leq(a, b) && p.leq(b, a)) {
                anti = std::to_string(p.label(a)) + " <= " + std::to_string(p.label(b)) + " <= " +
                       std::to_string(p.label(a));
            }
        }
    }
    for (std::size_t b = 0; b < n && trans.empty(); ++b) {
        // everything below something below b must be below b
        if (!subset_of(p.down_closure(p.below(b)), p.below(b))) {
            const Mask missing = p.down_closure(p.below(b)) & ~p.below(b);
            trans = p.describe(missing) + " not below " + std::to_string(p.label(b));
        }
    }
    r.add("reflexive", refl.empty(), refl);
    r.add("antisymmetric", anti.empty(), anti);
    r.add("transitive", trans.empty(), trans);
    return r;
}

}  // namespace stonewb
