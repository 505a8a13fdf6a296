#include "stonewb/presentations.hpp"

#include <algorithm>
#include <string>

#include "stonewb/error.hpp"

namespace stonewb {

namespace {

using nlohmann::json;

std::size_t bytes_of(const json& j) { return j.dump().size(); }

json relation_entry(const json& data, bool materialized = true) {
    return {{"materialized", materialized}, {"decidable", true}, {"size", data.size()}, {"bytes", bytes_of(data)}};
}

json leq_json(const FinitePoset& p) {
    json j = json::array();
    for (std::size_t b = 0; b < p.size(); ++b) {
        for (std::size_t a : members(p.below(b))) j.push_back({p.label(a), p.label(b)});
    }
    return j;
}

json inc_json(const IncPredicate& inc) {
    json j = json::array();
    for (auto [i, k] : inc.entries) j.push_back({i, k});
    return j;
}

json inequality_json(const SpaceWithBase& s) {
    json j = json::array();
    for (std::size_t i = 0; i < s.base_count(); ++i) {
        for (std::size_t k = 0; k < s.base_count(); ++k) {
            if (s.beta(i) != s.beta(k)) j.push_back({i, k});
        }
    }
    return j;
}

}  // namespace

Relabeled relabel_cposet(const CPoset& p, const std::vector<Natural>& new_labels) {
    const std::size_t n = p.size();
    if (new_labels.size() != n) {
        throw InputError("relabel: " + std::to_string(new_labels.size()) + " labels for a carrier of " +
                         std::to_string(n));
    }
    std::vector<Natural> sorted = new_labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("relabel: labels are not distinct");
    }
    if (!sorted.empty() && sorted.back() >= 64) throw InputError("relabel: labels must be below 64");

    const FinitePoset& src = p.poset();
    std::vector<std::pair<Natural, Natural>> leq;
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t a : members(src.below(b))) leq.emplace_back(new_labels[a], new_labels[b]);
    }
    std::vector<OperatorEntry> entries;
    for (const auto& e : p.code().entries()) {
        const auto x = src.position(e.x);
        if (!x) throw ConsistencyFault("relabel: operator entry outside the carrier");
        std::vector<Natural> image;
        for (Natural y : set_decode(e.k)) image.push_back(new_labels[*src.position(y)]);
        entries.push_back({new_labels[*x], set_encode(FinSet(std::move(image)))});
    }
    Relabeled r;
    r.cposet = CPoset::make(FinitePoset::from_pairs(new_labels, leq), EnumOperatorCode::from_entries(entries));
    r.to_source.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.to_source[*r.cposet.poset().position(new_labels[i])] = i;
    r.verified = check_dp_isomorphism(r.cposet, p, r.to_source);
    return r;
}

Relabeled relabel_canonical(const CPoset& p) {
    std::vector<Natural> labels(p.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
    return relabel_cposet(p, labels);
}

Injectivized injectivize_base(const SpaceWithBase& s) {
    Injectivized r;
    std::vector<Mask> beta;
    // left-to-right scan: keep i when no earlier index carries the same set
    for (std::size_t i = 0; i < s.base_count(); ++i) {
        if (std::find(beta.begin(), beta.end(), s.beta(i)) != beta.end()) continue;
        beta.push_back(s.beta(i));
        r.kept.push_back(i);
    }
    r.space = SpaceWithBase::make(s.points(), std::move(beta));
    return r;
}

CPoset poset_to_cposet(const FinitePoset& s) {
    std::vector<OperatorEntry> entries;
    for (std::size_t b = 0; b < s.size(); ++b) {
        const Natural code = set_encode(FinSet{s.label(b)});
        for (std::size_t a : members(s.below(b))) entries.push_back({s.label(a), code});
    }
    return CPoset::make(s, EnumOperatorCode::from_entries(entries));
}

json presentation_report(const CPoset& p) {
    json j;
    j["kind"] = "cposet";
    j["carrier_size"] = p.size();
    j["relations"] = {
        {"carrier", relation_entry(json(p.poset().labels()))},
        {"leq", relation_entry(leq_json(p.poset()))},
        {"operator", relation_entry(json(p.code().codes()))},
    };
    const auto valid = validate_cposet(p);
    j["valid"] = valid.pass();
    j["distributive"] = valid.pass() && is_distributive(p);
    j["ce_conformant"] = true;  // carrier, leq and A are all present
    j["all_decidable"] = true;
    return j;
}

json presentation_report(const SpaceWithBase& s) {
    json j;
    j["kind"] = "space";
    j["point_count"] = s.point_count();
    j["base_count"] = s.base_count();
    json beta = json::array();
    for (Mask m : s.betas()) beta.push_back(m);
    const auto inc = inc_from_space(s);
    j["relations"] = {
        {"beta", relation_entry(beta)},
        {"beta_inequality", relation_entry(inequality_json(s))},
        {"inc", relation_entry(inc_json(inc))},
    };
    j["beta_injective"] = s.injective();
    if (!s.injective()) j["injectivization"] = {{"available", true}, {"kept", injectivize_base(s).kept}};
    j["inc_provenance"] = "base";
    j["valid"] = validate_space(s).pass();
    j["ce_conformant"] = true;
    j["all_decidable"] = true;
    return j;
}

json spectrum_presentation_report(const CPoset& p) {
    const auto s = spectrum(p);
    json j = presentation_report(s.underlying);
    j["kind"] = "spectrum";
    j["source_carrier"] = s.source_labels;
    j["basis_verified"] = s.basis_verified;
    const auto symbolic = inc_from_operator(p, full_maxk(p.size()));
    j["inc_provenance"] = {{"from", "operator"},
                           {"source_operator_size", p.code().size()},
                           {"matches_extensional", symbolic == inc_from_space(s.underlying)}};
    return j;
}

}  // namespace stonewb
