#include "stonewb/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "stonewb/error.hpp"
#include "stonewb/presentations.hpp"

namespace stonewb {

using nlohmann::json;

namespace {

Natural natural(const json& v, const std::string& where) {
    if (v.is_number_unsigned()) return v.get<Natural>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<Natural>();
    throw InputError(where + ": expected a natural number, got " + v.dump());
}

const json& field(const json& j, const char* name, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected an object");
    auto it = j.find(name);
    if (it == j.end()) throw InputError(where + ": missing \"" + name + "\"");
    return *it;
}

const json& array_field(const json& j, const char* name, const std::string& where) {
    const json& v = field(j, name, where);
    if (!v.is_array()) throw InputError(where + "." + name + ": expected an array");
    return v;
}

std::vector<Natural> naturals(const json& arr, const std::string& where) {
    std::vector<Natural> out;
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(natural(arr[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::pair<Natural, Natural>> label_pairs(const json& arr, const std::string& where) {
    std::vector<std::pair<Natural, Natural>> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        if (!arr[i].is_array() || arr[i].size() != 2) throw InputError(w + ": expected a pair [a, b]");
        out.emplace_back(natural(arr[i][0], w), natural(arr[i][1], w));
    }
    return out;
}

std::size_t label_position(const std::vector<Natural>& sorted, Natural x, const std::string& where) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.end() || *it != x) throw InputError(where + ": " + std::to_string(x) + " is not in the carrier");
    return static_cast<std::size_t>(it - sorted.begin());
}

OpTable table_from_json(const json& t, const std::vector<Natural>& labels, const std::string& where) {
    // rows and columns follow the ascending carrier, entries are labels
    const std::size_t n = labels.size();
    if (!t.is_array() || t.size() != n) throw InputError(where + ": expected " + std::to_string(n) + " rows");
    std::vector<std::size_t> cells;
    for (std::size_t a = 0; a < n; ++a) {
        const std::string w = where + "[" + std::to_string(a) + "]";
        if (!t[a].is_array() || t[a].size() != n) throw InputError(w + ": expected " + std::to_string(n) + " entries");
        for (std::size_t b = 0; b < n; ++b) cells.push_back(label_position(labels, natural(t[a][b], w), w));
    }
    return OpTable(n, std::move(cells));
}

json table_to_json(const OpTable& t, const std::vector<Natural>& labels) {
    json rows = json::array();
    for (std::size_t a = 0; a < t.size(); ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < t.size(); ++b) row.push_back(labels[t(a, b)]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Natural> sorted_carrier(const json& j, const char* name, const std::string& where) {
    auto v = naturals(array_field(j, name, where), where + "." + name);
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw InputError(where + "." + name + ": duplicate entries");
    return v;
}

PositionMap map_from_json(const json& j, const std::vector<Natural>& src, const std::vector<Natural>& dst) {
    const json& arr = array_field(j, "map", "map");
    PositionMap f(src.size(), SIZE_MAX);
    for (auto [x, y] : label_pairs(arr, "map")) {
        const std::size_t a = label_position(src, x, "map source");
        if (f[a] != SIZE_MAX) throw InputError("map: " + std::to_string(x) + " is mapped twice");
        f[a] = label_position(dst, y, "map target");
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == SIZE_MAX) throw InputError("map: " + std::to_string(src[i]) + " has no image");
    }
    return f;
}

std::string kind_field(const json& j) {
    const json& k = field(j, "kind", "input");
    if (!k.is_string()) throw InputError("input.kind: expected a string");
    return k.get<std::string>();
}

}  // namespace

FinitePoset poset_from_json(const json& j) {
    return FinitePoset::from_pairs(naturals(array_field(j, "carrier", "poset"), "poset.carrier"),
                                   label_pairs(array_field(j, "leq", "poset"), "poset.leq"));
}

CPoset cposet_from_json(const json& j) {
    FinitePoset p = FinitePoset::from_pairs(naturals(array_field(j, "carrier", "cposet"), "cposet.carrier"),
                                            label_pairs(array_field(j, "leq", "cposet"), "cposet.leq"));
    const json& op = field(j, "operator", "cposet");
    if (op.is_string()) {
        if (op.get<std::string>() != "down") throw InputError("cposet.operator: the only named operator is \"down\"");
        return poset_to_cposet(p);
    }
    return CPoset::make(std::move(p), operator_from_json(op));
}

SpaceWithBase space_from_json(const json& j) {
    auto points = naturals(array_field(j, "points", "space"), "space.points");
    const json& base = array_field(j, "base", "space");
    std::vector<std::vector<Natural>> sets;
    for (std::size_t i = 0; i < base.size(); ++i) {
        const std::string w = "space.base[" + std::to_string(i) + "]";
        if (!base[i].is_array()) throw InputError(w + ": expected an array of points");
        sets.push_back(naturals(base[i], w));
    }
    std::vector<std::size_t> ids;
    if (j.contains("beta")) {
        const json& beta = array_field(j, "beta", "space");
        for (Natural v : naturals(beta, "space.beta")) ids.push_back(static_cast<std::size_t>(v));
        if (ids.empty() && !sets.empty()) throw InputError("space.beta: empty index list for a nonempty base");
    }
    return SpaceWithBase::from_lists(std::move(points), sets, ids);
}

Lattice lattice_from_json(const json& j) {
    auto labels = sorted_carrier(j, "carrier", "lattice");
    Lattice l{labels, table_from_json(field(j, "meet", "lattice"), labels, "lattice.meet"),
              table_from_json(field(j, "join", "lattice"), labels, "lattice.join")};
    if (j.contains("leq")) {
        const auto supplied = poset_from_json(j);
        const auto report = validate_lattice(l, &supplied);
        if (const auto* c = report.find("order-matches-supplied"); c && !c->pass) {
            throw InputError("lattice.leq disagrees with the tables at " + c->witness);
        }
    }
    return l;
}

Semilattice semilattice_from_json(const json& j) {
    auto labels = sorted_carrier(j, "carrier", "semilattice");
    const json& op = field(j, "op", "semilattice");
    if (!op.is_string() || (op != "meet" && op != "join")) throw InputError("semilattice.op: \"meet\" or \"join\"");
    Semilattice s{op == "meet" ? SemilatticeKind::meet : SemilatticeKind::join, labels,
                  table_from_json(field(j, "table", "semilattice"), labels, "semilattice.table")};
    if (j.contains("leq")) {
        const auto supplied = poset_from_json(j);
        const auto report = validate_semilattice(s, &supplied);
        if (const auto* c = report.find("order-matches-supplied"); c && !c->pass) {
            throw InputError("semilattice.leq disagrees with the table at " + c->witness);
        }
    }
    return s;
}

Input parse_input_json(const json& j) {
    const std::string kind = kind_field(j);
    if (kind == "cposet") return cposet_from_json(j);
    if (kind == "space") return space_from_json(j);
    if (kind == "poset") return poset_from_json(j);
    if (kind == "lattice") return lattice_from_json(j);
    if (kind == "semilattice") return semilattice_from_json(j);
    if (kind == "strict-map") {
        StrictMapInput m{cposet_from_json(field(j, "source", "strict-map")),
                         cposet_from_json(field(j, "target", "strict-map")), {}};
        m.map = map_from_json(j, m.source.poset().labels(), m.target.poset().labels());
        return m;
    }
    if (kind == "spectral-map") {
        SpectralMapInput m{space_from_json(field(j, "source", "spectral-map")),
                           space_from_json(field(j, "target", "spectral-map")), {}};
        m.map = map_from_json(j, m.source.points(), m.target.points());
        return m;
    }
    throw InputError("unknown kind \"" + kind + "\"");
}

Input parse_input_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset -> line and column of the offending character
        const std::size_t at = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
    try {
        return parse_input_json(j);
    } catch (const json::exception& e) {
        throw InputError(std::string("schema: ") + e.what());
    } catch (const OverflowError& e) {
        throw InputError(e.what());
    }
}

Input parse_input_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_input_text(ss.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string kind_of(const Input& in) {
    static const char* names[] = {"cposet", "space", "poset", "lattice", "semilattice", "strict-map", "spectral-map"};
    return names[in.index()];
}

json to_json(const FinitePoset& p) {
    json leq = json::array();
    for (auto [a, b] : p.strict_pairs()) leq.push_back({a, b});
    return {{"kind", "poset"}, {"carrier", p.labels()}, {"leq", leq}};
}

json to_json(const CPoset& p) {
    json j = to_json(p.poset());
    j["kind"] = "cposet";
    j["operator"] = operator_to_json(p.code(), OperatorForm::pair_codes);
    return j;
}

json to_json(const SpaceWithBase& s) {
    json base = json::array();
    for (Mask m : s.betas()) {
        json set = json::array();
        for (std::size_t x : members(m)) set.push_back(s.point(x));
        base.push_back(std::move(set));
    }
    return {{"kind", "space"}, {"points", s.points()}, {"base", base}};
}

json to_json(const Lattice& l) {
    return {{"kind", "lattice"},
            {"carrier", l.labels},
            {"meet", table_to_json(l.meet, l.labels)},
            {"join", table_to_json(l.join, l.labels)}};
}

json to_json(const Semilattice& s) {
    return {{"kind", "semilattice"}, {"op", to_string(s.kind)}, {"carrier", s.labels}, {"table", table_to_json(s.op, s.labels)}};
}

json to_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json item = {{"name", c.name}, {"pass", c.pass}};
        if (!c.witness.empty()) item["witness"] = c.witness;
        checks.push_back(std::move(item));
    }
    return {{"pass", r.pass()}, {"checks", checks}};
}

json to_json(const Classification& c) {
    return {{"mode", to_string(c.mode)},
            {"valid", c.valid},
            {"almost_sober", c.almost_sober},
            {"empty_in_base", c.has_empty},
            {"whole_in_base", c.has_whole},
            {"up_directed", c.up_directed},
            {"down_directed", c.down_directed},
            {"zero_base", c.zero_base},
            {"one_base", c.one_base},
            {"multiplicative", c.multiplicative},
            {"additive", c.additive},
            {"cells", c.cells}};
}

json to_json(const IncPredicate& inc) {
    json entries = json::array();
    for (auto [i, k] : inc.entries) entries.push_back({i, k});
    json j = {{"index_count", inc.index_count}, {"entries", entries}};
    if (inc.skipped_count) j["skipped"] = {{"from", inc.skipped_from}, {"count", inc.skipped_count}};
    return j;
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string set_name(const SpaceWithBase& s, Mask m) {
    std::string out = "{";
    bool first = true;
    for (std::size_t x : members(m)) {
        out += (first ? "" : ",") + std::to_string(s.point(x));
        first = false;
    }
    return out + "}";
}

}  // namespace

std::string dot_hasse(const FinitePoset& p, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
    for (Natural l : p.labels()) out << "  " << quoted(std::to_string(l)) << ";\n";
    for (auto [a, b] : p.covers()) {
        out << "  " << quoted(std::to_string(p.label(a))) << " -> " << quoted(std::to_string(p.label(b))) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string dot_specialization(const SpaceWithBase& s) {
    return dot_hasse(specialization_order(s), "specialization");
}

std::string dot_base_inclusion(const SpaceWithBase& s) {
    const auto base = s.distinct_base();
    std::ostringstream out;
    out << "digraph \"base\" {\n  rankdir=BT;\n";
    for (Mask m : base) out << "  " << quoted(set_name(s, m)) << ";\n";
    for (Mask a : base) {
        for (Mask b : base) {
            if (a == b || !subset_of(a, b)) continue;
            bool cover = true;
            for (Mask c : base) {
                if (c != a && c != b && subset_of(a, c) && subset_of(c, b)) {
                    cover = false;
                    break;
                }
            }
            if (cover) out << "  " << quoted(set_name(s, a)) << " -> " << quoted(set_name(s, b)) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace stonewb
