// workbench: command-line front end to the stonewb library.
//
// Exit codes: 0 every check passed, 1 a check failed (the report carries
// the witness), 2 the input was invalid.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "stonewb/duality.hpp"
#include "stonewb/error.hpp"
#include "stonewb/generator.hpp"
#include "stonewb/io.hpp"
#include "stonewb/lattices.hpp"
#include "stonewb/presentations.hpp"
#include "stonewb/spectrum.hpp"
#include "stonewb/suite.hpp"

using nlohmann::json;
using namespace stonewb;

namespace {

struct Options {
    std::string format = "text";
    std::string mode = "standard";
    std::string out;
    std::string input;
    std::string side = "PT";
    std::string corpus;
    std::size_t size = 3;
    Natural maxk = 0;
    bool maxk_set = false;
    std::uint64_t seed = 42;
};

struct Outcome {
    json report;
    bool pass = true;
};

SoberMode mode_of(const Options& o) { return sober_mode_from_string(o.mode); }

CPoset as_cposet(const Input& in) {
    if (auto* p = std::get_if<CPoset>(&in)) return *p;
    if (auto* p = std::get_if<FinitePoset>(&in)) return poset_to_cposet(*p);
    if (auto* l = std::get_if<Lattice>(&in)) return cposet_from_lattice(*l);
    if (auto* s = std::get_if<Semilattice>(&in)) return cposet_from_semilattice(*s);
    throw InputError("expected a cposet, poset, lattice or semilattice, got " + kind_of(in));
}

const SpaceWithBase& as_space(const Input& in) {
    if (auto* s = std::get_if<SpaceWithBase>(&in)) return *s;
    throw InputError("expected a space, got " + kind_of(in));
}

json labels_of(const CPoset& p, Mask m) { return p.to_labels(m).elements(); }

json space_summary(const SpaceWithBase& s) {
    json j = to_json(s);
    j.erase("kind");
    j["specialization"] = to_json(specialization_order(s))["leq"];
    return j;
}

json map_json(const PositionMap& f) { return f; }

Outcome do_validate(const Input& in, const Options& o) {
    ValidationReport r;
    json extra = json::object();
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CPoset>) {
                r = validate_cposet(v);
                if (r.pass()) extra["distributive"] = is_distributive(v);
            } else if constexpr (std::is_same_v<T, SpaceWithBase>) {
                r = validate_space(v, mode_of(o));
                extra["beta_injective"] = v.injective();
            } else if constexpr (std::is_same_v<T, FinitePoset>) {
                r = validate_poset(v);
            } else if constexpr (std::is_same_v<T, Lattice>) {
                r = validate_lattice(v);
            } else if constexpr (std::is_same_v<T, Semilattice>) {
                r = validate_semilattice(v);
            } else if constexpr (std::is_same_v<T, StrictMapInput>) {
                for (const auto* c : {&v.source, &v.target}) {
                    const auto part = validate_cposet(*c);
                    r.add(c == &v.source ? "source" : "target", part.pass());
                }
                const auto m = check_strict(v.source, v.target, v.map);
                r.add("strict", m.pass, m.failure);
            } else if constexpr (std::is_same_v<T, SpectralMapInput>) {
                for (const auto* s : {&v.source, &v.target}) {
                    const auto part = validate_space(*s, mode_of(o));
                    r.add(s == &v.source ? "source" : "target", part.pass());
                }
                const auto m = check_spectral(v.map, v.source, v.target);
                r.add("spectral", m.pass, m.failure);
            }
        },
        in);
    json j = to_json(r);
    j.update(extra);
    return {j, r.pass()};
}

Outcome do_spectrum(const Input& in, const Options& o) {
    const CPoset p = as_cposet(in);
    const auto s = spectrum(p);
    json primes = json::array();
    for (std::size_t q = 0; q < s.primes.size(); ++q) primes.push_back({{"point", q}, {"ideal", labels_of(p, s.primes[q])}});
    json base = json::array();
    for (std::size_t a = 0; a < p.size(); ++a) {
        json pts = json::array();
        for (std::size_t x : members(s.underlying.beta(a))) pts.push_back(x);
        base.push_back({{"element", p.poset().label(a)}, {"V", pts}});
    }
    const Natural maxk = o.maxk_set ? o.maxk : full_maxk(p.size());
    json j = {{"point_count", s.primes.size()},
              {"primes", primes},
              {"base", base},
              {"basis_verified", s.basis_verified},
              {"space", space_summary(s.underlying)},
              {"inc", to_json(inc_from_operator(p, maxk))}};
    return {j, s.basis_verified};
}

Outcome do_dual(const Input& in, const Options& o) {
    if (std::holds_alternative<SpaceWithBase>(in)) {
        const auto& s0 = std::get<SpaceWithBase>(in);
        json j;
        const auto inj = injectivize_base(s0);
        if (!s0.injective()) j["injectivized"] = {{"kept", inj.kept}};
        const CPoset p = functor_P_obj(inj.space);
        j["cposet"] = to_json(p);
        j["valid"] = validate_cposet(p).pass();
        j["distributive"] = is_distributive(p);
        const Natural maxk = o.maxk_set ? o.maxk : full_maxk(inj.space.base_count());
        j["inc"] = to_json(inc_from_space(inj.space, maxk));
        return {j, j["valid"].get<bool>()};
    }
    const CPoset p = as_cposet(in);
    const auto s = functor_T_obj(p);
    json j = {{"space", to_json(s)}, {"valid", validate_space(s, mode_of(o)).pass()}};
    return {j, j["valid"].get<bool>()};
}

Outcome do_roundtrip(const Input& in, const Options& o) {
    if (o.side == "PT") {
        const auto c = counit_map(as_cposet(in));
        json j = {{"side", "PT"}, {"xi", map_json(c.xi)}, {"pass", c.report.pass}};
        if (!c.report.pass) j["failure"] = c.report.failure;
        return {j, c.report.pass};
    }
    if (o.side == "TP") {
        const auto& s = as_space(in);
        const auto inj = injectivize_base(s);
        const auto u = unit_map(inj.space, mode_of(o));
        json j = {{"side", "TP"}, {"pass", u.pass}};
        if (!s.injective()) j["injectivized"] = {{"kept", inj.kept}};
        if (u.pass) {
            j["f_X"] = map_json(u.forward.pointmap);
            j["witness"] = map_json(u.forward.h);
        } else {
            j["failure"] = u.failure;
        }
        return {j, u.pass};
    }
    throw InputError("--side must be PT or TP");
}

Outcome do_primes(const Input& in, const Options&) {
    const CPoset p = as_cposet(in);
    const auto lattice = enumerate_ideals(p);
    json ideals = json::array();
    for (Mask i : lattice.ideals()) {
        const auto r = is_prime(p, lattice, i);
        json item = {{"ideal", labels_of(p, i)}, {"proper", r.proper}, {"prime", r.prime}};
        if (r.proper) {
            item["complement_is_filter"] = r.complement_is_filter;
            item["meet_prime"] = r.meet_prime;
            item["lower_bound_condition"] = r.lower_bound_condition;
        }
        ideals.push_back(std::move(item));
    }
    json primes = json::array();
    for (Mask q : enumerate_primes(p)) primes.push_back(labels_of(p, q));
    const auto d = check_distributive(p);
    json j = {{"ideals", ideals}, {"primes", primes}, {"distributive", d.distributive}};
    if (d.witness) {
        j["distributivity_witness"] = {labels_of(p, (*d.witness)[0]), labels_of(p, (*d.witness)[1]),
                                       labels_of(p, (*d.witness)[2])};
    }
    return {j, true};
}

Outcome do_classify(const Input& in, const Options& o) {
    SpaceWithBase s;
    json j;
    if (std::holds_alternative<SpaceWithBase>(in)) {
        s = std::get<SpaceWithBase>(in);
    } else {
        s = functor_T_obj(as_cposet(in));
        j["space"] = to_json(s);
    }
    const auto c = classify(s, mode_of(o));
    j["classification"] = to_json(c);
    return {j, c.valid};
}

Outcome do_check_strict(const Input& in, const Options&) {
    const auto* m = std::get_if<StrictMapInput>(&in);
    if (!m) throw InputError("expected a strict-map, got " + kind_of(in));
    const auto r = morphism_duality_check(m->map, m->source, m->target);
    json j = to_json(r);
    return {j, r.pass()};
}

Outcome do_check_spectral(const Input& in, const Options&) {
    const auto* m = std::get_if<SpectralMapInput>(&in);
    if (!m) throw InputError("expected a spectral-map, got " + kind_of(in));
    if (!m->source.injective() || !m->target.injective()) {
        const auto sp = check_spectral(m->map, m->source, m->target);
        ValidationReport r;
        r.add("spectral", sp.pass, sp.failure);
        return {to_json(r), sp.pass};
    }
    const auto r = morphism_duality_check(m->map, m->source, m->target);
    return {to_json(r), r.pass()};
}

json witness_json(const WitnessSearch& w) {
    if (w.witness) {
        json rows = json::array();
        const auto& t = w.witness->table;
        for (std::size_t i = 0; i < t.size(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < t.size(); ++k) row.push_back(t(i, k));
            rows.push_back(std::move(row));
        }
        return {{"found", true}, {"table", rows}};
    }
    return {{"found", false}, {"offending_pair", {w.offending->first, w.offending->second}}};
}

Outcome do_witness(const Input& in, const Options&) {
    if (std::holds_alternative<SpaceWithBase>(in)) {
        const auto& s = std::get<SpaceWithBase>(in);
        const auto inj = injectivize_base(s).space;
        json j = {{"meet", witness_json(find_meet_witness(inj))}, {"join", witness_json(find_join_witness(inj))}};
        return {j, true};
    }
    if (auto* l = std::get_if<Lattice>(&in)) {
        const auto r = check_semilattice_duality(*l);
        return {to_json(r), r.pass()};
    }
    if (auto* s = std::get_if<Semilattice>(&in)) {
        const auto r = check_semilattice_duality(*s);
        return {to_json(r), r.pass()};
    }
    throw InputError("expected a space, lattice or semilattice, got " + kind_of(in));
}

Outcome do_suite(const Options& o) {
    SuiteOptions so;
    so.seed = o.seed;
    so.mode = mode_of(o);
    const auto results = run_suite(so);
    json j = suite_report(results, so);
    return {j, j["pass"].get<bool>()};
}

template <class T>
json corpus_json(const InstanceStream<T>& s) {
    json items = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        json item = to_json(s.items[i]);
        item["digest"] = s.digests[i];
        items.push_back(std::move(item));
    }
    json j = {{"corpus", s.kind}, {"size_bound", s.size_bound}, {"count", s.size()}, {"items", items}};
    if (s.seed) j["seed"] = *s.seed;
    return j;
}

Outcome do_export_corpus(const Options& o) {
    if (o.corpus == "posets") return {corpus_json(gen_posets(o.size)), true};
    if (o.corpus == "cposets") return {corpus_json(gen_distributive_cposets(o.size)), true};
    if (o.corpus == "spaces") return {corpus_json(gen_spaces_upto(o.size, 6)), true};
    if (o.corpus == "lattices") return {corpus_json(gen_lattices(o.size)), true};
    if (o.corpus == "random-cposets") return {corpus_json(gen_distributive_cposets_random(o.size, 100, o.seed)), true};
    throw InputError("unknown corpus \"" + o.corpus + "\" (posets, cposets, spaces, lattices, random-cposets)");
}

std::string do_export_dot(const Input& in) {
    if (auto* s = std::get_if<SpaceWithBase>(&in)) return dot_specialization(*s) + dot_base_inclusion(*s);
    if (auto* p = std::get_if<FinitePoset>(&in)) return dot_hasse(*p);
    const CPoset p = as_cposet(in);
    std::string out = dot_hasse(p.poset());
    if (is_distributive(p)) {
        const auto s = functor_T_obj(p);
        out += dot_specialization(s) + dot_base_inclusion(s);
    }
    return out;
}

void render_text(const json& j, const std::string& indent, std::ostream& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        const std::string key = j.is_object() ? it.key() : "-";
        const bool nested = (v.is_object() && !v.empty()) ||
                            (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()) &&
                             v.dump().size() > 72);
        if (nested) {
            out << indent << key << ":\n";
            render_text(v, indent + "  ", out);
        } else if (v.is_string()) {
            out << indent << key << ": " << v.get<std::string>() << "\n";
        } else {
            out << indent << key << ": " << v.dump() << "\n";
        }
    }
}

void emit(const std::string& text, const Options& o) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
}

std::string format_report(const std::string& verb, const Outcome& r, const Options& o) {
    json full = {{"verb", verb}, {"mode", o.mode}, {"status", r.pass ? "PASS" : "FAIL"}};
    if (!o.input.empty()) full["input"] = o.input;
    full["report"] = r.report;
    if (o.format == "json") return full.dump(2) + "\n";
    std::ostringstream out;
    out << verb << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
    out << "mode: " << o.mode << "\n";
    if (!o.input.empty()) out << "input: " << o.input << "\n";
    render_text(r.report, "", out);
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench: c-posets, spaces with base, and the duality between them"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--mode", o.mode, "Reading of almost sober")->check(CLI::IsMember({"standard", "strict-literal"}));
    app.add_option("--out", o.out, "Write the report to this path");
    auto* maxk = app.add_option("--maxk", o.maxk, "Largest code k in reported Inc predicates");
    app.add_option("--seed", o.seed, "Seed for randomized corpora");

    const std::vector<std::pair<std::string, std::string>> file_verbs = {
        {"validate", "Check the axioms of the input"},
        {"spectrum", "Prime spectrum of a distributive c-poset"},
        {"dual", "Apply P to a space or T to a c-poset"},
        {"roundtrip", "Unit (TP) or counit (PT) of the duality"},
        {"primes", "Ideals, the three primality criteria, and the primes"},
        {"classify", "Tableau cells of a space (or of the spectrum of a c-poset)"},
        {"check-strict", "Strict map check and its dual spectral map"},
        {"check-spectral", "Spectral map check and its dual strict map"},
        {"witness", "Meet / join witnesses on a base, or lattice duality"},
    };
    for (const auto& [name, help] : file_verbs) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", o.input, "JSON input file")->required();
        if (name == "roundtrip") sub->add_option("--side", o.side, "PT or TP")->check(CLI::IsMember({"PT", "TP"}));
    }
    app.add_subcommand("suite", "Run the property battery over generated corpora");
    auto* exp = app.add_subcommand("export", "DOT for an input file, or a JSON corpus");
    exp->add_option("input", o.input, "JSON input file (DOT output)");
    exp->add_option("--corpus", o.corpus, "posets, cposets, spaces, lattices or random-cposets");
    exp->add_option("--size", o.size, "Size bound of the corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    o.maxk_set = maxk->count() > 0;

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        if (verb == "suite") {
            const auto r = do_suite(o);
            emit(format_report(verb, r, o), o);
            return r.pass ? 0 : 1;
        }
        if (verb == "export") {
            if (!o.corpus.empty()) {
                const auto r = do_export_corpus(o);
                emit(r.report.dump(2) + "\n", o);  // corpora are JSON whatever --format says
                return 0;
            }
            if (o.input.empty()) throw InputError("export needs an input file or --corpus");
            emit(do_export_dot(parse_input_file(o.input)), o);
            return 0;
        }
        const Input in = parse_input_file(o.input);
        Outcome r;
        if (verb == "validate") r = do_validate(in, o);
        else if (verb == "spectrum") r = do_spectrum(in, o);
        else if (verb == "dual") r = do_dual(in, o);
        else if (verb == "roundtrip") r = do_roundtrip(in, o);
        else if (verb == "primes") r = do_primes(in, o);
        else if (verb == "classify") r = do_classify(in, o);
        else if (verb == "check-strict") r = do_check_strict(in, o);
        else if (verb == "check-spectral") r = do_check_spectral(in, o);
        else if (verb == "witness") r = do_witness(in, o);
        emit(format_report(verb, r, o), o);
        return r.pass ? 0 : 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // precondition failures and the like: the check did not pass
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
}
