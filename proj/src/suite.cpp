#include "stonewb/suite.hpp"

#include <algorithm>
#include <numeric>

#include "stonewb/duality.hpp"
#include "stonewb/error.hpp"
#include "stonewb/generator.hpp"
#include "stonewb/lattices.hpp"
#include "stonewb/presentations.hpp"
#include "stonewb/spectrum.hpp"

namespace stonewb {

namespace {

constexpr std::size_t kMaxCarrier = 5;
constexpr std::size_t kRandomCount = 500;
constexpr std::size_t kRandomCarrier = 8;
constexpr std::size_t kMaxPoints = 5;
constexpr std::size_t kMaxBase = 6;
constexpr std::size_t kMapCarrier = 4;
constexpr std::size_t kMapPoints = 4;
constexpr std::size_t kComposablePoints = 3;

void fail(CriterionResult& r, const std::string& what) {
    if (!r.pass) return;
    r.pass = false;
    r.counterexample = what;
}

template <class T>
void append(InstanceStream<T>& into, InstanceStream<T> part) {
    for (std::size_t i = 0; i < part.size(); ++i) {
        into.items.push_back(std::move(part.items[i]));
        into.digests.push_back(std::move(part.digests[i]));
    }
}

const InstanceStream<CPoset>& distributive_upto(std::size_t max_n) {
    static const auto all = [] {
        std::vector<InstanceStream<CPoset>> by_size;
        for (std::size_t n = 0; n <= kMaxCarrier; ++n) by_size.push_back(gen_distributive_cposets(n));
        return by_size;
    }();
    static std::vector<InstanceStream<CPoset>> prefix = [] {
        std::vector<InstanceStream<CPoset>> out(kMaxCarrier + 1);
        for (std::size_t m = 0; m <= kMaxCarrier; ++m) {
            out[m].kind = "distributive-cposet";
            out[m].size_bound = m;
            for (std::size_t n = 0; n <= m; ++n) append(out[m], all[n]);
        }
        return out;
    }();
    return prefix.at(max_n);
}

InstanceStream<CPoset> random_distributive(std::uint64_t seed) {
    return gen_distributive_cposets_random(kRandomCarrier, kRandomCount, seed);
}

const InstanceStream<SpaceWithBase>& spaces_upto(std::size_t max_points) {
    static const auto all = gen_spaces_upto(kMaxPoints, kMaxBase);
    static std::vector<InstanceStream<SpaceWithBase>> prefix = [] {
        std::vector<InstanceStream<SpaceWithBase>> out(kMaxPoints + 1);
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t m = all.items[i].point_count(); m <= kMaxPoints; ++m) {
                out[m].items.push_back(all.items[i]);
                out[m].digests.push_back(all.digests[i]);
            }
        }
        return out;
    }();
    return prefix.at(max_points);
}

std::string with(const std::string& digest, const std::string& what) { return digest + ": " + what; }

// 1: the three primality criteria agree on every proper ideal.
void primality(CriterionResult& r, const SuiteOptions& o) {
    auto check = [&](const CPoset& p, const std::string& digest) {
        ++r.instances;
        try {
            const auto lattice = enumerate_ideals(p);
            std::vector<Mask> primes;
            for (Mask i : lattice.ideals()) {
                if (i == 0 || i == p.all()) continue;
                ++r.cases;
                if (is_prime(p, lattice, i).prime) primes.push_back(i);
            }
            if (primes != enumerate_primes(p)) fail(r, with(digest, "prime enumeration disagrees with is_prime"));
        } catch (const Error& e) {
            fail(r, with(digest, e.what()));
        }
    };
    const auto& exhaustive = distributive_upto(kMaxCarrier);
    for (std::size_t i = 0; i < exhaustive.size(); ++i) check(exhaustive.items[i], exhaustive.digests[i]);
    const auto random = random_distributive(o.seed);
    for (std::size_t i = 0; i < random.size(); ++i) check(random.items[i], random.digests[i]);
    r.detail = {{"exhaustive_instances", exhaustive.size()}, {"random_instances", random.size()}};
}

// 2: prime separation for every nonempty ideal and disjoint nonempty
// down-directed set.
void separation(CriterionResult& r, const SuiteOptions&) {
    const auto& corpus = distributive_upto(kMaxCarrier);
    for (std::size_t c = 0; c < corpus.size(); ++c) {
        const CPoset& p = corpus.items[c];
        ++r.instances;
        const auto lattice = enumerate_ideals(p);
        std::vector<Mask> directed;
        for (std::size_t f = 1; f < (std::size_t{1} << p.size()); ++f) {
            if (p.poset().down_directed(static_cast<Mask>(f))) directed.push_back(static_cast<Mask>(f));
        }
        for (Mask i : lattice.ideals()) {
            if (i == 0) continue;
            for (Mask f : directed) {
                if (i & f) continue;
                ++r.cases;
                try {
                    const Mask q = prime_separation(p, i, f);
                    if (!is_prime(p, lattice, q).prime || !subset_of(i, q) || (q & f)) {
                        fail(r, with(corpus.digests[c], "bad separating prime for I = " + p.poset().describe(i)));
                    }
                } catch (const Error& e) {
                    fail(r, with(corpus.digests[c], "I = " + p.poset().describe(i) + ", F = " +
                                                        p.poset().describe(f) + ": " + e.what()));
                }
            }
        }
    }
}

// 3: the V_a identities.
void lphi(CriterionResult& r, const SuiteOptions&) {
    const auto& corpus = distributive_upto(kMaxCarrier);
    std::size_t hypothesis = 0;
    std::size_t boundary = 0;
    for (std::size_t c = 0; c < corpus.size(); ++c) {
        ++r.instances;
        try {
            const auto rep = check_lphi(corpus.items[c]);
            for (const auto& part : rep.parts) {
                r.cases += part.cases;
                if (!part.pass) fail(r, with(corpus.digests[c], part.name + " at " + part.counterexample));
            }
            hypothesis += rep.join_hypothesis;
            boundary += rep.empty_boundary_fails;
        } catch (const Error& e) {
            fail(r, with(corpus.digests[c], e.what()));
        }
    }
    r.detail = {{"join_hypothesis_everywhere", hypothesis}, {"empty_set_boundary_fails", boundary}};
}

// 4: unit of the duality.
void tp_round_trip(CriterionResult& r, const SuiteOptions& o) {
    const auto& corpus = spaces_upto(kMaxPoints);
    std::size_t skipped = 0;
    for (std::size_t c = 0; c < corpus.size(); ++c) {
        const auto& s = corpus.items[c];
        if (!is_almost_sober(s, o.mode)) {
            ++skipped;
            continue;
        }
        ++r.instances;
        try {
            const auto inj = injectivize_base(s).space;
            const auto u = unit_map(inj, o.mode);
            r.cases += inj.point_count() + inj.base_count();
            if (!u.pass) fail(r, with(corpus.digests[c], u.failure));
        } catch (const Error& e) {
            fail(r, with(corpus.digests[c], e.what()));
        }
    }
    r.detail = {{"not_almost_sober", skipped}};
}

// 5: counit of the duality.
void pt_round_trip(CriterionResult& r, const SuiteOptions&) {
    const auto& corpus = distributive_upto(kMaxCarrier);
    for (std::size_t c = 0; c < corpus.size(); ++c) {
        ++r.instances;
        r.cases += std::size_t{1} << corpus.items[c].size();
        try {
            const auto xi = counit_map(corpus.items[c]);
            if (!xi.report.pass) fail(r, with(corpus.digests[c], xi.report.failure));
        } catch (const Error& e) {
            fail(r, with(corpus.digests[c], e.what()));
        }
    }
}

// 6: Inc read off the operator code agrees with Inc of the space, and the
// code read off Inc gives back Inc.
void presentations(CriterionResult& r, const SuiteOptions& o) {
    auto from_cposet = [&](const CPoset& p, const std::string& digest) {
        ++r.instances;
        try {
            const auto spec = spectrum(p);
            const Natural full = full_maxk(p.size());
            const auto symbolic = inc_from_operator(p, full);
            const auto extensional = inc_from_space(spec.underlying);
            r.cases += static_cast<std::size_t>(full) * p.size();
            if (!(symbolic == extensional)) return fail(r, with(digest, "symbolic Inc differs from the spectrum"));
            const Natural cut = std::min<Natural>(full, 5);
            if (!(inc_from_operator(p, cut) == inc_from_space(spec.underlying, cut))) {
                return fail(r, with(digest, "truncated Inc differs"));
            }
            const CPoset back = functor_P_obj(spec.underlying);
            if (!(back.code() == operator_from_inc(extensional))) {
                return fail(r, with(digest, "operator of P(T(P)) is not the code of Inc"));
            }
            if (!(inc_from_operator(back, full) == extensional)) {
                return fail(r, with(digest, "Inc of the code of Inc differs"));
            }
        } catch (const Error& e) {
            fail(r, with(digest, e.what()));
        }
    };
    const auto& exhaustive = distributive_upto(kMaxCarrier);
    for (std::size_t i = 0; i < exhaustive.size(); ++i) from_cposet(exhaustive.items[i], exhaustive.digests[i]);
    const auto random = random_distributive(o.seed);
    for (std::size_t i = 0; i < random.size(); ++i) from_cposet(random.items[i], random.digests[i]);

    const auto& spaces = spaces_upto(kMaxPoints);
    for (std::size_t c = 0; c < spaces.size(); ++c) {
        ++r.instances;
        try {
            const auto& s = spaces.items[c];
            const auto inc = inc_from_space(s);
            r.cases += static_cast<std::size_t>(full_maxk(s.base_count())) * s.base_count();
            if (!(inc_from_operator(functor_P_obj(s), full_maxk(s.base_count())) == inc)) {
                fail(r, with(spaces.digests[c], "Inc of the code of Inc differs"));
            }
        } catch (const Error& e) {
            fail(r, with(spaces.digests[c], e.what()));
        }
    }
}

// 7: dual morphisms and contravariance.
void morphisms(CriterionResult& r, const SuiteOptions&) {
    std::vector<CPoset> cps;
    const auto& dist = distributive_upto(kMapCarrier);
    for (const auto& p : dist.items) {
        if (p.size() > 0) cps.push_back(p);
    }
    std::vector<SpaceWithBase> spectra;
    for (const auto& p : cps) spectra.push_back(functor_T_obj(p));
    const auto strict = gen_strict_maps(cps);
    std::vector<EffectiveSpectralMap> tm(strict.size());
    for (std::size_t i = 0; i < strict.size(); ++i) {
        const auto& m = strict[i];
        ++r.cases;
        try {
            if (!check_strict(cps[m.source], cps[m.target], m.map).pass) {
                fail(r, "generated strict map fails check_strict");
                continue;
            }
            tm[i] = functor_T_mor(m.map, cps[m.source], cps[m.target]);
            const auto& x0 = spectra[m.target];
            const auto& x1 = spectra[m.source];
            const auto sp = check_spectral(tm[i].pointmap, x0, x1);
            const auto ef = check_effective_spectral(tm[i], x0, x1);
            if (!sp.pass) fail(r, "T(f) not spectral: " + sp.failure);
            if (!ef.pass) fail(r, "T(f) witness fails: " + ef.failure);
        } catch (const Error& e) {
            fail(r, std::string("strict map: ") + e.what());
        }
    }
    std::size_t strict_pairs = 0;
    for (std::size_t a = 0; a < strict.size(); ++a) {
        for (std::size_t b = 0; b < strict.size(); ++b) {
            if (strict[a].target != strict[b].source) continue;
            ++strict_pairs;
            const auto gf = compose(strict[b].map, strict[a].map);
            const auto t = functor_T_mor(gf, cps[strict[a].source], cps[strict[b].target]);
            if (t.pointmap != compose(tm[a].pointmap, tm[b].pointmap) || t.h != gf) {
                fail(r, "T(g o f) != T(f) o T(g)");
            }
        }
    }
    for (std::size_t i = 0; i < cps.size(); ++i) {
        const auto id = functor_T_mor(identity_map(cps[i].size()), cps[i], cps[i]);
        if (id.pointmap != identity_map(spectra[i].point_count())) fail(r, "T(id) is not the identity");
    }

    std::vector<SpaceWithBase> sps;
    for (const auto& s : spaces_upto(kMapPoints).items) {
        if (s.point_count() > 0) sps.push_back(s);
    }
    std::vector<CPoset> duals;
    for (const auto& s : sps) duals.push_back(functor_P_obj(s));
    const auto spectral = gen_spectral_maps(sps);
    std::vector<PositionMap> pm(spectral.size());
    for (std::size_t i = 0; i < spectral.size(); ++i) {
        const auto& m = spectral[i];
        ++r.cases;
        try {
            if (!check_spectral(m.map, sps[m.source], sps[m.target]).pass) {
                fail(r, "generated spectral map fails check_spectral");
                continue;
            }
            pm[i] = functor_P_mor(m.map, sps[m.source], sps[m.target]);
            const auto st = check_strict(duals[m.target], duals[m.source], pm[i]);
            if (!st.pass) fail(r, "P(f) not strict: " + st.failure);
        } catch (const Error& e) {
            fail(r, std::string("spectral map: ") + e.what());
        }
    }
    std::size_t spectral_pairs = 0;
    for (std::size_t a = 0; a < spectral.size(); ++a) {
        if (sps[spectral[a].source].point_count() > kComposablePoints ||
            sps[spectral[a].target].point_count() > kComposablePoints) {
            continue;
        }
        for (std::size_t b = 0; b < spectral.size(); ++b) {
            if (spectral[a].target != spectral[b].source) continue;
            if (sps[spectral[b].target].point_count() > kComposablePoints) continue;
            ++spectral_pairs;
            const auto gf = compose(spectral[b].map, spectral[a].map);
            const auto p = functor_P_mor(gf, sps[spectral[a].source], sps[spectral[b].target]);
            if (p != compose(pm[a], pm[b])) fail(r, "P(g o f) != P(f) o P(g)");
        }
    }
    for (std::size_t i = 0; i < sps.size(); ++i) {
        const auto id = functor_P_mor(identity_map(sps[i].point_count()), sps[i], sps[i]);
        if (id != identity_map(sps[i].base_count())) fail(r, "P(id) is not the identity");
    }
    r.instances = cps.size() + sps.size();
    r.cases += strict_pairs + spectral_pairs;
    r.detail = {{"strict_maps", strict.size()},
                {"spectral_maps", spectral.size()},
                {"strict_composable_pairs", strict_pairs},
                {"spectral_composable_pairs", spectral_pairs}};
}

bool lattice_distributive(const Lattice& l) {
    const std::size_t n = l.labels.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
            }
        }
    }
    return true;
}

// 8: lattices and their reducts.
void semilattices(CriterionResult& r, const SuiteOptions&) {
    std::size_t distributive = 0;
    for (std::size_t n = 1; n <= kMaxCarrier; ++n) {
        const auto lattices = gen_lattices(n);
        for (std::size_t i = 0; i < lattices.size(); ++i) {
            const Lattice& l = lattices.items[i];
            ++r.instances;
            const bool oracle = lattice_distributive(l);
            if (is_distributive(cposet_from_lattice(l)) != oracle) {
                fail(r, with(lattices.digests[i], "c-poset distributivity disagrees with the lattice law"));
            }
            if (!oracle) continue;
            ++distributive;
            for (const auto& rep : {check_semilattice_duality(l), check_semilattice_duality(l.meet_reduct()),
                                    check_semilattice_duality(l.join_reduct())}) {
                r.cases += rep.checks.size();
                for (const auto& c : rep.checks) {
                    if (!c.pass) fail(r, with(lattices.digests[i], c.name + " " + c.witness));
                }
            }
        }
    }
    const bool m3_rejected = !is_distributive(cposet_from_lattice(lattice_m3()));
    if (!m3_rejected) fail(r, "negative control: M3 passes is_distributive");
    r.detail = {{"distributive_lattices", distributive}, {"m3_rejected", m3_rejected}};
}

// 9: relabeling and base injectivization.
void plumbing(CriterionResult& r, const SuiteOptions& o) {
    Rng rng(o.seed);
    auto relabel_check = [&](const CPoset& p, const std::string& digest) {
        const std::size_t n = p.size();
        // scattered labels stay below 32 so every pair code fits 64 bits
        std::vector<Natural> reversed(n), scattered(32);
        for (std::size_t i = 0; i < n; ++i) reversed[i] = n - 1 - i;
        std::iota(scattered.begin(), scattered.end(), Natural{0});
        for (std::size_t i = 0; i < n; ++i) std::swap(scattered[i], scattered[i + rng.below(32 - i)]);
        scattered.resize(n);
        for (const auto* labels : {&reversed, &scattered}) {
            ++r.cases;
            try {
                const auto fwd = relabel_cposet(p, *labels);
                if (!fwd.verified.pass) return fail(r, with(digest, "relabeled copy: " + fwd.verified.failure));
                std::vector<Natural> back(n);
                for (std::size_t j = 0; j < n; ++j) back[j] = p.poset().label(fwd.to_source[j]);
                const auto round = relabel_cposet(fwd.cposet, back);
                if (!std::ranges::equal(round.cposet.closure_table(), p.closure_table()) ||
                    !(round.cposet.poset() == p.poset())) {
                    return fail(r, with(digest, "relabeling back does not restore the closure"));
                }
            } catch (const Error& e) {
                fail(r, with(digest, e.what()));
            }
        }
    };
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto all = gen_cposets(n);
        r.instances += all.size();
        for (std::size_t i = 0; i < all.size(); ++i) relabel_check(all.items[i], all.digests[i]);
    }
    const auto& dist = distributive_upto(kMaxCarrier);
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist.items[i].size() != kMaxCarrier) continue;
        ++r.instances;
        relabel_check(dist.items[i], dist.digests[i]);
    }

    const auto& spaces = spaces_upto(kMaxPoints);
    for (std::size_t c = 0; c < spaces.size(); ++c) {
        const auto& s = spaces.items[c];
        ++r.instances;
        const std::size_t m = s.base_count();
        std::vector<Mask> appended = s.betas(), doubled;
        appended.insert(appended.end(), s.betas().rbegin(), s.betas().rend());
        for (Mask b : s.betas()) doubled.insert(doubled.end(), {b, b});
        std::vector<std::size_t> even(m);
        for (std::size_t i = 0; i < m; ++i) even[i] = 2 * i;
        const std::pair<std::vector<Mask>, std::vector<std::size_t>> variants[] = {
            {s.betas(), identity_map(m)}, {appended, identity_map(m)}, {doubled, even}};
        for (const auto& [beta, kept] : variants) {
            ++r.cases;
            const auto noisy = SpaceWithBase::make(s.points(), beta);
            const auto inj = injectivize_base(noisy);
            if (!inj.space.injective() || inj.kept != kept || inj.space.opens() != noisy.opens() ||
                inj.space.betas() != s.betas()) {
                fail(r, with(spaces.digests[c], "injectivized base changes the topology or the kept indices"));
            }
        }
    }
}

// 10: codings.
void encoding(CriterionResult& r, const SuiteOptions& o) {
    constexpr Natural kExhaustive = Natural{1} << 16;
    for (Natural n = 0; n < kExhaustive; ++n) {
        const auto [x, y] = unpair(n);
        if (pair(x, y) != n) fail(r, "pair(unpair(" + std::to_string(n) + ")) differs");
        if (set_encode(set_decode(n)) != n) fail(r, "set code round trip fails at " + std::to_string(n));
    }
    r.cases += 2 * kExhaustive;
    Rng rng(o.seed);
    for (int i = 0; i < 100000; ++i) {
        const unsigned width = 17 + static_cast<unsigned>(rng.below(48));
        const Natural n = (width == 64 ? rng.below(~Natural{0}) : rng.below(Natural{1} << width)) | (Natural{1} << 16);
        const auto [x, y] = unpair(n);
        if (pair(x, y) != n) fail(r, "pair(unpair(" + std::to_string(n) + ")) differs");
        if (set_encode(set_decode(n)) != n) fail(r, "set code round trip fails at " + std::to_string(n));
        const Natural a = rng.below(Natural{1} << 31);
        const Natural b = rng.below(Natural{1} << 31);
        if (unpair(pair(a, b)) != std::pair{a, b}) fail(r, "unpair(pair(" + std::to_string(a) + ", " + std::to_string(b) + "))");
    }
    r.cases += 300000;
    for (int i = 0; i < 10000; ++i) {
        std::vector<Natural> codes;
        const auto size = 1 + rng.below(8);
        for (std::uint64_t e = 0; e < size; ++e) codes.push_back(pair(rng.below(8), rng.below(256)));
        const auto a = EnumOperatorCode::from_codes(codes);
        const auto big = static_cast<Mask>(rng.below(256));
        const Mask small = big & static_cast<Mask>(rng.below(256));
        auto as_set = [](Mask m) {
            std::vector<Natural> v;
            for (std::size_t x : members(m)) v.push_back(x);
            return FinSet(std::move(v));
        };
        if (!enum_apply(a, as_set(small)).subset_of(enum_apply(a, as_set(big)))) {
            fail(r, "enum_apply is not monotone");
        }
    }
    r.cases += 10000;
    r.instances = 3;
}

// 11: least / greatest base set against empty set / whole space in the base.
void base_biconditionals(CriterionResult& r, const SuiteOptions& o) {
    const auto& corpus = spaces_upto(kMaxPoints);
    for (std::size_t c = 0; c < corpus.size(); ++c) {
        if (!is_almost_sober(corpus.items[c], o.mode)) continue;
        ++r.instances;
        r.cases += 2;
        const auto cl = classify(corpus.items[c], o.mode);
        if (cl.zero_base != cl.has_empty) fail(r, with(corpus.digests[c], "0-base differs from empty set in base"));
        if (cl.one_base != cl.has_whole) fail(r, with(corpus.digests[c], "1-base differs from whole space in base"));
    }
}

}  // namespace

std::string criterion_name(int id) {
    static const char* names[] = {"",
                                  "primality criteria agree",
                                  "prime separation",
                                  "V_a identities",
                                  "TP round trip",
                                  "PT round trip",
                                  "Inc and operator translations",
                                  "dual morphisms and contravariance",
                                  "semilattice and lattice duality",
                                  "relabeling and injective bases",
                                  "pairing and set codes",
                                  "0-base and 1-base biconditionals",
                                  "CLI determinism"};
    if (id < 1 || id > 12) throw PreconditionError("no criterion " + std::to_string(id));
    return names[id];
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
    CriterionResult r;
    r.id = id;
    r.name = criterion_name(id);
    using Fn = void (*)(CriterionResult&, const SuiteOptions&);
    static const Fn fns[] = {nullptr, primality, separation, lphi, tp_round_trip, pt_round_trip, presentations,
                             morphisms, semilattices, plumbing, encoding, base_biconditionals};
    if (id < 1 || id > kSuiteCriteria) throw PreconditionError("criterion " + std::to_string(id) + " is not part of the suite");
    try {
        fns[id](r, options);
    } catch (const Error& e) {
        fail(r, std::string("aborted: ") + e.what());
    }
    return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kSuiteCriteria; ++id) out.push_back(run_criterion(id, options));
    return out;
}

nlohmann::json to_json(const CriterionResult& r) {
    nlohmann::json j = {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"instances", r.instances}, {"cases", r.cases}};
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

nlohmann::json suite_report(const std::vector<CriterionResult>& results, const SuiteOptions& options) {
    nlohmann::json criteria = nlohmann::json::array();
    bool pass = true;
    for (const auto& r : results) {
        criteria.push_back(to_json(r));
        pass = pass && r.pass;
    }
    return {{"report", "suite"}, {"mode", to_string(options.mode)}, {"seed", options.seed}, {"pass", pass}, {"criteria", criteria}};
}

}  // namespace stonewb
