#include "stonewb/duality.hpp"

#include <algorithm>
#include <string>

#include "stonewb/error.hpp"

namespace stonewb {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

std::optional<std::size_t> find_mask(const std::vector<Mask>& sorted, Mask m) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), m);
    if (it == sorted.end() || *it != m) return std::nullopt;
    return static_cast<std::size_t>(it - sorted.begin());
}

std::string map_string(const PositionMap& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += idx(f[i]);
    }
    return s + "]";
}

}  // namespace

PositionMap compose(const PositionMap& g, const PositionMap& f) {
    PositionMap h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = g.at(f[i]);
    return h;
}

PositionMap identity_map(std::size_t n) {
    PositionMap f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = i;
    return f;
}

CPoset functor_P_obj(const SpaceWithBase& s) {
    if (!s.injective()) throw PreconditionError("functor P: base map is not injective; injectivize the base first");
    const std::size_t m = s.base_count();
    require_exhaustive(m, "base");
    std::vector<Natural> labels(m);
    std::vector<Mask> below(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = i;
        for (std::size_t j = 0; j < m; ++j) {
            if (subset_of(s.beta(j), s.beta(i))) below[i] |= bit(j);
        }
    }
    return CPoset::make(FinitePoset::from_below(std::move(labels), std::move(below)),
                        operator_from_inc(inc_from_space(s)));
}

SpaceWithBase functor_T_obj(const CPoset& p) { return spectrum(p).underlying; }

PositionMap functor_P_mor(const PositionMap& f, const SpaceWithBase& s0, const SpaceWithBase& s1) {
    require_total(f, s0.point_count(), s1.point_count());
    PositionMap g(s1.base_count());
    for (std::size_t u = 0; u < s1.base_count(); ++u) {
        const Mask pre = preimage(f, s1.beta(u));
        const auto& betas = s0.betas();
        auto it = std::find(betas.begin(), betas.end(), pre);
        if (it == betas.end()) {
            throw PreconditionError("not spectral: preimage of base set " + idx(u) + " is " + s0.describe(pre) +
                                    ", not a base set");
        }
        g[u] = static_cast<std::size_t>(it - betas.begin());
    }
    return g;
}

EffectiveSpectralMap functor_T_mor(const PositionMap& f, const CPoset& p0, const CPoset& p1) {
    const auto strict = check_strict(p0, p1, f);
    if (!strict.pass) throw PreconditionError("not strict: " + strict.failure);
    const auto primes0 = enumerate_primes(p0);
    const auto primes1 = enumerate_primes(p1);
    EffectiveSpectralMap m;
    m.pointmap.resize(primes1.size());
    for (std::size_t j = 0; j < primes1.size(); ++j) {
        const auto at = find_mask(primes0, preimage(f, primes1[j]));
        if (!at) throw ConsistencyFault("functor T: preimage of a prime is missing from the spectrum");
        m.pointmap[j] = *at;
    }
    m.h = f;
    return m;
}

MorphismReport check_effective_spectral(const EffectiveSpectralMap& m, const SpaceWithBase& s0,
                                        const SpaceWithBase& s1) {
    if (m.pointmap.size() != s0.point_count()) return {false, "point map does not cover the source"};
    for (std::size_t x : m.pointmap) {
        if (x >= s1.point_count()) return {false, "point map leaves the target"};
    }
    if (m.h.size() != s1.base_count()) return {false, "witness does not cover the target base"};
    for (std::size_t i = 0; i < s1.base_count(); ++i) {
        if (m.h[i] >= s0.base_count()) return {false, "witness h(" + idx(i) + ") is not a source base index"};
        const Mask pre = preimage(m.pointmap, s1.beta(i));
        if (pre != s0.beta(m.h[i])) {
            return {false, "f^{-1}(C_" + idx(i) + ") = " + s0.describe(pre) + " but B_" + idx(m.h[i]) + " = " +
                               s0.describe(s0.beta(m.h[i]))};
        }
    }
    return {};
}

UnitReport unit_map(const SpaceWithBase& s, SoberMode mode) {
    UnitReport r;
    if (!s.injective()) throw PreconditionError("unit map: base map is not injective; injectivize the base first");
    const auto valid = validate_space(s, mode);
    if (!valid.pass()) {
        for (const auto& c : valid.checks) {
            if (!c.pass) return {false, "invalid input: " + c.name + " (" + c.witness + ")", {}, {}, {}};
        }
    }
    const auto sober = almost_sober_report(s);
    if (!sober.in(mode)) {
        const auto& w = mode == SoberMode::standard ? sober.standard_witness : sober.literal_witness;
        return {false, "not almost sober: " + w, {}, {}, {}};
    }
    const CPoset p = functor_P_obj(s);
    const auto dist = check_distributive(p);
    if (!dist.distributive) return {false, "P(X) is not distributive", {}, {}, {}};
    const auto spec = spectrum(p);
    r.spectrum = spec.underlying;
    const std::size_t n = s.point_count();
    const std::size_t m = s.base_count();
    PositionMap fx(n);
    std::vector<bool> hit(spec.primes.size(), false);
    for (std::size_t x = 0; x < n; ++x) {
        Mask missing = 0;
        for (std::size_t a = 0; a < m; ++a) {
            if (!contains(s.beta(a), x)) missing |= bit(a);
        }
        const auto at = find_mask(spec.primes, missing);
        if (!at) {
            r.pass = false;
            r.failure = "f_X(" + s.describe(bit(x)) + ") is not a prime ideal";
            return r;
        }
        if (hit[*at]) {
            r.pass = false;
            r.failure = "f_X not injective at point " + s.describe(bit(x));
            return r;
        }
        hit[*at] = true;
        fx[x] = *at;
    }
    for (std::size_t q = 0; q < hit.size(); ++q) {
        if (!hit[q]) {
            r.pass = false;
            r.failure = "f_X misses prime " + p.poset().describe(spec.primes[q]);
            return r;
        }
    }
    for (std::size_t a = 0; a < m; ++a) {
        if (preimage(fx, spec.underlying.beta(a)) != s.beta(a)) {
            r.pass = false;
            r.failure = "f_X^{-1}(V_" + idx(a) + ") != B_" + idx(a);
            return r;
        }
    }
    PositionMap inv(n);
    for (std::size_t x = 0; x < n; ++x) inv[fx[x]] = x;
    r.forward = {fx, identity_map(m)};
    r.inverse = {inv, identity_map(m)};
    for (const auto* em : {&r.forward, &r.inverse}) {
        const bool fwd = em == &r.forward;
        const auto check = fwd ? check_effective_spectral(*em, s, r.spectrum)
                               : check_effective_spectral(*em, r.spectrum, s);
        if (!check.pass) {
            r.pass = false;
            r.failure = std::string(fwd ? "forward" : "inverse") + " witness: " + check.failure;
            return r;
        }
    }
    return r;
}

CounitReport counit_map(const CPoset& p) {
    const auto spec = spectrum(p);
    if (!spec.underlying.injective()) throw ConsistencyFault("counit: V_a collide on a distributive source");
    const CPoset back = functor_P_obj(spec.underlying);
    CounitReport r;
    r.xi = identity_map(p.size());
    r.report = check_dp_isomorphism(back, p, r.xi);
    return r;
}

ValidationReport morphism_duality_check(const PositionMap& f, const SpaceWithBase& s0, const SpaceWithBase& s1) {
    ValidationReport r;
    const auto spectral = check_spectral(f, s0, s1);
    r.add("spectral", spectral.pass, spectral.failure);
    if (!spectral.pass) return r;
    const PositionMap g = functor_P_mor(f, s0, s1);
    const auto strict = check_strict(functor_P_obj(s1), functor_P_obj(s0), g);
    r.add("dual-strict", strict.pass, strict.pass ? map_string(g) : strict.failure);
    return r;
}

ValidationReport morphism_duality_check(const PositionMap& f, const CPoset& p0, const CPoset& p1) {
    ValidationReport r;
    const auto strict = check_strict(p0, p1, f);
    r.add("strict", strict.pass, strict.failure);
    if (!strict.pass) return r;
    const auto m = functor_T_mor(f, p0, p1);
    const auto t0 = functor_T_obj(p0);
    const auto t1 = functor_T_obj(p1);
    const auto spectral = check_spectral(m.pointmap, t1, t0);
    r.add("dual-spectral", spectral.pass, spectral.pass ? map_string(m.pointmap) : spectral.failure);
    const auto effective = check_effective_spectral(m, t1, t0);
    r.add("dual-effective", effective.pass, effective.failure);
    return r;
}

ValidationReport check_contravariance(const PositionMap& f, const PositionMap& g, const SpaceWithBase& s0,
                                      const SpaceWithBase& s1, const SpaceWithBase& s2) {
    ValidationReport r;
    const auto pf = functor_P_mor(f, s0, s1);
    const auto pg = functor_P_mor(g, s1, s2);
    const auto pgf = functor_P_mor(compose(g, f), s0, s2);
    const auto expect = compose(pf, pg);
    r.add("P(g o f) = P(f) o P(g)", pgf == expect, pgf == expect ? "" : map_string(pgf) + " vs " + map_string(expect));
    const auto pid = functor_P_mor(identity_map(s0.point_count()), s0, s0);
    r.add("P(id) = id", pid == identity_map(s0.base_count()), map_string(pid));
    return r;
}

ValidationReport check_contravariance(const PositionMap& f, const PositionMap& g, const CPoset& p0,
                                      const CPoset& p1, const CPoset& p2) {
    ValidationReport r;
    const auto tf = functor_T_mor(f, p0, p1);
    const auto tg = functor_T_mor(g, p1, p2);
    const auto tgf = functor_T_mor(compose(g, f), p0, p2);
    const auto expect = compose(tf.pointmap, tg.pointmap);
    r.add("T(g o f) = T(f) o T(g)", tgf.pointmap == expect,
          tgf.pointmap == expect ? "" : map_string(tgf.pointmap) + " vs " + map_string(expect));
    r.add("witness composes", tgf.h == compose(tg.h, tf.h), map_string(tgf.h));
    const auto tid = functor_T_mor(identity_map(p0.size()), p0, p0);
    const auto n = enumerate_primes(p0).size();
    r.add("T(id) = id", tid.pointmap == identity_map(n), map_string(tid.pointmap));
    return r;
}

bool is_downset_cposet(const CPoset& p, Mask* witness) {
    require_exhaustive(p.size(), "carrier");
    const std::size_t count = std::size_t{1} << p.size();
    for (std::size_t i = 0; i < count; ++i) {
        const auto x = static_cast<Mask>(i);
        if (p.closure(x) != p.poset().down_closure(x)) {
            if (witness) *witness = x;
            return false;
        }
    }
    return true;
}

LdsReport check_lds(const CPoset& p0, const CPoset& p1, const PositionMap& xi) {
    LdsReport r;
    const auto iso = check_dp_isomorphism(p0, p1, xi);
    r.isomorphism = iso.pass;
    Mask w = 0;
    r.target_downset = is_downset_cposet(p1, &w);
    std::string target_failure = r.target_downset ? "" : "phi1 differs from the down-set at " + p1.poset().describe(w);
    r.conclusion = is_downset_cposet(p0, &w);
    if (!r.isomorphism) {
        r.failure = "not a DP-isomorphism: " + iso.failure;
    } else if (!r.target_downset) {
        r.failure = target_failure;
    } else if (!r.conclusion) {
        r.failure = "phi0 differs from the down-set at " + p0.poset().describe(w);
    }
    return r;
}

}  // namespace stonewb
