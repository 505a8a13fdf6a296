#include "stonewb/spectrum.hpp"

#include <algorithm>
#include <string>

#include "stonewb/error.hpp"
#include "stonewb/kernels.hpp"

namespace stonewb {

SpectrumSpace spectrum(const CPoset& p) {
    const auto dist = check_distributive(p);
    if (!dist.distributive) {
        const auto& w = *dist.witness;
        const auto& ps = p.poset();
        throw PreconditionError("spectrum: source is not distributive (x = " + ps.describe(w[0]) +
                                ", y = " + ps.describe(w[1]) + ", z = " + ps.describe(w[2]) + ")");
    }
    SpectrumSpace s;
    s.primes = enumerate_primes(p);
    s.source_labels = p.poset().labels();
    std::vector<Natural> points(s.primes.size());
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = i;
    std::vector<Mask> beta(p.size(), 0);
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t q = 0; q < s.primes.size(); ++q) {
            if (!contains(s.primes[q], a)) beta[a] |= bit(q);
        }
    }
    s.underlying = SpaceWithBase::make(std::move(points), std::move(beta));
    const auto report = validate_space(s.underlying);
    s.basis_verified = report.find("basis-covers")->pass && report.find("basis-intersections")->pass;
    return s;
}

Mask v_of_set(const SpectrumSpace& s, Mask x) {
    Mask v = 0;
    for (std::size_t a : members(x)) v |= s.underlying.beta(a);
    return v;
}

Mask v_of_set(const CPoset& p, Mask x) {
    // straight from the definition, without building the space
    const auto primes = enumerate_primes(p);
    Mask v = 0;
    for (std::size_t q = 0; q < primes.size(); ++q) {
        if (!subset_of(x, primes[q])) v |= bit(q);
    }
    return v;
}

bool LphiReport::pass() const {
    return std::all_of(parts.begin(), parts.end(), [](const LphiPart& p) { return p.pass; });
}

namespace {

LphiPart part(std::string name) {
    LphiPart p;
    p.name = std::move(name);
    return p;
}

}  // namespace

LphiReport check_lphi(const CPoset& p) {
    require_exhaustive(p.size(), "carrier");
    const auto s = spectrum(p);
    const FinitePoset& ps = p.poset();
    const std::size_t n = p.size();
    const std::size_t subsets = std::size_t{1} << n;
    auto V = [&](std::size_t a) { return s.underlying.beta(a); };
    auto lbl = [&](std::size_t a) { return std::to_string(ps.label(a)); };
    LphiReport r;

    LphiPart i = part("(i) V_X = V_phi(X)");
    for (std::size_t x = 0; x < subsets; ++x) {
        ++i.cases;
        const auto xm = static_cast<Mask>(x);
        if (v_of_set(s, xm) != v_of_set(s, p.closure(xm)) && i.pass) {
            i.pass = false;
            i.counterexample = "X = " + ps.describe(xm);
        }
    }

    // X ranges over nonempty sets: the argument needs a nonempty ideal
    // phi(X), and with X empty the statement fails as soon as P has a
    // least element (every prime contains it, so V_bottom = V_empty).
    LphiPart ii = part("(ii) V_a within V_X iff a in phi(X), X nonempty");
    for (std::size_t a = 0; a < n; ++a) {
        if (V(a) == 0) r.empty_boundary_fails = true;
    }
    for (std::size_t x = 1; x < subsets; ++x) {
        const auto xm = static_cast<Mask>(x);
        const Mask vx = v_of_set(s, xm);
        const Mask cl = p.closure(xm);
        for (std::size_t a = 0; a < n; ++a) {
            ++ii.cases;
            if (subset_of(V(a), vx) != contains(cl, a) && ii.pass) {
                ii.pass = false;
                ii.counterexample = "a = " + lbl(a) + ", X = " + ps.describe(xm);
            }
        }
    }

    LphiPart iii = part("(iii) V_a within V_b iff a <= b");
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            ++iii.cases;
            if (subset_of(V(a), V(b)) != ps.leq(a, b) && iii.pass) {
                iii.pass = false;
                iii.counterexample = "a = " + lbl(a) + ", b = " + lbl(b);
            }
        }
    }

    LphiPart iv = part("(iv) V_a & V_b = V_c iff a meet b = c");
    LphiPart v = part("(v) V_a | V_b = V_c iff a join b = c");
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const auto m = ps.meet(a, b);
            const auto j = ps.join(a, b);
            const bool gated = !j || contains(p.closure(bit(a) | bit(b)), *j);
            if (!gated) r.join_hypothesis = false;
            for (std::size_t c = 0; c < n; ++c) {
                ++iv.cases;
                if (((V(a) & V(b)) == V(c)) != (m && *m == c) && iv.pass) {
                    iv.pass = false;
                    iv.counterexample = "a = " + lbl(a) + ", b = " + lbl(b) + ", c = " + lbl(c);
                }
                if (!gated) continue;
                ++v.cases;
                if (((V(a) | V(b)) == V(c)) != (j && *j == c) && v.pass) {
                    v.pass = false;
                    v.counterexample = "a = " + lbl(a) + ", b = " + lbl(b) + ", c = " + lbl(c);
                }
            }
        }
    }
    v.applicable = v.cases > 0 || n == 0;
    r.parts = {i, ii, iii, iv, v};
    return r;
}

IncPredicate inc_from_operator(const EnumOperatorCode& code, const std::vector<Natural>& carrier, Natural maxk) {
    std::vector<Natural> labels = carrier;
    std::sort(labels.begin(), labels.end());
    const std::size_t n = labels.size();
    require_exhaustive(n, "carrier");
    auto position = [&](Natural x) {
        auto it = std::lower_bound(labels.begin(), labels.end(), x);
        if (it == labels.end() || *it != x) {
            throw InputError("inc_from_operator: element " + std::to_string(x) + " outside the carrier");
        }
        return static_cast<std::size_t>(it - labels.begin());
    };
    std::vector<kernels::CompiledEntry> entries;
    for (const auto& e : code.entries()) {
        Mask need = 0;
        for (Natural y : set_decode(e.k)) need |= bit(position(y));
        if (need == 0) continue;
        entries.push_back({position(e.x), need});
    }
    // reach[k] holds every i with some nonempty D_k' within D_k
    const auto reach = kernels::parallel::closure_table(n, entries);
    IncPredicate inc;
    inc.index_count = n;
    const Natural limit = full_maxk(n);
    const Natural top = std::min(maxk, limit);
    if (maxk > limit) {
        inc.skipped_from = limit + 1;
        inc.skipped_count = maxk - limit;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (Natural k = 1; k <= top; ++k) {
            if (contains(reach[k], i)) inc.entries.emplace_back(i, k);
        }
    }
    return inc;
}

IncPredicate inc_from_operator(const CPoset& p, Natural maxk) {
    return inc_from_operator(p.code(), p.poset().labels(), maxk);
}

EnumOperatorCode operator_from_inc(const IncPredicate& inc) {
    std::vector<Natural> codes;
    codes.reserve(inc.entries.size());
    for (auto [j, k] : inc.entries) codes.push_back(pair(j, k));
    return EnumOperatorCode::from_codes(std::move(codes));
}

}  // namespace stonewb
