#include "stonewb/space.hpp"

#include <algorithm>
#include <sstream>

#include "stonewb/error.hpp"
#include "stonewb/kernels.hpp"

namespace stonewb {

std::string to_string(SoberMode mode) {
    return mode == SoberMode::standard ? "standard" : "strict-literal";
}

SoberMode sober_mode_from_string(const std::string& s) {
    if (s == "standard") return SoberMode::standard;
    if (s == "strict-literal") return SoberMode::strict_literal;
    throw InputError("unknown sobriety mode '" + s + "' (standard|strict-literal)");
}

SpaceWithBase SpaceWithBase::make(std::vector<Natural> points, std::vector<Mask> beta) {
    std::vector<Natural> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("space: duplicate point");
    }
    if (sorted != points) throw InputError("space: points must be given ascending");
    require_exhaustive(points.size(), "point set");
    if (beta.size() > 64) throw SizeError("space: more than 64 base indices");
    const Mask all = full_mask(points.size());
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (!subset_of(beta[i], all)) {
            throw InputError("space: base set " + std::to_string(i) + " contains unknown points");
        }
    }
    SpaceWithBase s;
    s.points_ = std::move(points);
    s.beta_ = std::move(beta);
    return s;
}

SpaceWithBase SpaceWithBase::from_lists(std::vector<Natural> points,
                                        const std::vector<std::vector<Natural>>& base_sets,
                                        const std::vector<std::size_t>& beta_ids) {
    std::sort(points.begin(), points.end());
    auto position = [&](Natural x) -> std::size_t {
        auto it = std::lower_bound(points.begin(), points.end(), x);
        if (it == points.end() || *it != x) {
            throw InputError("space: base set mentions point " + std::to_string(x) + " outside the point set");
        }
        return static_cast<std::size_t>(it - points.begin());
    };
    std::vector<Mask> sets;
    for (const auto& list : base_sets) {
        Mask m = 0;
        for (Natural x : list) m |= bit(position(x));
        sets.push_back(m);
    }
    std::vector<Mask> beta;
    if (beta_ids.empty()) {
        beta = sets;
    } else {
        for (std::size_t i = 0; i < beta_ids.size(); ++i) {
            if (beta_ids[i] >= sets.size()) {
                throw InputError("space: beta[" + std::to_string(i) + "] = " + std::to_string(beta_ids[i]) +
                                 " is out of range (" + std::to_string(sets.size()) + " base sets)");
            }
            beta.push_back(sets[beta_ids[i]]);
        }
    }
    return make(std::move(points), std::move(beta));
}

bool SpaceWithBase::injective() const {
    auto d = distinct_base();
    return d.size() == beta_.size();
}

bool SpaceWithBase::in_base(Mask u) const { return std::find(beta_.begin(), beta_.end(), u) != beta_.end(); }

std::vector<Mask> SpaceWithBase::distinct_base() const {
    std::vector<Mask> d = beta_;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

std::vector<Mask> SpaceWithBase::opens() const {
    std::vector<char> seen(std::size_t{1} << point_count(), 0);
    std::vector<Mask> out{0};
    seen[0] = 1;
    for (Mask b : distinct_base()) {
        const std::size_t before = out.size();
        for (std::size_t i = 0; i < before; ++i) {
            const Mask u = out[i] | b;
            if (!seen[u]) {
                seen[u] = 1;
                out.push_back(u);
            }
        }
    }
    if (!seen[all()]) out.push_back(all());
    std::sort(out.begin(), out.end());
    return out;
}

Mask SpaceWithBase::closure_of(Mask x) const {
    if (x == 0) return 0;
    Mask open = 0;
    for (Mask b : beta_) {
        if ((b & x) == 0) open |= b;
    }
    return all() & ~open;
}

std::string SpaceWithBase::describe(Mask x) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (std::size_t i : members(x)) {
        os << (first ? "" : ",") << points_[i];
        first = false;
    }
    os << '}';
    return os.str();
}

namespace {

bool family_down_directed(const std::vector<Mask>& f) {
    if (f.empty()) return false;
    for (Mask u : f) {
        for (Mask v : f) {
            bool found = false;
            for (Mask w : f) {
                if (subset_of(w, u & v)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

bool family_up_directed(const std::vector<Mask>& f) {
    if (f.empty()) return false;
    for (Mask u : f) {
        for (Mask v : f) {
            bool found = false;
            for (Mask w : f) {
                if (subset_of(u | v, w)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

bool has_least(const std::vector<Mask>& f) {
    return std::any_of(f.begin(), f.end(), [&](Mask w) {
        return std::all_of(f.begin(), f.end(), [&](Mask u) { return subset_of(w, u); });
    });
}

bool has_greatest(const std::vector<Mask>& f) {
    return std::any_of(f.begin(), f.end(), [&](Mask w) {
        return std::all_of(f.begin(), f.end(), [&](Mask u) { return subset_of(u, w); });
    });
}

bool closed_under(const std::vector<Mask>& f, bool intersections) {
    for (Mask u : f) {
        for (Mask v : f) {
            const Mask r = intersections ? (u & v) : (u | v);
            if (!std::binary_search(f.begin(), f.end(), r)) return false;
        }
    }
    return true;
}

// Closed sets are complements of opens. Checks every nonempty closed set
// (proper ones only when `proper_only`): under the standard reading only
// irreducible ones must be point closures.
void sobriety(const SpaceWithBase& s, bool proper_only, SobrietyReport& r) {
    const Mask all = s.all();
    std::vector<Mask> point_closure(s.point_count());
    for (std::size_t x = 0; x < s.point_count(); ++x) point_closure[x] = s.closure_of(bit(x));
    for (Mask open : s.opens()) {
        const Mask f = all & ~open;
        if (f == 0 || (proper_only && f == all)) continue;
        bool is_point_closure = false;
        Mask proper_union = 0;
        for (std::size_t x : members(f)) {
            if (point_closure[x] == f) {
                is_point_closure = true;
            } else {
                proper_union |= point_closure[x];
            }
        }
        if (is_point_closure) continue;
        // every proper closed subset of f is a union of such point closures
        const bool irreducible = proper_union != f;
        if (r.strict_literal) {
            r.strict_literal = false;
            r.literal_witness = "closed " + s.describe(f) + " is not the closure of a point";
        }
        if (irreducible && r.standard) {
            r.standard = false;
            r.standard_witness = "irreducible closed " + s.describe(f) + " is not the closure of a point";
        }
    }
}

}  // namespace

SobrietyReport almost_sober_report(const SpaceWithBase& s) {
    SobrietyReport r;
    sobriety(s, true, r);
    return r;
}

bool is_almost_sober(const SpaceWithBase& s, SoberMode mode) { return almost_sober_report(s).in(mode); }

SobrietyReport sober_report(const SpaceWithBase& s) {
    SobrietyReport r;
    sobriety(s, false, r);
    return r;
}

ValidationReport validate_space(const SpaceWithBase& s, SoberMode mode) {
    ValidationReport r;
    const std::size_t n = s.point_count();

    std::string t0;
    for (std::size_t x = 0; x < n && t0.empty(); ++x) {
        for (std::size_t y = x + 1; y < n && t0.empty(); ++y) {
            bool separated = false;
            for (Mask b : s.betas()) {
                if (contains(b, x) != contains(b, y)) {
                    separated = true;
                    break;
                }
            }
            if (!separated) t0 = "points " + std::to_string(s.point(x)) + " and " + std::to_string(s.point(y)) + " are not separated";
        }
    }
    r.add("T0", t0.empty(), t0);

    Mask cover = 0;
    for (Mask b : s.betas()) cover |= b;
    r.add("basis-covers", cover == s.all(), cover == s.all() ? "" : "uncovered points " + s.describe(s.all() & ~cover));

    const auto base = s.distinct_base();
    std::string inter;
    for (std::size_t i = 0; i < base.size() && inter.empty(); ++i) {
        for (std::size_t j = i + 1; j < base.size() && inter.empty(); ++j) {
            const Mask uv = base[i] & base[j];
            Mask covered = 0;
            for (Mask w : base) {
                if (subset_of(w, uv)) covered |= w;
            }
            if (covered != uv) inter = s.describe(base[i]) + " & " + s.describe(base[j]) + " is not a union of base sets";
        }
    }
    r.add("basis-intersections", inter.empty(), inter);

    const bool sober = sober_report(s).in(mode);
    const bool has_empty = std::binary_search(base.begin(), base.end(), Mask{0});
    const bool down = family_down_directed(base);
    const bool zero_ok = has_empty == (sober && down);
    r.add("empty-in-base-iff-sober-and-down-directed", zero_ok,
          zero_ok ? "" : std::string("empty in base: ") + (has_empty ? "yes" : "no") + ", sober: " + (sober ? "yes" : "no") +
                             ", down-directed: " + (down ? "yes" : "no"));

    const bool has_whole = std::binary_search(base.begin(), base.end(), s.all());
    const bool up = family_up_directed(base);
    const bool one_ok = has_whole == up;  // finite spaces are compact
    r.add("whole-in-base-iff-compact-and-up-directed", one_ok,
          one_ok ? "" : std::string("whole space in base: ") + (has_whole ? "yes" : "no") + ", up-directed: " + (up ? "yes" : "no"));
    return r;
}

FinitePoset specialization_order(const SpaceWithBase& s) {
    std::vector<Mask> below(s.point_count());
    for (std::size_t x = 0; x < s.point_count(); ++x) below[x] = s.closure_of(bit(x));
    return FinitePoset::from_below(s.points(), std::move(below));
}

Classification classify(const SpaceWithBase& s, SoberMode mode) {
    Classification c;
    c.mode = mode;
    const auto base = s.distinct_base();
    c.valid = validate_space(s, mode).pass();
    c.has_empty = std::binary_search(base.begin(), base.end(), Mask{0});
    c.has_whole = std::binary_search(base.begin(), base.end(), s.all());
    c.up_directed = family_up_directed(base);
    c.down_directed = family_down_directed(base);
    c.zero_base = has_least(base);
    c.one_base = has_greatest(base);
    c.multiplicative = closed_under(base, true);
    c.additive = closed_under(base, false);
    c.almost_sober = is_almost_sober(s, mode);
    if (c.valid && c.almost_sober) {
        auto add_family = [&](const std::string& stem, const std::string& both) {
            c.cells.push_back(stem);
            if (c.zero_base) c.cells.push_back(stem + "_s");
            if (c.one_base) c.cells.push_back(stem + "_c");
            if (c.zero_base && c.one_base) c.cells.push_back(both);
        };
        add_family("AS", "S");
        if (c.multiplicative) add_family("ASp", "Sp");
        if (c.additive) add_family("AsSpec", "sSpec");
        if (c.multiplicative && c.additive) add_family("ASpec", "Spec");
    }
    return c;
}

bool IncPredicate::contains(std::size_t i, Natural k) const {
    return std::binary_search(entries.begin(), entries.end(), std::pair<std::size_t, Natural>{i, k});
}

Natural full_maxk(std::size_t index_count) {
    return index_count >= 64 ? ~Natural{0} : (Natural{1} << index_count) - 1;
}

IncPredicate inc_from_space(const SpaceWithBase& s, Natural maxk) {
    const std::size_t m = s.base_count();
    require_exhaustive(m, "base index set");
    IncPredicate inc;
    inc.index_count = m;
    const Natural limit = full_maxk(m);
    const Natural top = std::min(maxk, limit);
    if (maxk > limit) {
        inc.skipped_from = limit + 1;
        inc.skipped_count = maxk - limit;
    }
    const auto unions = kernels::parallel::union_table(s.betas());
    for (std::size_t i = 0; i < m; ++i) {
        for (Natural k = 1; k <= top; ++k) {
            if (subset_of(s.beta(i), unions[k])) inc.entries.emplace_back(i, k);
        }
    }
    return inc;
}

MorphismReport check_spectral(const PositionMap& f, const SpaceWithBase& s0, const SpaceWithBase& s1) {
    require_total(f, s0.point_count(), s1.point_count());
    for (std::size_t j = 0; j < s1.base_count(); ++j) {
        const Mask pre = preimage(f, s1.beta(j));
        if (!s0.in_base(pre)) {
            return {false, "preimage of base set " + std::to_string(j) + " = " + s1.describe(s1.beta(j)) + " is " +
                               s0.describe(pre) + ", not a base set"};
        }
    }
    return {};
}

}  // namespace stonewb
