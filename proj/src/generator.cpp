#include "stonewb/generator.hpp"

#include <algorithm>
#include <bitset>
#include <cstdio>
#include <numeric>
#include <set>
#include <string>

#include "stonewb/error.hpp"

namespace stonewb {

namespace {

constexpr std::size_t kPosetLimit = 6;
constexpr std::size_t kCposetLimit = 5;
constexpr std::size_t kRandomCposetLimit = 8;
constexpr std::size_t kPointLimit = 5;
constexpr std::size_t kBaseLimit = 6;

using Family = std::bitset<256>;  // members of an intersection-closed family, by mask

void refuse_above(std::size_t n, std::size_t limit, const char* what) {
    if (n > limit) {
        throw SizeError(std::string(what) + ": exhaustive generation stops at " + std::to_string(limit) + ", got " +
                        std::to_string(n));
    }
}

std::vector<Natural> iota_labels(std::size_t n) {
    std::vector<Natural> v(n);
    std::iota(v.begin(), v.end(), Natural{0});
    return v;
}

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(v));
    return buf;
}

struct Canonical {
    std::uint64_t key = ~std::uint64_t{0};
    PositionMap perm;  // new position -> old position
};

Canonical canonical_form(const std::vector<Mask>& below) {
    const std::size_t n = below.size();
    PositionMap perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Canonical best;
    do {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) key = (key << 1) | contains(below[perm[j]], perm[i]);
        }
        if (key < best.key || best.perm.empty()) {
            best.key = key;
            best.perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Mask> apply_perm(const std::vector<Mask>& below, const PositionMap& perm) {
    // position i of the result is position perm[i] of the source
    const std::size_t n = below.size();
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    std::vector<Mask> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a : members(below[perm[i]])) out[i] |= bit(inv[a]);
    }
    return out;
}

std::string digest_of(std::size_t n, std::uint64_t key) { return std::to_string(n) + ":" + hex(key); }

void transitive_close(std::vector<Mask>& below) {
    const std::size_t n = below.size();
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t b = 0; b < n; ++b) {
            Mask m = below[b];
            for (std::size_t a : members(below[b])) m |= below[a];
            if (m != below[b]) {
                below[b] = m;
                grew = true;
            }
        }
    }
}

/// Every labeled poset on k+1 elements from one on k: the new element gets
/// a down-set D below it and an up-set U above it, D below all of U.
void extend_all(const std::vector<Mask>& below, bool natural, std::vector<std::vector<Mask>>& out) {
    const std::size_t k = below.size();
    const std::size_t subsets = std::size_t{1} << k;
    auto is_down = [&](Mask d) {
        for (std::size_t x : members(d)) {
            if (!subset_of(below[x], d)) return false;
        }
        return true;
    };
    auto is_up = [&](Mask u) {
        for (std::size_t y = 0; y < k; ++y) {
            if (contains(u, y)) continue;
            for (std::size_t x : members(u)) {
                if (contains(below[y], x)) return false;
            }
        }
        return true;
    };
    for (std::size_t d = 0; d < subsets; ++d) {
        const auto dm = static_cast<Mask>(d);
        if (!is_down(dm)) continue;
        for (std::size_t u = 0; u < (natural ? 1 : subsets); ++u) {
            const auto um = static_cast<Mask>(u);
            if (dm & um) continue;
            if (!is_up(um)) continue;
            bool ok = true;
            for (std::size_t y : members(um)) {
                if (!subset_of(dm, below[y])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<Mask> next = below;
            for (std::size_t y : members(um)) next[y] |= bit(k);
            next.push_back(dm | bit(k));
            out.push_back(std::move(next));
        }
    }
}

std::vector<std::vector<Mask>> all_relations(std::size_t n, bool natural) {
    std::vector<std::vector<Mask>> level{{}};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::vector<Mask>> next;
        for (const auto& b : level) extend_all(b, natural, next);
        level = std::move(next);
    }
    return level;
}

std::vector<PositionMap> automorphisms(const FinitePoset& p) {
    const std::size_t n = p.size();
    PositionMap perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<PositionMap> out;
    do {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            for (std::size_t b = 0; b < n && ok; ++b) ok = p.leq(a, b) == p.leq(perm[a], perm[b]);
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<Mask> family_members(const Family& f, std::size_t n) {
    std::vector<Mask> v;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
        if (f[m]) v.push_back(static_cast<Mask>(m));
    }
    return v;
}

Family add_member(Family f, Mask d, std::size_t n) {
    Family next = f;
    next.set(d);
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
        if (f[m]) next.set(static_cast<Mask>(m) & d);
    }
    return next;
}

/// The least family: empty set, carrier, every principal down-set, closed
/// under intersection.
Family base_family(const FinitePoset& p) {
    const std::size_t n = p.size();
    Family f;
    f.set(0);
    f = add_member(f, p.all(), n);
    for (std::size_t x = 0; x < n; ++x) f = add_member(f, p.below(x), n);
    return f;
}

CPoset cposet_from_family(const FinitePoset& p, const Family& f) {
    const std::size_t n = p.size();
    const auto sets = family_members(f, n);
    std::vector<Mask> table(std::size_t{1} << n);
    for (std::size_t x = 0; x < table.size(); ++x) {
        Mask c = p.all();
        for (Mask m : sets) {
            if (subset_of(static_cast<Mask>(x), m)) c &= m;
        }
        table[x] = c;
    }
    return CPoset::make(p, operator_from_closure(p, table));
}

std::vector<Mask> down_sets(const FinitePoset& p) {
    std::vector<Mask> out;
    for (std::size_t m = 0; m < (std::size_t{1} << p.size()); ++m) {
        if (p.is_down_set(static_cast<Mask>(m))) out.push_back(static_cast<Mask>(m));
    }
    return out;
}

std::string family_digest(const Family& f, std::size_t n) {
    std::string s;
    for (Mask m : family_members(f, n)) s += (s.empty() ? "" : ".") + hex(m);
    return s;
}

InstanceStream<CPoset> cposets_impl(std::size_t n, bool distributive_only) {
    refuse_above(n, kCposetLimit, "c-posets");
    InstanceStream<CPoset> out;
    out.kind = distributive_only ? "distributive-cposet" : "cposet";
    out.size_bound = n;
    const auto posets = gen_posets(n, PosetMode::canonical);
    for (std::size_t pi = 0; pi < posets.size(); ++pi) {
        const FinitePoset& p = posets.items[pi];
        const auto autos = automorphisms(p);
        const Family start = base_family(p);
        std::vector<Mask> cands;
        for (Mask d : down_sets(p)) {
            if (!start[d]) cands.push_back(d);
        }
        std::vector<Family> families;
        // include / exclude each candidate down-set; an inclusion is pruned
        // when closing under intersection would pull in an excluded one
        auto rec = [&](auto&& self, std::size_t i, const Family& f, const Family& excluded) -> void {
            if (i == cands.size()) {
                families.push_back(f);
                return;
            }
            const Mask d = cands[i];
            if (f[d]) {
                self(self, i + 1, f, excluded);
                return;
            }
            Family ex = excluded;
            ex.set(d);
            self(self, i + 1, f, ex);
            const Family g = add_member(f, d, n);
            if ((g & excluded).none()) self(self, i + 1, g, excluded);
        };
        rec(rec, 0, start, Family{});

        const std::size_t subsets = std::size_t{1} << n;
        std::vector<std::vector<Mask>> moved;
        for (const auto& a : autos) {
            std::vector<Mask> t(subsets);
            for (std::size_t m = 0; m < subsets; ++m) t[m] = image(a, static_cast<Mask>(m));
            moved.push_back(std::move(t));
        }
        std::vector<Mask> img;
        for (const Family& f : families) {
            // keep the family only when no automorphism maps it to a
            // lexicographically smaller member list
            const auto own = family_members(f, n);
            bool least = true;
            for (std::size_t a = 1; a < moved.size() && least; ++a) {
                img.clear();
                for (Mask m : own) img.push_back(moved[a][m]);
                std::sort(img.begin(), img.end());
                least = !(img < own);
            }
            if (!least) continue;
            CPoset c = cposet_from_family(p, f);
            if (distributive_only && !is_distributive(c)) continue;
            out.items.push_back(std::move(c));
            out.digests.push_back(posets.digests[pi] + "/" + family_digest(f, n));
        }
    }
    return out;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("Rng::below: empty range");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold) return x % bound;
    }
}

std::string canonical_digest(const FinitePoset& p) {
    if (p.size() > 8) throw SizeError("canonical digest: at most 8 elements");
    return digest_of(p.size(), canonical_form(p.below_table()).key);
}

InstanceStream<FinitePoset> gen_posets(std::size_t n, PosetMode mode) {
    refuse_above(n, kPosetLimit, "posets");
    InstanceStream<FinitePoset> out;
    out.kind = mode == PosetMode::labeled ? "labeled-poset" : "poset";
    out.size_bound = n;
    if (mode == PosetMode::labeled) {
        for (auto& below : all_relations(n, false)) {
            out.digests.push_back(digest_of(n, canonical_form(below).key));
            out.items.push_back(FinitePoset::from_below(iota_labels(n), std::move(below)));
        }
        return out;
    }
    std::set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, std::vector<Mask>>> reps;
    for (const auto& below : all_relations(n, true)) {
        const auto c = canonical_form(below);
        if (seen.insert(c.key).second) reps.emplace_back(c.key, apply_perm(below, c.perm));
    }
    std::sort(reps.begin(), reps.end());
    for (auto& [key, below] : reps) {
        out.items.push_back(FinitePoset::from_below(iota_labels(n), std::move(below)));
        out.digests.push_back(digest_of(n, key));
    }
    return out;
}

namespace {

FinitePoset random_poset(std::size_t n, Rng& rng) {
    PositionMap order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<Mask> below(n);
    for (std::size_t i = 0; i < n; ++i) below[i] = bit(i);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.coin()) below[order[j]] |= bit(order[i]);
        }
    }
    transitive_close(below);
    return FinitePoset::from_below(iota_labels(n), std::move(below));
}

}  // namespace

InstanceStream<FinitePoset> gen_posets_random(std::size_t n, std::size_t count, std::uint64_t seed) {
    refuse_above(n, kRandomCposetLimit, "random posets");
    InstanceStream<FinitePoset> out;
    out.kind = "random-poset";
    out.size_bound = n;
    out.seed = seed;
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        out.items.push_back(random_poset(n, rng));
        out.digests.push_back(canonical_digest(out.items.back()));
    }
    return out;
}

InstanceStream<CPoset> gen_distributive_cposets(std::size_t n) { return cposets_impl(n, true); }

InstanceStream<CPoset> gen_cposets(std::size_t n) { return cposets_impl(n, false); }

InstanceStream<CPoset> gen_distributive_cposets_random(std::size_t max_n, std::size_t count, std::uint64_t seed) {
    refuse_above(max_n, kRandomCposetLimit, "random c-posets");
    if (max_n == 0) throw PreconditionError("random c-posets: need at least one element");
    InstanceStream<CPoset> out;
    out.kind = "random-distributive-cposet";
    out.size_bound = max_n;
    out.seed = seed;
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + rng.below(max_n);
        const FinitePoset p = random_poset(n, rng);
        std::optional<CPoset> found;
        std::string tag;
        for (int attempt = 0; attempt < 32 && !found; ++attempt) {
            Family f = base_family(p);
            const auto extra = rng.below(4);
            for (std::uint64_t e = 0; e < extra; ++e) {
                const auto m = static_cast<Mask>(rng.below(std::uint64_t{1} << n));
                f = add_member(f, p.down_closure(m), n);
            }
            CPoset c = cposet_from_family(p, f);
            if (is_distributive(c)) {
                found = std::move(c);
                tag = family_digest(f, n);
            }
        }
        if (!found) {
            // the full down-set family is always distributive
            Family f;
            for (Mask d : down_sets(p)) f.set(d);
            found = cposet_from_family(p, f);
            tag = "down";
        }
        out.digests.push_back(canonical_digest(p) + "/" + tag);
        out.items.push_back(std::move(*found));
    }
    return out;
}

InstanceStream<SpaceWithBase> gen_spaces(std::size_t n_points, std::size_t n_base, bool valid_only) {
    refuse_above(n_points, kPointLimit, "spaces (points)");
    refuse_above(n_base, kBaseLimit, "spaces (base sets)");
    InstanceStream<SpaceWithBase> out;
    out.kind = valid_only ? "space" : "base-family";
    out.size_bound = n_points;
    const std::size_t subsets = std::size_t{1} << n_points;
    if (n_base > subsets) return out;
    const Mask all = full_mask(n_points);

    std::vector<std::vector<Mask>> perm_tables;
    {
        PositionMap perm(n_points);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        do {
            std::vector<Mask> t(subsets);
            for (std::size_t m = 0; m < subsets; ++m) t[m] = image(perm, static_cast<Mask>(m));
            perm_tables.push_back(std::move(t));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<Mask> chosen;
    std::vector<Mask> img(n_base);
    auto emit = [&] {
        if (valid_only) {
            Mask cover = 0;
            for (Mask b : chosen) cover |= b;
            if (cover != all) return;
            // T0: the base-membership signatures of the points are distinct
            std::vector<std::uint32_t> sig(n_points, 0);
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                for (std::size_t x : members(chosen[i])) sig[x] |= 1U << i;
            }
            std::sort(sig.begin(), sig.end());
            if (std::adjacent_find(sig.begin(), sig.end()) != sig.end()) return;
        }
        for (const auto& t : perm_tables) {
            for (std::size_t i = 0; i < n_base; ++i) img[i] = t[chosen[i]];
            std::sort(img.begin(), img.end());
            if (img < chosen) return;
        }
        SpaceWithBase s = SpaceWithBase::make(iota_labels(n_points), chosen);
        if (valid_only && !validate_space(s).pass()) return;
        std::string d = std::to_string(n_points) + ":";
        for (std::size_t i = 0; i < chosen.size(); ++i) d += (i ? "." : "") + hex(chosen[i]);
        out.digests.push_back(std::move(d));
        out.items.push_back(std::move(s));
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (chosen.size() == n_base) {
            emit();
            return;
        }
        for (std::size_t m = from; m + (n_base - chosen.size()) <= subsets; ++m) {
            chosen.push_back(static_cast<Mask>(m));
            self(self, m + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

InstanceStream<SpaceWithBase> gen_spaces_upto(std::size_t max_points, std::size_t max_base) {
    InstanceStream<SpaceWithBase> out;
    out.kind = "space";
    out.size_bound = max_points;
    for (std::size_t p = 0; p <= max_points; ++p) {
        for (std::size_t b = 0; b <= max_base; ++b) {
            auto part = gen_spaces(p, b);
            for (std::size_t i = 0; i < part.size(); ++i) {
                out.items.push_back(std::move(part.items[i]));
                out.digests.push_back(std::move(part.digests[i]));
            }
        }
    }
    return out;
}

InstanceStream<Lattice> gen_lattices(std::size_t n) {
    InstanceStream<Lattice> out;
    out.kind = "lattice";
    out.size_bound = n;
    const auto posets = gen_posets(n, PosetMode::canonical);
    for (std::size_t i = 0; i < posets.size(); ++i) {
        if (auto l = lattice_from_order(posets.items[i])) {
            out.items.push_back(std::move(*l));
            out.digests.push_back(posets.digests[i]);
        }
    }
    return out;
}

std::vector<PositionMap> all_maps(std::size_t n, std::size_t m) {
    std::vector<PositionMap> out;
    if (m == 0 && n > 0) return out;
    PositionMap f(n, 0);
    for (;;) {
        out.push_back(f);
        std::size_t i = n;
        while (i > 0 && f[i - 1] + 1 == m) f[--i] = 0;
        if (i == 0) break;
        ++f[i - 1];
    }
    return out;
}

std::vector<MapInstance> gen_strict_maps(const std::vector<CPoset>& corpus) {
    std::vector<std::vector<Mask>> primes;
    for (const auto& p : corpus) primes.push_back(enumerate_primes(p));
    std::vector<MapInstance> out;
    for (std::size_t s = 0; s < corpus.size(); ++s) {
        for (std::size_t t = 0; t < corpus.size(); ++t) {
            for (auto& f : all_maps(corpus[s].size(), corpus[t].size())) {
                bool strict = true;
                for (Mask q : primes[t]) {
                    if (!std::binary_search(primes[s].begin(), primes[s].end(), preimage(f, q))) {
                        strict = false;
                        break;
                    }
                }
                if (strict) out.push_back({s, t, std::move(f)});
            }
        }
    }
    return out;
}

std::vector<MapInstance> gen_spectral_maps(const std::vector<SpaceWithBase>& corpus) {
    std::vector<MapInstance> out;
    for (std::size_t s = 0; s < corpus.size(); ++s) {
        for (std::size_t t = 0; t < corpus.size(); ++t) {
            for (auto& f : all_maps(corpus[s].point_count(), corpus[t].point_count())) {
                bool spectral = true;
                for (Mask b : corpus[t].betas()) {
                    if (!corpus[s].in_base(preimage(f, b))) {
                        spectral = false;
                        break;
                    }
                }
                if (spectral) out.push_back({s, t, std::move(f)});
            }
        }
    }
    return out;
}

}  // namespace stonewb
