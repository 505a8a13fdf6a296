#include "stonewb/lattices.hpp"

#include <algorithm>
#include <string>

#include "stonewb/error.hpp"
#include "stonewb/presentations.hpp"
#include "stonewb/spectrum.hpp"

namespace stonewb {

namespace {

std::string pos(std::size_t i) { return std::to_string(i); }

std::string lbl(const std::vector<Natural>& labels, std::size_t i) { return std::to_string(labels[i]); }

bool valid_shape(const Semilattice& s, ValidationReport& r, const std::string& prefix) {
    const std::size_t n = s.labels.size();
    bool ok = std::is_sorted(s.labels.begin(), s.labels.end()) &&
              std::adjacent_find(s.labels.begin(), s.labels.end()) == s.labels.end();
    r.add(prefix + "labels", ok, ok ? "" : "labels must ascend without repeats");
    if (!ok) return false;
    ok = s.op.size() == n && s.op.cells().size() == n * n;
    r.add(prefix + "table-shape", ok, ok ? "" : "table is not " + pos(n) + " x " + pos(n));
    if (!ok) return false;
    for (std::size_t c : s.op.cells()) {
        if (c >= n) {
            r.add(prefix + "table-range", false, "entry " + pos(c) + " is not a position");
            return false;
        }
    }
    r.add(prefix + "table-range", true);
    return true;
}

void check_laws(const Semilattice& s, ValidationReport& r, const std::string& prefix) {
    const std::size_t n = s.labels.size();
    const auto& op = s.op;
    std::string w;
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
        if (op(a, a) != a) w = "a = " + lbl(s.labels, a);
    }
    r.add(prefix + "idempotent", w.empty(), w);
    w.clear();
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
        for (std::size_t b = 0; b < n && w.empty(); ++b) {
            if (op(a, b) != op(b, a)) w = "a = " + lbl(s.labels, a) + ", b = " + lbl(s.labels, b);
        }
    }
    r.add(prefix + "commutative", w.empty(), w);
    w.clear();
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
        for (std::size_t b = 0; b < n && w.empty(); ++b) {
            for (std::size_t c = 0; c < n && w.empty(); ++c) {
                if (op(op(a, b), c) != op(a, op(b, c))) {
                    w = "a = " + lbl(s.labels, a) + ", b = " + lbl(s.labels, b) + ", c = " + lbl(s.labels, c);
                }
            }
        }
    }
    r.add(prefix + "associative", w.empty(), w);
}

void check_supplied(const FinitePoset& derived, const FinitePoset* supplied, ValidationReport& r) {
    if (!supplied) return;
    std::string w;
    if (supplied->labels() != derived.labels()) {
        w = "carriers differ";
    } else {
        for (std::size_t a = 0; a < derived.size() && w.empty(); ++a) {
            for (std::size_t b = 0; b < derived.size() && w.empty(); ++b) {
                if (derived.leq(a, b) != supplied->leq(a, b)) {
                    w = "(" + lbl(derived.labels(), a) + ", " + lbl(derived.labels(), b) + ")";
                }
            }
        }
    }
    r.add("order-matches-supplied", w.empty(), w);
}

void require_valid(const ValidationReport& r, const char* what) {
    for (const auto& c : r.checks) {
        if (!c.pass) throw PreconditionError(std::string(what) + ": " + c.name + " fails (" + c.witness + ")");
    }
}

}  // namespace

std::string to_string(SemilatticeKind kind) { return kind == SemilatticeKind::meet ? "meet" : "join"; }

OpTable::OpTable(std::size_t n, std::vector<std::size_t> cells) : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != n_ * n_) throw InputError("operation table is not square");
}

FinitePoset Semilattice::order() const {
    const std::size_t n = labels.size();
    std::vector<Mask> below(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const bool leq = kind == SemilatticeKind::meet ? op(a, b) == a : op(a, b) == b;
            if (leq) below[b] |= bit(a);
        }
    }
    return FinitePoset::from_below(labels, std::move(below));
}

ValidationReport validate_semilattice(const Semilattice& s, const FinitePoset* supplied) {
    require_exhaustive(s.labels.size(), "semilattice");
    ValidationReport r;
    if (!valid_shape(s, r, "")) return r;
    check_laws(s, r, "");
    if (r.pass()) check_supplied(s.order(), supplied, r);
    return r;
}

ValidationReport validate_lattice(const Lattice& l, const FinitePoset* supplied) {
    require_exhaustive(l.labels.size(), "lattice");
    ValidationReport r;
    const auto m = l.meet_reduct();
    const auto j = l.join_reduct();
    if (!valid_shape(m, r, "meet:") || !valid_shape(j, r, "join:")) return r;
    check_laws(m, r, "meet:");
    check_laws(j, r, "join:");
    const std::size_t n = l.labels.size();
    std::string w;
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
        for (std::size_t b = 0; b < n && w.empty(); ++b) {
            if (l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a) {
                w = "a = " + lbl(l.labels, a) + ", b = " + lbl(l.labels, b);
            }
        }
    }
    r.add("absorption", w.empty(), w);
    if (!r.pass()) return r;
    const auto om = m.order();
    const auto oj = j.order();
    r.add("orders-agree", om == oj, om == oj ? "" : "meet and join induce different orders");
    check_supplied(om, supplied, r);
    return r;
}

Mask join_ideal_closure(const Semilattice& s, Mask x) {
    if (s.kind != SemilatticeKind::join) throw PreconditionError("psi needs a join table");
    require_valid(validate_semilattice(s), "psi");
    Mask closed = x;
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t a : members(closed)) {
            for (std::size_t b : members(closed)) {
                const Mask add = bit(s.op(a, b));
                if (!(closed & add)) {
                    closed |= add;
                    grew = true;
                }
            }
        }
    }
    return s.order().down_closure(closed);
}

CPoset cposet_from_semilattice(const Semilattice& s) {
    require_valid(validate_semilattice(s), "semilattice");
    const FinitePoset order = s.order();
    if (s.kind == SemilatticeKind::meet) return poset_to_cposet(order);
    const std::size_t n = s.labels.size();
    const std::size_t subsets = std::size_t{1} << n;
    // sup[X] = join of the nonempty set X
    std::vector<std::size_t> sup(subsets, 0);
    for (std::size_t x = 1; x < subsets; ++x) {
        const auto m = static_cast<Mask>(x);
        const std::size_t low = static_cast<std::size_t>(__builtin_ctz(m));
        const Mask rest = m & (m - 1);
        sup[x] = rest ? s.op(sup[rest], low) : low;
    }
    // minimal generators only: X with s <= sup X but no X minus one element
    std::vector<OperatorEntry> entries;
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t x = 1; x < subsets; ++x) {
            const auto m = static_cast<Mask>(x);
            if (!order.leq(t, sup[x])) continue;
            bool minimal = true;
            if (popcount(m) > 1) {
                for (std::size_t y : members(m)) {
                    if (order.leq(t, sup[m & ~bit(y)])) {
                        minimal = false;
                        break;
                    }
                }
            }
            if (!minimal) continue;
            std::vector<Natural> set;
            for (std::size_t y : members(m)) set.push_back(s.labels[y]);
            entries.push_back({s.labels[t], set_encode(FinSet(std::move(set)))});
        }
    }
    return CPoset::make(order, EnumOperatorCode::from_entries(entries));
}

CPoset cposet_from_lattice(const Lattice& l) {
    require_valid(validate_lattice(l), "lattice");
    return cposet_from_semilattice(l.join_reduct());
}

namespace {

WitnessSearch find_witness(const SpaceWithBase& s, SemilatticeKind kind) {
    const std::size_t m = s.base_count();
    std::vector<std::size_t> cells(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const Mask target = kind == SemilatticeKind::meet ? s.beta(i) & s.beta(j) : s.beta(i) | s.beta(j);
            const auto& betas = s.betas();
            auto it = std::find(betas.begin(), betas.end(), target);
            if (it == betas.end()) return {std::nullopt, std::pair{i, j}};
            cells[i * m + j] = static_cast<std::size_t>(it - betas.begin());
        }
    }
    return {SemilatticeWitness{kind, OpTable(m, std::move(cells))}, std::nullopt};
}

void transport(const SpectrumSpace& spec, const Semilattice& s, ValidationReport& r) {
    const auto name = to_string(s.kind);
    const std::size_t n = s.labels.size();
    std::string w;
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
        for (std::size_t b = 0; b < n && w.empty(); ++b) {
            const Mask va = spec.underlying.beta(a);
            const Mask vb = spec.underlying.beta(b);
            const Mask combined = s.kind == SemilatticeKind::meet ? va & vb : va | vb;
            if (combined != spec.underlying.beta(s.op(a, b))) {
                w = "a = " + lbl(s.labels, a) + ", b = " + lbl(s.labels, b);
            }
        }
    }
    r.add(name + "-transport", w.empty(), w);
    const auto found = find_witness(spec.underlying, s.kind);
    if (!found.witness) {
        r.add(name + "-witness", false,
              "no base set for pair (" + pos(found.offending->first) + ", " + pos(found.offending->second) + ")");
    } else {
        const bool same = found.witness->table == s.op;
        r.add(name + "-witness", same, same ? "" : "witness table differs from the operation table");
    }
}

void cell(const SpectrumSpace& spec, const std::string& name, ValidationReport& r) {
    const auto c = classify(spec.underlying);
    const bool in = std::find(c.cells.begin(), c.cells.end(), name) != c.cells.end();
    r.add("cell-" + name, in, in ? "" : "spectrum is not in " + name);
}

}  // namespace

WitnessSearch find_meet_witness(const SpaceWithBase& s) { return find_witness(s, SemilatticeKind::meet); }
WitnessSearch find_join_witness(const SpaceWithBase& s) { return find_witness(s, SemilatticeKind::join); }

ValidationReport check_semilattice_duality(const Semilattice& s) {
    ValidationReport r = validate_semilattice(s);
    if (!r.pass()) return r;
    const CPoset p = cposet_from_semilattice(s);
    const auto dist = check_distributive(p);
    r.add("distributive", dist.distributive, dist.distributive ? "" : "ideal lattice is not distributive");
    if (!dist.distributive) return r;
    const auto spec = spectrum(p);
    transport(spec, s, r);
    cell(spec, s.kind == SemilatticeKind::meet ? "ASp" : "AsSpec", r);
    return r;
}

ValidationReport check_semilattice_duality(const Lattice& l) {
    ValidationReport r = validate_lattice(l);
    if (!r.pass()) return r;
    const CPoset p = cposet_from_lattice(l);
    const auto dist = check_distributive(p);
    r.add("distributive", dist.distributive, dist.distributive ? "" : "ideal lattice is not distributive");
    if (!dist.distributive) return r;
    const auto spec = spectrum(p);
    transport(spec, l.meet_reduct(), r);
    transport(spec, l.join_reduct(), r);
    cell(spec, "ASpec", r);
    return r;
}

std::optional<Lattice> lattice_from_order(const FinitePoset& p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> meet(n * n), join(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const auto m = p.meet(a, b);
            const auto j = p.join(a, b);
            if (!m || !j) return std::nullopt;
            meet[a * n + b] = *m;
            join[a * n + b] = *j;
        }
    }
    return Lattice{p.labels(), OpTable(n, std::move(meet)), OpTable(n, std::move(join))};
}

Lattice lattice_m3() {
    return *lattice_from_order(
        FinitePoset::from_pairs({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {0, 4}}));
}

Lattice lattice_grid2() {
    return *lattice_from_order(FinitePoset::from_pairs({0, 1, 2, 3}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}}));
}

Lattice lattice_chain(std::size_t n) {
    std::vector<Natural> labels(n);
    std::vector<std::pair<Natural, Natural>> leq;
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = i;
        for (std::size_t j = i + 1; j < n; ++j) leq.emplace_back(i, j);
    }
    return *lattice_from_order(FinitePoset::from_pairs(labels, leq));
}

}  // namespace stonewb
