#include "stonewb/cposet.hpp"

#include <algorithm>
#include <string>

#include "stonewb/error.hpp"

namespace stonewb {

CPoset CPoset::make(FinitePoset poset, EnumOperatorCode code) {
    CPoset p;
    p.poset_ = std::move(poset);
    p.code_ = std::move(code);
    const FinitePoset& ps = p.poset_;
    p.compiled_.reserve(p.code_.size());
    for (Natural c : p.code_.codes()) {
        auto [x, k] = unpair(c);
        auto target = ps.position(x);
        if (!target) {
            throw InputError("operator pair " + std::to_string(c) + " = <" + std::to_string(x) + "," +
                             std::to_string(k) + "> references element " + std::to_string(x) +
                             " outside the carrier");
        }
        Mask need = 0;
        for (Natural e : set_decode(k)) {
            auto pos = ps.position(e);
            if (!pos) {
                throw InputError("operator pair " + std::to_string(c) + " = <" + std::to_string(x) +
                                 "," + std::to_string(k) + "> references element " +
                                 std::to_string(e) + " outside the carrier");
            }
            need |= bit(*pos);
        }
        p.compiled_.push_back({*target, need});
    }
    p.table_ = std::make_shared<const std::vector<Mask>>(
        kernels::parallel::closure_table(ps.size(), p.compiled_));
    return p;
}

EnumOperatorCode operator_from_closure(const FinitePoset& poset, std::span<const Mask> table) {
    const std::size_t n = poset.size();
    require_exhaustive(n, "carrier");
    std::vector<OperatorEntry> entries;
    for (std::size_t i = 1; i < table.size(); ++i) {
        const auto x = static_cast<Mask>(i);
        Mask fresh = table[x];
        for (std::size_t y : members(x)) fresh &= ~table[x & ~bit(y)];
        if (!fresh) continue;
        std::vector<Natural> set;
        for (std::size_t y : members(x)) set.push_back(poset.label(y));
        const Natural k = set_encode(FinSet(std::move(set)));
        for (std::size_t t : members(fresh)) entries.push_back({poset.label(t), k});
    }
    return EnumOperatorCode::from_entries(entries);
}

Mask CPoset::to_mask(const FinSet& labels) const {
    Mask m = 0;
    for (Natural x : labels) {
        auto pos = poset_.position(x);
        if (!pos) throw InputError("element " + std::to_string(x) + " is outside the carrier");
        m |= bit(*pos);
    }
    return m;
}

FinSet CPoset::to_labels(Mask m) const {
    std::vector<Natural> out;
    for (std::size_t i : members(m)) out.push_back(poset_.label(i));
    return FinSet(std::move(out));
}

ValidationReport validate_cposet(const CPoset& p) {
    ValidationReport r = validate_poset(p.poset());
    const FinitePoset& ps = p.poset();
    const auto table = p.closure_table();
    r.add("phi-empty", table[0] == 0, table[0] == 0 ? "" : "phi({}) = " + ps.describe(table[0]));

    const auto scan = kernels::parallel::closure_axioms(p.size(), table);
    auto witness = [&](const std::optional<Mask>& x) {
        return x ? "X = " + ps.describe(*x) + ", phi(X) = " + ps.describe(table[*x]) : std::string{};
    };
    r.add("extensive", !scan.not_extensive, witness(scan.not_extensive));
    r.add("monotone", !scan.not_monotone, witness(scan.not_monotone));
    r.add("idempotent", !scan.not_idempotent, witness(scan.not_idempotent));

    std::string order;
    for (std::size_t a = 0; a < p.size() && order.empty(); ++a) {
        for (std::size_t b = 0; b < p.size() && order.empty(); ++b) {
            const bool le = ps.leq(a, b);
            const bool incl = subset_of(table[bit(a)], table[bit(b)]);
            if (le != incl) {
                order = std::to_string(ps.label(a)) + (le ? " <= " : " !<= ") + std::to_string(ps.label(b)) +
                        " but phi(" + std::to_string(ps.label(a)) + ")" + (incl ? " within " : " not within ") +
                        "phi(" + std::to_string(ps.label(b)) + ")";
            }
        }
    }
    r.add("order-matches-closure", order.empty(), order);
    return r;
}

FinSet closure(const CPoset& p, const FinSet& x) { return p.to_labels(p.closure(p.to_mask(x))); }

bool IdealLattice::contains(Mask m) const { return std::binary_search(ideals_.begin(), ideals_.end(), m); }

IdealLattice enumerate_ideals(const CPoset& p) {
    return IdealLattice(kernels::parallel::fixed_points(p.closure_table()), p.shared_table());
}

namespace {

bool lower_bound_condition(const FinitePoset& ps, Mask ideal, std::string* witness) {
    const Mask outside = ps.all() & ~ideal;
    for (std::size_t a : members(outside)) {
        for (std::size_t b : members(outside)) {
            if (b < a) continue;
            if (subset_of(ps.lower_bounds(bit(a) | bit(b)), ideal)) {
                if (witness) {
                    *witness = "L(" + std::to_string(ps.label(a)) + "," + std::to_string(ps.label(b)) +
                               ") within I";
                }
                return false;
            }
        }
    }
    return true;
}

}  // namespace

PrimeReport is_prime(const CPoset& p, Mask ideal) { return is_prime(p, enumerate_ideals(p), ideal); }

PrimeReport is_prime(const CPoset& p, const IdealLattice& lattice, Mask ideal) {
    const FinitePoset& ps = p.poset();
    if (!subset_of(ideal, p.all()) || p.closure(ideal) != ideal) {
        throw PreconditionError("is_prime: " + ps.describe(ideal & p.all()) + " is not an ideal");
    }
    PrimeReport r;
    r.proper = ideal != 0 && ideal != p.all();
    if (!r.proper) {
        r.witness = "not proper";
        return r;
    }

    const Mask complement = p.all() & ~ideal;
    const bool upper = ps.up_closure(complement) == complement;
    const bool directed = ps.down_directed(complement);
    r.complement_is_filter = upper && directed;

    std::vector<Mask> escaping;
    for (Mask j : lattice.ideals()) {
        if (!subset_of(j, ideal)) escaping.push_back(j);
    }
    r.meet_prime = true;
    std::string meet_witness;
    for (std::size_t i = 0; i < escaping.size() && r.meet_prime; ++i) {
        for (std::size_t j = i; j < escaping.size(); ++j) {
            if (subset_of(escaping[i] & escaping[j], ideal)) {
                r.meet_prime = false;
                meet_witness = ps.describe(escaping[i]) + " & " + ps.describe(escaping[j]) + " within I";
                break;
            }
        }
    }

    std::string lb_witness;
    r.lower_bound_condition = lower_bound_condition(ps, ideal, &lb_witness);

    if (r.complement_is_filter != r.meet_prime || r.meet_prime != r.lower_bound_condition) {
        throw ConsistencyFault("primality criteria disagree on " + ps.describe(ideal) +
                               ": filter=" + std::to_string(r.complement_is_filter) +
                               " meet-prime=" + std::to_string(r.meet_prime) +
                               " lower-bound=" + std::to_string(r.lower_bound_condition));
    }
    r.prime = r.lower_bound_condition;
    if (!r.prime) {
        r.witness = !upper ? "complement is not an upper cone" : lb_witness;
        if (r.witness.empty()) r.witness = meet_witness;
    }
    return r;
}

std::vector<Mask> enumerate_primes(const CPoset& p) {
    std::vector<Mask> out;
    for (Mask i : kernels::parallel::fixed_points(p.closure_table())) {
        if (i == 0 || i == p.all()) continue;
        if (lower_bound_condition(p.poset(), i, nullptr)) out.push_back(i);
    }
    return out;
}

DistributivityReport check_distributive(const CPoset& p) {
    const auto lattice = enumerate_ideals(p);
    const auto& ideals = lattice.ideals();
    DistributivityReport r;
    if (auto v = kernels::parallel::distributivity_violation(ideals, p.closure_table())) {
        r.distributive = false;
        r.witness = kernels::Triple{ideals[(*v)[0]], ideals[(*v)[1]], ideals[(*v)[2]]};
    }
    return r;
}

bool is_distributive(const CPoset& p) { return check_distributive(p).distributive; }

Mask prime_separation(const CPoset& p, Mask ideal, Mask filter) {
    const FinitePoset& ps = p.poset();
    if (ideal == 0 || !subset_of(ideal, p.all()) || p.closure(ideal) != ideal) {
        throw PreconditionError("prime_separation: I = " + ps.describe(ideal) + " is not a nonempty ideal");
    }
    if (!subset_of(filter, p.all()) || !ps.down_directed(filter)) {
        throw PreconditionError("prime_separation: F = " + ps.describe(filter) +
                                " is not a nonempty down-directed set");
    }
    if ((ideal & filter) != 0) {
        throw PreconditionError("prime_separation: I and F intersect in " + ps.describe(ideal & filter));
    }
    for (Mask q : enumerate_primes(p)) {
        if (subset_of(ideal, q) && (q & filter) == 0) return q;
    }
    throw PreconditionError("no separating prime for I = " + ps.describe(ideal) + ", F = " +
                            ps.describe(filter) + " (source not distributive?)");
}

Mask image(const PositionMap& f, Mask x) {
    Mask m = 0;
    for (std::size_t i : members(x)) m |= bit(f[i]);
    return m;
}

Mask preimage(const PositionMap& f, Mask y) {
    Mask m = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (contains(y, f[i])) m |= bit(i);
    }
    return m;
}

void require_total(const PositionMap& f, std::size_t source_size, std::size_t target_size) {
    if (f.size() != source_size) {
        throw InputError("map covers " + std::to_string(f.size()) + " of " + std::to_string(source_size) +
                         " source elements");
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] >= target_size) {
            throw InputError("map sends position " + std::to_string(i) + " outside the target");
        }
    }
}

MorphismReport check_dp_isomorphism(const CPoset& p0, const CPoset& p1, const PositionMap& g) {
    require_total(g, p0.size(), p1.size());
    require_exhaustive(p0.size(), "isomorphism check");
    const FinitePoset& a = p0.poset();
    const FinitePoset& b = p1.poset();
    if (image(g, p0.all()) != p1.all()) return {false, "not surjective"};
    for (std::size_t x = 0; x < p0.size(); ++x) {
        for (std::size_t y = 0; y < p0.size(); ++y) {
            if (a.leq(x, y) != b.leq(g[x], g[y])) {
                return {false, "order not preserved/reflected at (" + std::to_string(a.label(x)) + ", " +
                                   std::to_string(a.label(y)) + ")"};
            }
        }
    }
    const std::size_t count = std::size_t{1} << p0.size();
    for (std::size_t i = 0; i < count; ++i) {
        const auto x = static_cast<Mask>(i);
        if (image(g, p0.closure(x)) != p1.closure(image(g, x))) {
            return {false, "g(phi0(X)) != phi1(g(X)) at X = " + a.describe(x)};
        }
    }
    return {};
}

MorphismReport check_strict(const CPoset& p0, const CPoset& p1, const PositionMap& f) {
    require_total(f, p0.size(), p1.size());
    const auto lattice = enumerate_ideals(p0);
    for (Mask q : enumerate_primes(p1)) {
        const Mask pre = preimage(f, q);
        if (p0.closure(pre) != pre) {
            return {false, "preimage of prime " + p1.poset().describe(q) + " is not an ideal"};
        }
        const auto rep = is_prime(p0, lattice, pre);
        if (!rep.prime) {
            return {false, "preimage of prime " + p1.poset().describe(q) + " = " + p0.poset().describe(pre) +
                               " is not prime (" + rep.witness + ")"};
        }
    }
    return {};
}

}  // namespace stonewb
