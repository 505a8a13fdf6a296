#include "stonewb/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>

namespace stonewb::kernels {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::optional<Mask> as_optional(std::uint64_t v) {
    if (v == kNone) return std::nullopt;
    return static_cast<Mask>(v);
}

bool distributive_at(std::span<const Mask> table, Mask x, Mask y, Mask z) {
    return (x & table[y | z]) == table[(x & y) | (x & z)];
}

}  // namespace

namespace serial {

std::vector<Mask> closure_table(std::size_t n, std::span<const CompiledEntry> entries) {
    const std::size_t count = std::size_t{1} << n;
    std::vector<Mask> table(count, 0);
    for (std::size_t x = 0; x < count; ++x) {
        Mask out = 0;
        for (const auto& e : entries) {
            if (subset_of(e.need, static_cast<Mask>(x))) out |= bit(e.target);
        }
        table[x] = out;
    }
    return table;
}

std::vector<Mask> fixed_points(std::span<const Mask> table) {
    std::vector<Mask> out;
    for (std::size_t x = 0; x < table.size(); ++x) {
        if (table[x] == x) out.push_back(static_cast<Mask>(x));
    }
    return out;
}

ClosureAxiomScan closure_axioms(std::size_t n, std::span<const Mask> table) {
    ClosureAxiomScan scan;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto x = static_cast<Mask>(i);
        const Mask fx = table[x];
        if (!scan.not_extensive && !subset_of(x, fx)) scan.not_extensive = x;
        if (!scan.not_idempotent && (!subset_of(fx, full_mask(n)) || table[fx] != fx)) {
            scan.not_idempotent = x;
        }
        if (!scan.not_monotone) {
            for (std::size_t j : members(x)) {
                if (!subset_of(table[x & ~bit(j)], fx)) {
                    scan.not_monotone = x;
                    break;
                }
            }
        }
    }
    return scan;
}

std::optional<Triple> distributivity_violation(std::span<const Mask> ideals,
                                               std::span<const Mask> table) {
    const std::size_t k = ideals.size();
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            for (std::size_t c = 0; c < k; ++c) {
                if (!distributive_at(table, ideals[a], ideals[b], ideals[c])) return Triple{a, b, c};
            }
        }
    }
    return std::nullopt;
}

std::vector<Mask> union_table(std::span<const Mask> sets) {
    const std::size_t count = std::size_t{1} << sets.size();
    std::vector<Mask> u(count, 0);
    for (std::size_t k = 0; k < count; ++k) {
        Mask m = 0;
        for (std::size_t j : members(static_cast<Mask>(k))) m |= sets[j];
        u[k] = m;
    }
    return u;
}

}  // namespace serial

namespace parallel {

std::vector<Mask> closure_table(std::size_t n, std::span<const CompiledEntry> entries) {
    const std::int64_t count = std::int64_t{1} << n;
    std::vector<Mask> table(static_cast<std::size_t>(count), 0);
    for (const auto& e : entries) table[e.need] |= bit(e.target);
    for (std::size_t j = 0; j < n; ++j) {
        const Mask b = bit(j);
#pragma omp parallel for schedule(static)
        for (std::int64_t x = 0; x < count; ++x) {
            if (x & b) table[x] |= table[x ^ b];
        }
    }
    return table;
}

std::vector<Mask> fixed_points(std::span<const Mask> table) {
    const auto count = static_cast<std::int64_t>(table.size());
    std::vector<std::vector<Mask>> chunks;
#pragma omp parallel
    {
#pragma omp single
        chunks.resize(static_cast<std::size_t>(omp_get_num_threads()));
        auto& mine = chunks[static_cast<std::size_t>(omp_get_thread_num())];
        // static schedule hands each thread one contiguous ascending block
#pragma omp for schedule(static)
        for (std::int64_t x = 0; x < count; ++x) {
            if (table[x] == static_cast<Mask>(x)) mine.push_back(static_cast<Mask>(x));
        }
    }
    std::vector<Mask> out;
    for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
    return out;
}

ClosureAxiomScan closure_axioms(std::size_t n, std::span<const Mask> table) {
    const auto count = static_cast<std::int64_t>(table.size());
    std::uint64_t ext = kNone;
    std::uint64_t mono = kNone;
    std::uint64_t idem = kNone;
    const Mask all = full_mask(n);
#pragma omp parallel for schedule(static) reduction(min : ext, mono, idem)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto x = static_cast<Mask>(i);
        const Mask fx = table[x];
        if (!subset_of(x, fx)) ext = std::min<std::uint64_t>(ext, x);
        if (!subset_of(fx, all) || table[fx] != fx) idem = std::min<std::uint64_t>(idem, x);
        for (Mask rest = x; rest; rest &= rest - 1) {
            const Mask low = rest & (~rest + 1);
            if (!subset_of(table[x & ~low], fx)) {
                mono = std::min<std::uint64_t>(mono, x);
                break;
            }
        }
    }
    return {as_optional(ext), as_optional(mono), as_optional(idem)};
}

std::optional<Triple> distributivity_violation(std::span<const Mask> ideals,
                                               std::span<const Mask> table) {
    const auto k = static_cast<std::int64_t>(ideals.size());
    std::atomic<std::int64_t> first{k};
    std::vector<Triple> found(static_cast<std::size_t>(k));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t a = 0; a < k; ++a) {
        if (a > first.load(std::memory_order_relaxed)) continue;
        bool hit = false;
        for (std::int64_t b = 0; b < k && !hit; ++b) {
            for (std::int64_t c = 0; c < k; ++c) {
                if (!distributive_at(table, ideals[a], ideals[b], ideals[c])) {
                    found[a] = Triple{static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                                      static_cast<std::size_t>(c)};
                    hit = true;
                    break;
                }
            }
        }
        if (hit) {
            std::int64_t cur = first.load();
            while (a < cur && !first.compare_exchange_weak(cur, a)) {
            }
        }
    }
    const std::int64_t best = first.load();
    if (best == k) return std::nullopt;
    return found[best];
}

std::vector<Mask> union_table(std::span<const Mask> sets) {
    const std::size_t m = sets.size();
    std::vector<Mask> u(std::size_t{1} << m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        const auto lo = static_cast<std::int64_t>(std::size_t{1} << j);
        const Mask s = sets[j];
#pragma omp parallel for schedule(static)
        for (std::int64_t k = lo; k < 2 * lo; ++k) u[k] = u[k - lo] | s;
    }
    return u;
}

}  // namespace parallel

}  // namespace stonewb::kernels
