#include "cosetcover/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "cosetcover/cyclotomic.hpp"
#include "cosetcover/errors.hpp"

namespace cosetcover::search {

namespace {

using abgroup::AbelianGroup;
using abgroup::Coset;
using abgroup::CosetSystem;
using abgroup::Subgroup;

// Ceiling of a nonnegative rational.
std::int64_t ceil_of(const arith::Rational& q) {
    arith::BigInt v = -((-q).floor());
    return v.get_si();
}

} // namespace

std::string format_coset(const abgroup::Coset& c) {
    std::string out = c.subgroup.group.format(c.rep) + "+<";
    auto gens = abgroup::generating_set(c.subgroup);
    if (gens.empty())
        out += "e";
    for (std::size_t i = 0; i < gens.size(); ++i)
        out += (i ? "," : "") + c.subgroup.group.format(gens[i]);
    return out + ">";
}

std::string format_system(const abgroup::AbelianGroup& g,
                          std::span<const abgroup::Coset> cosets, int m) {
    std::string out = "orders=";
    for (std::size_t i = 0; i < g.orders().size(); ++i)
        out += (i ? "x" : "") + std::to_string(g.orders()[i]);
    out += " m=" + std::to_string(m) + " cosets: ";
    for (std::size_t i = 0; i < cosets.size(); ++i)
        out += (i ? ", " : "") + format_coset(cosets[i]);
    return out;
}

std::vector<Coset> enumerate_cosets(const AbelianGroup& g, bool proper_only) {
    std::vector<Coset> out;
    for (const auto& h : abgroup::all_subgroups(g)) {
        for (elem_t x = 0; x < g.order(); ++x) {
            Coset c(h, x);
            if (proper_only && !c.is_proper())
                continue;
            if (c.rep == x) // x is the least member: emit each coset once
                out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<CoverBitmask> coset_masks(const AbelianGroup& g,
                                      std::span<const Coset> cosets) {
    if (g.order() > kMaxSearchOrder)
        throw capacity_error("coset_masks: group order exceeds 64");
    std::vector<CoverBitmask> masks;
    masks.reserve(cosets.size());
    for (const auto& c : cosets) {
        CoverBitmask m = 0;
        for (elem_t x : c.members())
            m |= CoverBitmask(1) << x;
        masks.push_back(m);
    }
    return masks;
}

bool is_m_cover_masks(std::span<const CoverBitmask> masks, std::uint32_t n_elements,
                      int m) {
    if (m < 1)
        throw domain_error("is_m_cover_masks: m must be >= 1");
    for (std::uint32_t x = 0; x < n_elements; ++x) {
        int count = 0;
        for (CoverBitmask mask : masks)
            count += (mask >> x) & 1;
        if (count < m)
            return false;
    }
    return true;
}

namespace {

struct SweepContext {
    const SearchConfig* config;
    std::vector<Coset> pool;
    std::vector<CoverBitmask> cover_masks;    // members of each pool coset
    std::vector<CoverBitmask> subgroup_masks; // elements of each coset's subgroup
    std::vector<std::vector<std::uint32_t>> coset_perms; // per automorphism
    std::uint32_t n = 0;
    int max_size = 1;
};

bool canonical_ids(const SweepContext& ctx, std::span<const std::uint32_t> ids) {
    std::vector<std::uint32_t> image(ids.size());
    for (const auto& perm : ctx.coset_perms) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            image[i] = perm[ids[i]];
        std::sort(image.begin(), image.end());
        if (std::lexicographical_compare(image.begin(), image.end(), ids.begin(), ids.end()))
            return false;
    }
    return true;
}

void sweep_process(const SweepContext& ctx, std::span<const std::uint32_t> ids,
                   std::span<const std::uint8_t> counts, SweepStats& stats) {
    const auto& config = *ctx.config;
    if (config.dedup_by_symmetry && !canonical_ids(ctx, ids))
        return;
    ++stats.systems_examined;

    const int m = config.m;
    std::uint8_t wmin = 255;
    for (std::uint32_t x = 0; x < ctx.n; ++x)
        wmin = std::min(wmin, counts[x]);
    if (wmin < m)
        return;

    ++stats.covers_found;
    std::vector<Coset> cosets;
    cosets.reserve(ids.size());
    for (std::uint32_t id : ids)
        cosets.push_back(ctx.pool[id]);
    CosetSystem sys(config.group, cosets);
    BoundReport report = abgroup::check_cover_bounds(sys, m);
    if (!report.pass) {
        ++stats.counterexamples;
        if (stats.tight_witnesses.size() < config.max_tight_witnesses)
            stats.tight_witnesses.push_back(
                "VIOLATION " + format_system(config.group, cosets, m));
        return;
    }

    // Tight iff some base point of multiplicity m has k = m + f(N_a);
    // recomputed from masks so the verdict does not rest on report text.
    const std::int64_t k = static_cast<std::int64_t>(ids.size());
    bool tight = false;
    for (std::uint32_t a = 0; a < ctx.n && !tight; ++a) {
        if (counts[a] != m)
            continue;
        CoverBitmask h = ctx.n == 64 ? ~CoverBitmask(0)
                                     : (CoverBitmask(1) << ctx.n) - 1;
        for (std::size_t i = 0; i < ids.size(); ++i)
            if ((ctx.cover_masks[ids[i]] >> a) & 1)
                h &= ctx.subgroup_masks[ids[i]];
        std::int64_t N = ctx.n / std::popcount(h);
        tight = k == m + arith::mycielski_f(N);
    }
    if (tight) {
        ++stats.tight_cases;
        if (stats.tight_witnesses.size() < config.max_tight_witnesses)
            stats.tight_witnesses.push_back(format_system(config.group, cosets, m));
    }
}

void sweep_descend(const SweepContext& ctx, std::vector<std::uint32_t>& ids,
                   std::array<std::uint8_t, 64>& counts, std::uint32_t start,
                   SweepStats& stats) {
    const auto& config = *ctx.config;
    sweep_process(ctx, ids, std::span(counts).first(ctx.n), stats);
    if (ids.size() >= static_cast<std::size_t>(config.max_k))
        return;

    // Deficit prune: each added coset raises at most max_size multiplicities.
    std::int64_t deficit = 0;
    for (std::uint32_t x = 0; x < ctx.n; ++x)
        deficit += std::max(0, config.m - int(counts[x]));
    std::int64_t slots = config.max_k - static_cast<std::int64_t>(ids.size());
    if (deficit > slots * ctx.max_size)
        return;

    for (std::uint32_t next = start; next < ctx.pool.size(); ++next) {
        ids.push_back(next);
        for (std::uint32_t x = 0; x < ctx.n; ++x)
            counts[x] += (ctx.cover_masks[next] >> x) & 1;
        sweep_descend(ctx, ids, counts, next, stats);
        for (std::uint32_t x = 0; x < ctx.n; ++x)
            counts[x] -= (ctx.cover_masks[next] >> x) & 1;
        ids.pop_back();
    }
}

} // namespace

SweepStats verify_bounds_exhaustively(const SearchConfig& config) {
    const AbelianGroup& g = config.group;
    if (g.order() > kMaxSearchOrder)
        throw capacity_error("verify_bounds_exhaustively: group order exceeds 64");
    if (config.max_k < 1 || config.m < 1)
        throw domain_error("verify_bounds_exhaustively: max_k and m must be >= 1");

    SweepContext ctx;
    ctx.config = &config;
    ctx.pool = enumerate_cosets(g, config.proper_cosets_only);
    ctx.n = static_cast<std::uint32_t>(g.order());
    if (ctx.pool.empty())
        return {};
    ctx.cover_masks = coset_masks(g, ctx.pool);
    for (const auto& c : ctx.pool) {
        CoverBitmask m = 0;
        for (elem_t x : c.subgroup.elements)
            m |= CoverBitmask(1) << x;
        ctx.subgroup_masks.push_back(m);
    }
    for (CoverBitmask m : ctx.cover_masks)
        ctx.max_size = std::max(ctx.max_size, std::popcount(m));

    if (config.dedup_by_symmetry) {
        std::unordered_map<CoverBitmask, std::uint32_t> by_mask;
        for (std::uint32_t i = 0; i < ctx.cover_masks.size(); ++i)
            by_mask[ctx.cover_masks[i]] = i;
        for (const auto& sigma : automorphisms(g)) {
            std::vector<std::uint32_t> perm(ctx.pool.size());
            for (std::uint32_t i = 0; i < ctx.pool.size(); ++i) {
                CoverBitmask image = 0;
                for (std::uint32_t x = 0; x < ctx.n; ++x)
                    if ((ctx.cover_masks[i] >> x) & 1)
                        image |= CoverBitmask(1) << sigma[x];
                perm[i] = by_mask.at(image);
            }
            ctx.coset_perms.push_back(std::move(perm));
        }
    }

    // One independent subtree per first coset choice; merging in frontier
    // order keeps the result identical for any jobs value.
    std::vector<SweepStats> partial(ctx.pool.size());
    auto run_subtree = [&](std::uint32_t first) {
        std::vector<std::uint32_t> ids = {first};
        std::array<std::uint8_t, 64> counts{};
        for (std::uint32_t x = 0; x < ctx.n; ++x)
            counts[x] = (ctx.cover_masks[first] >> x) & 1;
        sweep_descend(ctx, ids, counts, first, partial[first]);
    };

    int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        for (std::uint32_t first = 0; first < ctx.pool.size(); ++first)
            run_subtree(first);
    } else {
        std::atomic<std::uint32_t> cursor{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j)
            workers.emplace_back([&] {
                for (std::uint32_t first = cursor.fetch_add(1);
                     first < ctx.pool.size(); first = cursor.fetch_add(1))
                    run_subtree(first);
            });
        for (auto& w : workers)
            w.join();
    }

    SweepStats stats;
    for (const auto& p : partial) {
        stats.systems_examined += p.systems_examined;
        stats.covers_found += p.covers_found;
        stats.counterexamples += p.counterexamples;
        stats.tight_cases += p.tight_cases;
        for (const auto& w : p.tight_witnesses)
            if (stats.tight_witnesses.size() < config.max_tight_witnesses)
                stats.tight_witnesses.push_back(w);
    }
    return stats;
}

MinCoverResult min_proper_coset_cover(const AbelianGroup& g) {
    if (g.order() > kMaxSearchOrder)
        throw capacity_error("min_proper_coset_cover: group order exceeds 64");
    if (g.order() == 1)
        return {0, {}};

    // Proper cosets that avoid the identity; the target is G minus {e}.
    std::vector<Coset> pool = enumerate_cosets(g, true);
    auto masks = coset_masks(g, pool);
    const std::uint32_t n = static_cast<std::uint32_t>(g.order());
    const CoverBitmask universe =
        (n == 64 ? ~CoverBitmask(0) : (CoverBitmask(1) << n) - 1) & ~CoverBitmask(1);

    int max_size = 1;
    for (CoverBitmask m : masks)
        max_size = std::max(max_size, std::popcount(m));
    std::vector<std::vector<std::uint32_t>> covering(n);
    for (std::uint32_t i = 0; i < masks.size(); ++i)
        for (std::uint32_t x = 1; x < n; ++x)
            if ((masks[i] >> x) & 1)
                covering[x].push_back(i);

    std::size_t best = static_cast<std::size_t>(n); // singletons always work
    std::vector<std::uint32_t> best_ids, chosen;

    auto descend = [&](auto&& self, CoverBitmask uncovered) -> void {
        if (uncovered == 0) {
            if (chosen.size() < best) {
                best = chosen.size();
                best_ids = chosen;
            }
            return;
        }
        std::size_t need = (static_cast<std::size_t>(std::popcount(uncovered)) +
                            max_size - 1) / static_cast<std::size_t>(max_size);
        if (chosen.size() + need >= best)
            return;
        // Branch on the uncovered element with the fewest candidates.
        std::uint32_t pick = 0;
        std::size_t fewest = SIZE_MAX;
        for (std::uint32_t x = 1; x < n; ++x)
            if ((uncovered >> x) & 1 && covering[x].size() < fewest) {
                fewest = covering[x].size();
                pick = x;
            }
        for (std::uint32_t id : covering[pick]) {
            chosen.push_back(id);
            self(self, uncovered & ~masks[id]);
            chosen.pop_back();
        }
    };
    descend(descend, universe);

    MinCoverResult out;
    out.k_min = static_cast<int>(best);
    for (std::uint32_t id : best_ids)
        out.witness.push_back(pool[id]);
    return out;
}

std::int64_t min_multiset_for_divisibility(std::int64_t n) {
    if (n < 2)
        throw domain_error("min_multiset_for_divisibility: n must be >= 2");
    if (n > 30)
        throw capacity_error("min_multiset_for_divisibility: n exceeds search bound 30");

    auto target = arith::factorize(n).factors;
    // Only prime-power orders matter, and only for primes dividing n.
    struct Candidate {
        std::int64_t order;
        std::size_t prime_slot;
        arith::Rational gain;
    };
    std::vector<Candidate> pool;
    for (std::int64_t q = 2; q <= 2 * n; ++q) {
        auto fq = arith::factorize(q).factors;
        if (fq.size() != 1)
            continue;
        for (std::size_t i = 0; i < target.size(); ++i)
            if (target[i].prime == fq[0].prime)
                pool.push_back({q, i, arith::Rational(1, arith::euler_phi(q))});
    }

    std::vector<arith::Rational> need;
    for (const auto& [p, e] : target)
        need.emplace_back(e);

    std::int64_t best = INT64_MAX;
    // Admissible bound: one entry helps one prime, by at most 1/(p-1).
    auto lower_bound = [&](const std::vector<arith::Rational>& rem) {
        std::int64_t lb = 0;
        for (std::size_t i = 0; i < rem.size(); ++i)
            if (rem[i] > arith::Rational(0))
                lb += ceil_of(rem[i] * arith::Rational(target[i].prime - 1));
        return lb;
    };
    auto descend = [&](auto&& self, std::size_t pos, std::int64_t used,
                       std::vector<arith::Rational>& rem) -> void {
        bool done = std::all_of(rem.begin(), rem.end(), [](const arith::Rational& r) {
            return r <= arith::Rational(0);
        });
        if (done) {
            best = std::min(best, used);
            return;
        }
        if (used + lower_bound(rem) >= best)
            return;
        for (std::size_t i = pos; i < pool.size(); ++i) {
            if (rem[pool[i].prime_slot] <= arith::Rational(0))
                continue; // no marginal progress from this entry
            rem[pool[i].prime_slot] -= pool[i].gain;
            self(self, i, used + 1, rem);
            rem[pool[i].prime_slot] += pool[i].gain;
        }
    };
    descend(descend, 0, 0, need);
    return best;
}

std::vector<std::vector<elem_t>> automorphisms(const AbelianGroup& g) {
    if (g.order() > kMaxAutomorphismOrder)
        throw capacity_error("automorphisms: group order exceeds " +
                             std::to_string(kMaxAutomorphismOrder));
    const std::uint32_t n = static_cast<std::uint32_t>(g.order());
    const std::size_t r = g.rank();

    std::vector<elem_t> basis(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<std::uint32_t> c(r, 0);
        c[i] = g.orders()[i] > 1 ? 1 : 0;
        basis[i] = g.element(c);
    }
    std::vector<std::vector<elem_t>> candidates(r);
    for (std::size_t i = 0; i < r; ++i)
        for (elem_t y = 0; y < n; ++y)
            if (g.element_order(y) == g.element_order(basis[i]))
                candidates[i].push_back(y);

    std::vector<std::vector<elem_t>> out;
    std::vector<elem_t> images(r);
    auto descend = [&](auto&& self, std::size_t i, std::vector<elem_t> span) -> void {
        if (i == r) {
            // Tabulate and keep only bijections.
            std::vector<elem_t> table(n);
            std::vector<char> seen(n, 0);
            for (elem_t x = 0; x < n; ++x) {
                auto c = g.coords(x);
                elem_t y = 0;
                for (std::size_t j = 0; j < r; ++j)
                    y = g.add(y, g.mul(c[j], images[j]));
                table[x] = y;
                seen[y] = 1;
            }
            if (std::find(seen.begin(), seen.end(), 0) == seen.end())
                out.push_back(std::move(table));
            return;
        }
        std::uint64_t expected = span.size() * g.element_order(basis[i]);
        for (elem_t y : candidates[i]) {
            images[i] = y;
            // Partial injectivity: the images must span a subgroup as large
            // as the one the first i+1 basis vectors generate.
            std::uint64_t ord = g.element_order(y);
            std::vector<elem_t> bigger;
            bigger.reserve(span.size() * ord);
            elem_t shift = 0;
            for (std::uint64_t t = 0; t < ord; ++t) {
                for (elem_t s : span)
                    bigger.push_back(g.add(s, shift));
                shift = g.add(shift, y);
            }
            std::sort(bigger.begin(), bigger.end());
            bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
            if (bigger.size() != expected)
                continue;
            self(self, i + 1, std::move(bigger));
        }
    };
    descend(descend, 0, {0});
    return out;
}

std::vector<std::vector<std::uint32_t>> group_presentations(std::uint64_t order) {
    if (order == 0)
        throw domain_error("group_presentations: order must be >= 1");
    if (order == 1)
        return {{1}};
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> current;
    auto descend = [&](auto&& self, std::uint64_t rest, std::uint32_t min_part) -> void {
        if (rest == 1) {
            out.push_back(current);
            return;
        }
        for (std::uint32_t d = min_part; d <= rest; ++d) {
            if (rest % d != 0)
                continue;
            current.push_back(d);
            self(self, rest / d, d);
            current.pop_back();
        }
    };
    descend(descend, order, 2);
    return out;
}

std::vector<std::vector<std::uint32_t>> abelian_isomorphism_types(std::uint64_t order) {
    if (order == 0)
        throw domain_error("abelian_isomorphism_types: order must be >= 1");
    if (order == 1)
        return {{1}};
    std::vector<std::vector<std::uint32_t>> types = {{}};
    for (const auto& [p, e] : arith::factorize(static_cast<std::int64_t>(order)).factors) {
        // Partitions of the exponent, as prime-power factors.
        std::vector<std::vector<std::uint32_t>> parts;
        std::vector<std::uint32_t> current;
        auto descend = [&](auto&& self, int rest, int min_part) -> void {
            if (rest == 0) {
                parts.push_back(current);
                return;
            }
            for (int a = min_part; a <= rest; ++a) {
                std::uint32_t q = 1;
                for (int i = 0; i < a; ++i)
                    q *= static_cast<std::uint32_t>(p);
                current.push_back(q);
                self(self, rest - a, a);
                current.pop_back();
            }
        };
        descend(descend, e, 1);
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& t : types)
            for (const auto& ps : parts) {
                auto merged = t;
                merged.insert(merged.end(), ps.begin(), ps.end());
                next.push_back(std::move(merged));
            }
        types = std::move(next);
    }
    for (auto& t : types)
        std::sort(t.begin(), t.end());
    std::sort(types.begin(), types.end());
    return types;
}

} // namespace cosetcover::search
