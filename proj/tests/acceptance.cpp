// End-to-end acceptance checks, one line of output per criterion.
//
// Each criterion recomputes its expectations from scratch (brute force or
// direct identities) rather than trusting the library's own verdicts, and
// carries a wall-clock budget; tolerances are pinned below.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cosetcover/abgroup.hpp"
#include "cosetcover/arith.hpp"
#include "cosetcover/characters.hpp"
#include "cosetcover/cyclotomic.hpp"
#include "cosetcover/search.hpp"
#include "cosetcover/zcover.hpp"

using namespace cosetcover;
using abgroup::AbelianGroup;
using abgroup::Coset;
using abgroup::CosetSystem;

namespace {

constexpr double kTol = 1e-9;

struct Outcome {
    bool ok = true;
    std::string detail;
};

void expect(Outcome& out, bool cond, const std::string& what) {
    if (!cond && out.ok) {
        out.ok = false;
        out.detail = what;
    }
}

zcover::ZCoverSystem make_z(const std::vector<std::pair<std::int64_t, std::int64_t>>& cs) {
    std::vector<zcover::ResidueClass> classes;
    for (auto [a, n] : cs)
        classes.emplace_back(a, n);
    return zcover::ZCoverSystem(std::move(classes));
}

// All cosets of h, each once.
std::vector<Coset> partition_by(const abgroup::Subgroup& h) {
    std::vector<Coset> out;
    for (abgroup::elem_t x = 0; x < h.group.order(); ++x) {
        Coset c(h, x);
        if (c.rep == x)
            out.push_back(std::move(c));
    }
    return out;
}

Outcome criterion_mycielski() {
    Outcome out;
    expect(out, arith::mycielski_f(1) == 0, "f(1)");
    for (std::int64_t p : {2, 3, 5, 7}) {
        expect(out, arith::mycielski_f(p) == p - 1, "f(p) for p=" + std::to_string(p));
        expect(out, arith::mycielski_f(p * p) == 2 * p - 2,
               "f(p^2) for p=" + std::to_string(p));
    }
    expect(out, arith::mycielski_f(12) == 4, "f(12)");
    for (std::int64_t n = 1; n <= 10'000; ++n) {
        arith::BigInt bound = arith::BigInt(1) << unsigned(arith::mycielski_f(n));
        expect(out, arith::BigInt(n) <= bound, "n <= 2^f(n) at n=" + std::to_string(n));
    }
    return out;
}

Outcome criterion_extremal_zcovers() {
    Outcome out;
    for (int m = 1; m <= 3; ++m)
        for (int kk = 1; kk <= 6; ++kk) {
            int k = m + kk;
            std::int64_t two_kk = std::int64_t(1) << kk;
            auto sys = zcover::build_extremal_zcover(k, m);
            std::string tag = " (k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")";
            expect(out, zcover::is_exact_m_cover(sys, m), "exact m-cover" + tag);
            expect(out, sys.classes().back() == zcover::ResidueClass(0, two_kk),
                   "last class is 0 mod 2^(k-m)" + tag);
            auto irr = sys.k() ? zcover::irredundant_indices(sys, m) : std::vector<std::size_t>{};
            bool last_irredundant = false;
            for (std::size_t i : irr)
                last_irredundant = last_irredundant || i + 1 == sys.k();
            expect(out, last_irredundant, "0 mod 2^(k-m) is irredundant" + tag);
            expect(out, k == m + arith::mycielski_f(two_kk), "k = m + f(2^(k-m))" + tag);
            expect(out, zcover::n_a(sys, 0) == two_kk, "N_0 = 2^(k-m)" + tag);
            expect(out, zcover::check_zcover_bounds(sys, m, 0).pass, "bounds at 0" + tag);
        }
    return out;
}

Outcome criterion_cpcp() {
    Outcome out;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto sys = abgroup::build_cp_cp_cover(p);
        std::string tag = " (p=" + std::to_string(p) + ")";
        std::size_t k = sys.k();
        expect(out, k == p + 1, "k = p+1" + tag);
        expect(out, abgroup::is_minimal_m_cover(sys, 1), "minimal 1-cover" + tag);
        expect(out, 1 + k * (p - 1) == std::size_t(p) * p, "1 + k(p-1) = p^2" + tag);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                auto meet = abgroup::intersect(sys.cosets()[i].subgroup,
                                               sys.cosets()[j].subgroup);
                expect(out, meet.size() == 1, "pairwise trivial intersections" + tag);
            }
        for (abgroup::elem_t a = 1; a < sys.group().order(); ++a)
            expect(out, abgroup::n_a(sys, a) == p, "N_a = p off the identity" + tag);
        expect(out, abgroup::check_cover_bounds(sys, 1).pass, "bound check" + tag);
    }
    return out;
}

Outcome criterion_sweep() {
    Outcome out;
    std::uint64_t systems = 0, covers = 0, violations = 0;
    for (std::uint64_t order = 1; order <= 12; ++order)
        for (const auto& shape : search::group_presentations(order))
            for (int m = 1; m <= 4; ++m) {
                search::SearchConfig cfg{.group = AbelianGroup(shape),
                                         .max_k = 4,
                                         .m = m,
                                         .proper_cosets_only = false,
                                         .dedup_by_symmetry = false,
                                         .jobs = 1};
                auto stats = search::verify_bounds_exhaustively(cfg);
                systems += stats.systems_examined;
                covers += stats.covers_found;
                violations += stats.counterexamples;
            }
    expect(out, violations == 0, "zero violations");
    expect(out, covers > 0, "sweep found covers");
    out.detail = std::to_string(systems) + " systems, " + std::to_string(covers) +
                 " covers, " + std::to_string(violations) + " violations";
    return out;
}

Outcome criterion_min_proper_covers() {
    Outcome out;
    std::map<std::vector<std::uint32_t>, int> pins = {
        {{4}, 2}, {{2, 2}, 2}, {{2, 2, 2}, 3}};
    for (std::uint64_t order = 1; order <= 16; ++order)
        for (const auto& shape : search::abelian_isomorphism_types(order)) {
            AbelianGroup g(shape);
            auto res = search::min_proper_coset_cover(g);
            std::string tag = " (order " + std::to_string(order) + ")";
            expect(out, res.k_min >= arith::mycielski_f(std::int64_t(order)),
                   "k_min >= f(|G|)" + tag);
            if (order > 1)
                expect(out, abgroup::check_proper_coset_cover_bound(g, res.witness).pass,
                       "witness covers G minus e" + tag);
            auto pin = pins.find(shape);
            if (pin != pins.end())
                expect(out, res.k_min == pin->second, "pinned k_min" + tag);
        }
    return out;
}

Outcome criterion_divisibility_minima() {
    Outcome out;
    for (std::int64_t n = 2; n <= 30; ++n) {
        std::string tag = " (n=" + std::to_string(n) + ")";
        std::int64_t brute = search::min_multiset_for_divisibility(n);
        auto cert = cyclotomic::minimal_k(n);
        expect(out, brute == arith::mycielski_f(n), "brute minimum = f(n)" + tag);
        expect(out, cert.k == brute, "certificate k = brute minimum" + tag);
        expect(out, cyclotomic::divides_product(n, cert.orders), "certificate divides" + tag);
        for (const auto& [p, e] : arith::factorize(n).factors) {
            std::int64_t copies = 0;
            for (std::int64_t v : cert.orders.orders)
                copies += v == p;
            expect(out, copies == e * (p - 1), "ord_p(n)(p-1) copies of p" + tag);
        }
        expect(out, std::int64_t(cert.orders.size()) == cert.k, "certificate size" + tag);
    }
    return out;
}

Outcome criterion_exponential_sums() {
    Outcome out;
    auto sys = make_z({{0, 2}, {1, 4}, {3, 8}, {7, 8}});
    auto outside = zcover::outside_indices(sys, 0);
    std::mt19937 rng(321);
    for (int trial = 0; trial < 20; ++trial) {
        std::map<std::size_t, std::int64_t> weights;
        for (std::size_t s : outside) {
            std::int64_t n = sys.classes()[s].mod;
            weights[s] = 1 + std::int64_t(rng() % std::uint64_t(n));
        }
        for (const auto& alpha : zcover::realized_alphas(sys, 0, weights)) {
            auto sums = zcover::exponential_sums(sys, {0, weights, alpha});
            for (std::size_t r = 1; r < sums.size(); ++r)
                expect(out, std::abs(sums[r] - sums[0]) < kTol,
                       "C_r constant at alpha=" + alpha.str() +
                           " trial " + std::to_string(trial));
        }
    }
    return out;
}

Outcome criterion_characters() {
    Outcome out;
    std::vector<std::vector<std::uint32_t>> shapes;
    for (std::uint64_t order = 2; order <= 16; ++order)
        for (const auto& shape : search::abelian_isomorphism_types(order))
            shapes.push_back(shape);

    std::mt19937 rng(5150);
    int sampled = 0;
    for (int trial = 0; trial < 50; ++trial) {
        AbelianGroup g(shapes[trial % shapes.size()]);
        int m = 1 + trial % 2;
        auto subs = abgroup::all_subgroups(g);

        // Stack m partitions of G; the first layer is by a proper subgroup,
        // and the total coset count stays small enough for the subset DFS.
        std::vector<Coset> cosets;
        std::uint64_t budget = 14;
        bool built = true;
        for (int layer = 0; layer < m; ++layer) {
            std::vector<const abgroup::Subgroup*> okay;
            for (const auto& h : subs) {
                std::uint64_t idx = h.index();
                bool proper_enough = layer > 0 || idx >= 2;
                if (proper_enough && idx + std::uint64_t(m - 1 - layer) <= budget)
                    okay.push_back(&h);
            }
            if (okay.empty()) {
                built = false;
                break;
            }
            const auto* h = okay[rng() % okay.size()];
            budget -= h->index();
            for (auto& c : partition_by(*h))
                cosets.push_back(std::move(c));
        }
        if (!built)
            continue;
        ++sampled;
        CosetSystem sys(g, cosets);
        std::int64_t k = std::int64_t(sys.k());

        for (abgroup::elem_t a = 0; a < g.order(); ++a) {
            std::string tag = " (trial " + std::to_string(trial) + ", a=" + g.format(a) + ")";

            abgroup::Subgroup h_a = abgroup::full_subgroup(g);
            for (const auto& c : sys.cosets())
                if (c.contains(a))
                    h_a = abgroup::intersect(h_a, c.subgroup);

            // Psi vanishes off H_a.
            auto psi = characters::psi_values(sys, m, a);
            for (abgroup::elem_t x = 0; x < g.order(); ++x)
                if (!h_a.contains(x))
                    expect(out, std::abs(psi[x]) < kTol, "Psi off H_a" + tag);

            // Coefficients are invariant under the annihilator shift.
            auto coeff = characters::fourier_coefficients(sys, m, a);
            auto ann = characters::annihilator(h_a);
            for (const auto& chi : ann)
                for (abgroup::elem_t t = 0; t < g.order(); ++t)
                    expect(out,
                           std::abs(coeff[g.add(t, chi.index())] - coeff[t]) < kTol,
                           "c(psi chi) = c(psi)" + tag);

            // Total coefficient mass equals prod (1 - zeta_j), rebuilt here.
            std::complex<double> total{0.0, 0.0};
            for (const auto& c : coeff)
                total += c;
            std::complex<double> prod{1.0, 0.0};
            std::vector<std::int64_t> orders;
            for (const auto& c : sys.cosets()) {
                if (c.contains(a))
                    continue;
                abgroup::elem_t delta = g.sub(c.rep, a);
                auto chi = characters::separating_character(c.subgroup, delta);
                auto zeta = chi(delta);
                prod *= std::complex<double>(1.0, 0.0) - zeta.value();
                orders.push_back(zeta.order());
            }
            expect(out, std::abs(total - prod) < kTol, "sum c = prod (1 - zeta)" + tag);

            // Exact route: divisibility of N_a and the resulting bound.
            std::int64_t N = std::int64_t(abgroup::n_a(sys, a));
            expect(out, std::int64_t(h_a.index()) == N, "N_a is the index of H_a" + tag);
            expect(out, cyclotomic::divides_product(N, cyclotomic::OrderMultiset(orders)),
                   "N_a divides the product" + tag);
            expect(out, k - m >= arith::mycielski_f(N), "k - m >= f(N_a)" + tag);
            expect(out, characters::verify_divisibility(sys, m, a).pass,
                   "bundled verdict" + tag);
        }
    }
    expect(out, sampled == 50, "all 50 samples built");
    out.detail = std::to_string(sampled) + " systems sampled";
    return out;
}

Outcome criterion_corpus() {
    Outcome out;
    std::vector<std::pair<zcover::ZCoverSystem, int>> corpus;
    for (int m = 1; m <= 3; ++m)
        for (int kk = 1; kk <= 6; ++kk)
            corpus.emplace_back(zcover::build_extremal_zcover(m + kk, m), m);
    corpus.emplace_back(make_z({{0, 2}, {1, 4}, {3, 8}, {7, 8}}), 1);
    corpus.emplace_back(make_z({{0, 2}, {0, 3}, {1, 4}, {5, 6}, {7, 12}}), 1);
    corpus.emplace_back(make_z({{0, 2}, {0, 3}, {1, 4}, {1, 6}, {11, 12}}), 1);
    corpus.emplace_back(make_z({{0, 2}, {1, 4}, {3, 4}}), 1);
    corpus.emplace_back(make_z({{1, 2}, {0, 4}, {2, 4}}), 1);
    corpus.emplace_back(make_z({{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}), 2);
    corpus.emplace_back(make_z({{0, 2}, {1, 2}, {0, 2}, {1, 2}}), 2);
    for (std::int64_t n : {2, 3, 4, 6}) {
        std::vector<std::pair<std::int64_t, std::int64_t>> part;
        for (std::int64_t j = 0; j < n; ++j)
            part.emplace_back(j, n);
        corpus.emplace_back(make_z(part), 1);
    }
    corpus.emplace_back(make_z({{0, 1}}), 1);
    corpus.emplace_back(make_z({{0, 1}, {0, 1}}), 2);

    expect(out, corpus.size() >= 30, "corpus has at least 30 systems");
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        auto report = zcover::check_zcover_bounds_all(corpus[i].first, corpus[i].second);
        expect(out, report.pass, "system " + std::to_string(i) + " fails the sandwich");
    }
    out.detail = std::to_string(corpus.size()) + " systems";
    return out;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        double limit_s;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "Mycielski function values and growth bound", 1.0, criterion_mycielski},
        {2, "extremal integer covers are exact and tight", 1.0, criterion_extremal_zcovers},
        {3, "p+1 coset covers of C_p x C_p", 1.0, criterion_cpcp},
        {4, "exhaustive bound sweep over small groups", 300.0, criterion_sweep},
        {5, "minimum proper-coset covers meet the f lower bound", 120.0,
         criterion_min_proper_covers},
        {6, "minimal divisibility multisets match f(n)", 60.0,
         criterion_divisibility_minima},
        {7, "subset exponential sums are constant across r", 5.0,
         criterion_exponential_sums},
        {8, "character machinery on sampled covers", 60.0, criterion_characters},
        {9, "per-prime sandwich on the integer cover corpus", 10.0, criterion_corpus},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.limit_s) {
            out.ok = false;
            out.detail = "over time budget of " + std::to_string(c.limit_s) + "s";
        }
        std::printf("%s criterion %d: %s (%.2fs%s%s)\n", out.ok ? "PASS" : "FAIL", c.id,
                    c.label, elapsed, out.detail.empty() ? "" : "; ",
                    out.detail.c_str());
        failures += !out.ok;
    }
    return failures == 0 ? 0 : 1;
}
