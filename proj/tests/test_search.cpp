#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "cosetcover/abgroup.hpp"
#include "cosetcover/arith.hpp"
#include "cosetcover/errors.hpp"
#include "cosetcover/search.hpp"

using namespace cosetcover;
using abgroup::AbelianGroup;
using abgroup::Coset;

TEST_CASE("enumerate_cosets counts and ordering") {
    AbelianGroup klein({2, 2});
    CHECK(search::enumerate_cosets(klein, true).size() == 6);
    CHECK(search::enumerate_cosets(klein, false).size() == 11);

    AbelianGroup c4({4});
    auto proper4 = search::enumerate_cosets(c4, true);
    CHECK(proper4.size() == 4);
    for (const auto& c : proper4)
        CHECK(c.is_proper());

    AbelianGroup c5({5});
    CHECK(search::enumerate_cosets(c5, false).size() == 6);

    // Deterministic pool order: nondecreasing subgroup size, first entry is {e}.
    auto all4 = search::enumerate_cosets(c4, false);
    CHECK(all4.front().subgroup.size() == 1);
    CHECK(all4.front().rep == 0);
    for (std::size_t i = 1; i < all4.size(); ++i)
        CHECK(all4[i - 1].subgroup.size() <= all4[i].subgroup.size());
}

TEST_CASE("coset_masks match member sets") {
    AbelianGroup g({2, 4});
    auto pool = search::enumerate_cosets(g, false);
    auto masks = search::coset_masks(g, pool);
    REQUIRE(masks.size() == pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        CHECK(std::popcount(masks[i]) == static_cast<int>(pool[i].members().size()));
        for (abgroup::elem_t x : pool[i].members())
            CHECK(((masks[i] >> x) & 1) == 1);
    }

    AbelianGroup big({65});
    auto bigpool = search::enumerate_cosets(big, false);
    CHECK_THROWS_AS(search::coset_masks(big, bigpool), capacity_error);
}

TEST_CASE("mask cover test agrees with the set-based one") {
    std::mt19937 rng(20240817);
    std::vector<std::vector<std::uint32_t>> shapes = {{8}, {2, 4}, {12}, {2, 2, 2}};
    for (const auto& shape : shapes) {
        AbelianGroup g(shape);
        auto pool = search::enumerate_cosets(g, false);
        auto pool_masks = search::coset_masks(g, pool);
        for (int trial = 0; trial < 250; ++trial) {
            std::size_t k = 1 + rng() % 4;
            std::vector<Coset> picked;
            std::vector<search::CoverBitmask> masks;
            for (std::size_t i = 0; i < k; ++i) {
                std::size_t id = rng() % pool.size();
                picked.push_back(pool[id]);
                masks.push_back(pool_masks[id]);
            }
            int m = 1 + static_cast<int>(rng() % 2);
            abgroup::CosetSystem sys(g, picked);
            bool naive = abgroup::is_m_cover(sys, m);
            bool fast = search::is_m_cover_masks(
                masks, static_cast<std::uint32_t>(g.order()), m);
            CHECK(naive == fast);
        }
    }
    std::vector<search::CoverBitmask> none;
    CHECK_THROWS_AS(search::is_m_cover_masks(none, 4, 0), domain_error);
}

TEST_CASE("sweep over the Klein four-group") {
    search::SearchConfig cfg{.group = AbelianGroup({2, 2}), .max_k = 3, .m = 1};
    auto stats = search::verify_bounds_exhaustively(cfg);
    CHECK(stats.covers_found == 133);
    CHECK(stats.counterexamples == 0);
    CHECK(stats.tight_cases == 22);
    CHECK(stats.systems_examined >= stats.covers_found);
    CHECK(stats.tight_witnesses.size() == 16); // capped
    for (const auto& w : stats.tight_witnesses)
        CHECK(w.find("orders=2x2") != std::string::npos);
}

TEST_CASE("sweep counts double covers of the two-element group") {
    search::SearchConfig cfg{.group = AbelianGroup({2}), .max_k = 2, .m = 2};
    auto stats = search::verify_bounds_exhaustively(cfg);
    CHECK(stats.covers_found == 1); // G + G, and k = m + f(1) makes it tight
    CHECK(stats.counterexamples == 0);
    CHECK(stats.tight_cases == 1);
}

TEST_CASE("sweep with proper cosets only finds no covers") {
    // Proper cosets avoid the identity, so nothing can be an m-cover.
    search::SearchConfig cfg{
        .group = AbelianGroup({2, 2}), .max_k = 3, .m = 1, .proper_cosets_only = true};
    auto stats = search::verify_bounds_exhaustively(cfg);
    CHECK(stats.systems_examined > 0);
    CHECK(stats.covers_found == 0);
    CHECK(stats.counterexamples == 0);
    CHECK(stats.tight_cases == 0);
}

TEST_CASE("sweep is deterministic and independent of thread count") {
    search::SearchConfig cfg{.group = AbelianGroup({8}), .max_k = 4, .m = 1};
    auto a = search::verify_bounds_exhaustively(cfg);
    auto b = search::verify_bounds_exhaustively(cfg);
    cfg.jobs = 4;
    auto c = search::verify_bounds_exhaustively(cfg);

    CHECK(a.covers_found == 969);
    CHECK(a.counterexamples == 0);
    CHECK(a.tight_cases == 8);
    for (const auto* other : {&b, &c}) {
        CHECK(a.systems_examined == other->systems_examined);
        CHECK(a.covers_found == other->covers_found);
        CHECK(a.counterexamples == other->counterexamples);
        CHECK(a.tight_cases == other->tight_cases);
        CHECK(a.tight_witnesses == other->tight_witnesses);
    }
}

TEST_CASE("symmetry dedup only shrinks the counts") {
    search::SearchConfig cfg{.group = AbelianGroup({2, 2}), .max_k = 3, .m = 1};
    auto full = search::verify_bounds_exhaustively(cfg);
    cfg.dedup_by_symmetry = true;
    auto dedup = search::verify_bounds_exhaustively(cfg);
    CHECK(dedup.counterexamples == 0);
    CHECK(dedup.covers_found > 0);
    CHECK(dedup.covers_found < full.covers_found);
    CHECK(dedup.tight_cases > 0);
    CHECK(dedup.tight_cases <= full.tight_cases);
}

TEST_CASE("min_proper_coset_cover pins") {
    CHECK(search::min_proper_coset_cover(AbelianGroup({1})).k_min == 0);
    CHECK(search::min_proper_coset_cover(AbelianGroup({4})).k_min == 2);
    CHECK(search::min_proper_coset_cover(AbelianGroup({2, 2})).k_min == 2);
    CHECK(search::min_proper_coset_cover(AbelianGroup({2, 2, 2})).k_min == 3);
    CHECK(search::min_proper_coset_cover(AbelianGroup({5})).k_min == 4);
    CHECK(search::min_proper_coset_cover(AbelianGroup({6})).k_min == 3);
}

TEST_CASE("min_proper_coset_cover witnesses check out") {
    for (std::uint64_t order = 2; order <= 12; ++order) {
        for (const auto& shape : search::abelian_isomorphism_types(order)) {
            AbelianGroup g(shape);
            auto res = search::min_proper_coset_cover(g);
            CHECK(res.k_min >= arith::mycielski_f(static_cast<std::int64_t>(order)));
            CHECK(res.witness.size() == static_cast<std::size_t>(res.k_min));
            auto report = abgroup::check_proper_coset_cover_bound(g, res.witness);
            CHECK(report.pass);
        }
    }
}

TEST_CASE("min_multiset_for_divisibility") {
    CHECK(search::min_multiset_for_divisibility(2) == 1);
    CHECK(search::min_multiset_for_divisibility(12) == 4);
    CHECK(search::min_multiset_for_divisibility(30) == 7);
    for (std::int64_t n = 2; n <= 20; ++n)
        CHECK(search::min_multiset_for_divisibility(n) == arith::mycielski_f(n));
    CHECK_THROWS_AS(search::min_multiset_for_divisibility(1), domain_error);
    CHECK_THROWS_AS(search::min_multiset_for_divisibility(31), capacity_error);
}

TEST_CASE("automorphism groups") {
    CHECK(search::automorphisms(AbelianGroup({2, 2})).size() == 6);
    CHECK(search::automorphisms(AbelianGroup({4})).size() == 2);
    CHECK(search::automorphisms(AbelianGroup({6})).size() == 2);
    CHECK(search::automorphisms(AbelianGroup({2, 2, 2})).size() == 168);
    CHECK(search::automorphisms(AbelianGroup({2, 4})).size() == 8);
    CHECK_THROWS_AS(search::automorphisms(AbelianGroup({17})), capacity_error);
}

TEST_CASE("automorphisms are bijective homomorphisms fixing e") {
    AbelianGroup g({2, 4});
    auto autos = search::automorphisms(g);
    bool has_identity = false;
    for (const auto& t : autos) {
        REQUIRE(t.size() == g.order());
        CHECK(t[0] == 0);
        std::vector<char> seen(g.order(), 0);
        for (abgroup::elem_t x = 0; x < g.order(); ++x)
            seen[t[x]] = 1;
        for (char s : seen)
            CHECK(s == 1);
        for (abgroup::elem_t x = 0; x < g.order(); ++x)
            for (abgroup::elem_t y = 0; y < g.order(); ++y)
                CHECK(t[g.add(x, y)] == g.add(t[x], t[y]));
        bool identity = true;
        for (abgroup::elem_t x = 0; x < g.order(); ++x)
            identity = identity && t[x] == x;
        has_identity = has_identity || identity;
    }
    CHECK(has_identity);
}

TEST_CASE("group_presentations enumerates ordered factorizations") {
    CHECK(search::group_presentations(1) ==
          std::vector<std::vector<std::uint32_t>>{{1}});
    CHECK(search::group_presentations(8) ==
          std::vector<std::vector<std::uint32_t>>{{2, 2, 2}, {2, 4}, {8}});
    CHECK(search::group_presentations(12) ==
          std::vector<std::vector<std::uint32_t>>{{2, 2, 3}, {2, 6}, {3, 4}, {12}});
    for (std::uint64_t order = 2; order <= 30; ++order)
        for (const auto& parts : search::group_presentations(order)) {
            std::uint64_t prod = 1;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                CHECK(parts[i] >= 2);
                if (i)
                    CHECK(parts[i - 1] <= parts[i]);
                prod *= parts[i];
            }
            CHECK(prod == order);
        }
    CHECK_THROWS_AS(search::group_presentations(0), domain_error);
}

TEST_CASE("abelian_isomorphism_types") {
    CHECK(search::abelian_isomorphism_types(1) ==
          std::vector<std::vector<std::uint32_t>>{{1}});
    CHECK(search::abelian_isomorphism_types(12) ==
          std::vector<std::vector<std::uint32_t>>{{2, 2, 3}, {3, 4}});
    CHECK(search::abelian_isomorphism_types(8) ==
          std::vector<std::vector<std::uint32_t>>{{2, 2, 2}, {2, 4}, {8}});
    CHECK(search::abelian_isomorphism_types(16) ==
          std::vector<std::vector<std::uint32_t>>{
              {2, 2, 2, 2}, {2, 2, 4}, {2, 8}, {4, 4}, {16}});
    // Type counts multiply over prime powers: 72 = 8 * 9 gives 3 * 2.
    CHECK(search::abelian_isomorphism_types(72).size() == 6);
}

TEST_CASE("formatting helpers") {
    AbelianGroup c4({4});
    auto subs = abgroup::all_subgroups(c4);
    const abgroup::Subgroup* h2 = nullptr;
    const abgroup::Subgroup* triv = nullptr;
    for (const auto& h : subs) {
        if (h.size() == 2)
            h2 = &h;
        if (h.size() == 1)
            triv = &h;
    }
    REQUIRE(h2 != nullptr);
    REQUIRE(triv != nullptr);
    CHECK(search::format_coset(Coset(*h2, 1)) == "(1)+<(2)>");
    CHECK(search::format_coset(Coset(*triv, 3)) == "(3)+<e>");

    std::vector<Coset> cosets = {Coset(*h2, 0), Coset(*h2, 1)};
    auto line = search::format_system(c4, cosets, 1);
    CHECK(line == "orders=4 m=1 cosets: (0)+<(2)>, (1)+<(2)>");
}

TEST_CASE("sweep rejects groups past the mask width") {
    search::SearchConfig cfg{.group = AbelianGroup({65}), .max_k = 2, .m = 1};
    CHECK_THROWS_AS(search::verify_bounds_exhaustively(cfg), capacity_error);
}
