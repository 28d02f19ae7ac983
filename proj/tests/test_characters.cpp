#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "cosetcover/abgroup.hpp"
#include "cosetcover/characters.hpp"
#include "cosetcover/errors.hpp"
#include "cosetcover/search.hpp"

using namespace cosetcover;
using abgroup::AbelianGroup;
using abgroup::Coset;
using abgroup::CosetSystem;
using abgroup::elem_t;
using abgroup::Subgroup;
using arith::Rational;
using characters::Character;
using characters::UnitRootPhase;

namespace {

CosetSystem partition_by(const AbelianGroup& g, const Subgroup& h) {
    std::vector<Coset> cosets;
    for (elem_t x = 0; x < g.order(); ++x) {
        Coset c(h, x);
        if (c.rep == x)
            cosets.push_back(std::move(c));
    }
    return CosetSystem(g, std::move(cosets));
}

} // namespace

TEST_CASE("unit root phases") {
    UnitRootPhase one;
    CHECK(one.is_one());
    CHECK(one.order() == 1);
    UnitRootPhase i(Rational(1, 4));
    CHECK(i.order() == 4);
    CHECK(std::abs(i.value() - std::complex<double>(0, 1)) < 1e-12);
    CHECK((i * i).phase == Rational(1, 2));
    UnitRootPhase wrap(Rational(5, 4));
    CHECK(wrap.phase == Rational(1, 4));
}

TEST_CASE("character evaluation and indexing") {
    AbelianGroup g({2, 4});
    for (elem_t t = 0; t < g.order(); ++t)
        CHECK(characters::character_from_index(g, t).index() == t);
    Character chi = characters::character_from_index(g, g.element({1, 1}));
    CHECK(chi(g.element({1, 0})).phase == Rational(1, 2));
    CHECK(chi(g.element({0, 1})).phase == Rational(1, 4));
    CHECK(chi(g.element({1, 3})).phase == Rational(1, 4)); // 1/2 + 3/4 mod 1
    CHECK(characters::trivial_character(g)(g.element({1, 3})).is_one());
}

TEST_CASE("character product is index addition") {
    AbelianGroup g({2, 4});
    for (elem_t s = 0; s < g.order(); ++s)
        for (elem_t t = 0; t < g.order(); ++t) {
            Character a = characters::character_from_index(g, s);
            Character b = characters::character_from_index(g, t);
            Character ab = characters::character_from_index(g, g.add(s, t));
            for (elem_t x = 0; x < g.order(); ++x)
                CHECK((a(x) * b(x)).phase == ab(x).phase);
        }
}

TEST_CASE("annihilator has the dual size") {
    AbelianGroup c8({8});
    Subgroup h(c8, {0, 4});
    auto ann = characters::annihilator(h);
    CHECK(ann.size() == 4);
    for (const auto& chi : ann)
        for (elem_t x : h.elements)
            CHECK(chi(x).is_one());
}

TEST_CASE("annihilator size equals the index for every small group") {
    for (std::uint64_t order = 1; order <= 64; ++order)
        for (const auto& type : search::abelian_isomorphism_types(order)) {
            AbelianGroup g(type);
            for (const auto& h : abgroup::all_subgroups(g))
                CHECK(characters::annihilator(h).size() == h.index());
        }
}

TEST_CASE("separating character") {
    AbelianGroup c8({8});
    Subgroup h(c8, {0, 4});
    auto chi = characters::separating_character(h, 2);
    CHECK(chi(0).is_one());
    CHECK(chi(4).is_one());
    CHECK_FALSE(chi(2).is_one());
    CHECK_THROWS_AS(characters::separating_character(h, 4), domain_error);
}

TEST_CASE("psi vanishes off the intersection subgroup") {
    AbelianGroup c4({4});
    auto sys = partition_by(c4, Subgroup(c4, {0, 2}));
    auto psi = characters::psi_values(sys, 1, 1);
    REQUIRE(psi.size() == 4);
    CHECK(std::abs(psi[0] - std::complex<double>(2, 0)) < 1e-9);
    CHECK(std::abs(psi[1]) < 1e-9);
    CHECK(std::abs(psi[2] - std::complex<double>(2, 0)) < 1e-9);
    CHECK(std::abs(psi[3]) < 1e-9);
}

TEST_CASE("fourier coefficients reproduce psi pointwise") {
    auto sys = abgroup::build_cp_cp_cover(2);
    const auto& g = sys.group();
    elem_t a = g.element({1, 0});
    auto psi = characters::psi_values(sys, 1, a);
    auto coef = characters::fourier_coefficients(sys, 1, a);
    REQUIRE(coef.size() == g.order());
    for (elem_t x = 0; x < g.order(); ++x) {
        std::complex<double> sum = 0;
        for (elem_t t = 0; t < g.order(); ++t)
            sum += coef[t] * characters::character_from_index(g, t)(x).value();
        CHECK(std::abs(sum - psi[x]) < 1e-9);
    }
}

TEST_CASE("divisibility certificate passes on reference systems") {
    auto plane = abgroup::build_cp_cp_cover(2);
    auto report =
        characters::verify_divisibility(plane, 1, plane.group().element({1, 0}));
    CHECK(report.pass);
    CHECK(report.facts.at("N_a") == "2");
    CHECK(report.facts.at("zeta orders") == "2,2");

    AbelianGroup c8({8});
    auto sys = partition_by(c8, Subgroup(c8, {0, 4}));
    CHECK(characters::verify_divisibility(sys, 1, 0).pass);
}

TEST_CASE("divisibility certificate preconditions and capacity") {
    auto plane = abgroup::build_cp_cp_cover(2);
    CHECK_THROWS_AS(characters::verify_divisibility(plane, 1, 0),
                    precondition_error); // identity has multiplicity 3
    AbelianGroup c27({27});
    auto fine = partition_by(c27, abgroup::trivial_subgroup(c27));
    CHECK_THROWS_AS(characters::verify_divisibility(fine, 1, 0), capacity_error);
}
