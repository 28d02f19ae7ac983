#include "cosetcover/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "cosetcover/cyclotomic.hpp"
#include "cosetcover/errors.hpp"

namespace cosetcover::characters {

namespace {

using abgroup::AbelianGroup;
using abgroup::CosetSystem;
using abgroup::Subgroup;

// The data shared by psi_values, fourier_coefficients and
// verify_divisibility: for every coset index j not containing a, the
// deterministic separating character chi_j and zeta_j = chi_j(a_j - a).
struct Separated {
    std::vector<std::size_t> outside;
    std::vector<Character> chis;
    std::vector<UnitRootPhase> zetas;
};

Separated separate(const CosetSystem& sys, int m, elem_t a) {
    if (m < 1)
        throw domain_error("characters: m must be >= 1");
    if (!abgroup::is_m_cover(sys, m))
        throw precondition_error("characters: system is not an m-cover");
    if (abgroup::multiplicity(sys, a) != static_cast<std::size_t>(m))
        throw precondition_error("characters: multiplicity at the base point must equal m");

    Separated out;
    for (std::size_t s = 0; s < sys.k(); ++s) {
        const auto& c = sys.cosets()[s];
        if (c.contains(a))
            continue;
        out.outside.push_back(s);
        elem_t delta = sys.group().sub(c.rep, a);
        Character chi = separating_character(c.subgroup, delta);
        out.zetas.push_back(chi(delta));
        out.chis.push_back(std::move(chi));
    }
    if (out.outside.size() > kMaxOutsideCosets)
        throw capacity_error("characters: more than " +
                             std::to_string(kMaxOutsideCosets) +
                             " cosets off the base point");
    return out;
}

Subgroup intersection_through(const CosetSystem& sys, elem_t a) {
    Subgroup h = abgroup::full_subgroup(sys.group());
    for (const auto& c : sys.cosets())
        if (c.contains(a))
            h = abgroup::intersect(h, c.subgroup);
    return h;
}

} // namespace

std::complex<double> UnitRootPhase::value() const {
    double t = 2.0 * std::numbers::pi * phase.to_double();
    return {std::cos(t), std::sin(t)};
}

Character::Character(AbelianGroup g, std::vector<std::uint32_t> exps)
    : group(std::move(g)), exponents(std::move(exps)) {
    if (exponents.size() != group.rank())
        throw domain_error("Character: exponent count mismatch");
    for (std::size_t i = 0; i < exponents.size(); ++i)
        exponents[i] %= group.orders()[i];
}

UnitRootPhase Character::operator()(elem_t x) const {
    auto c = group.coords(x);
    arith::Rational q(0);
    for (std::size_t i = 0; i < c.size(); ++i)
        q += arith::Rational(static_cast<long long>(exponents[i]) * c[i],
                             group.orders()[i]);
    return UnitRootPhase(q);
}

elem_t Character::index() const {
    return group.element(exponents);
}

Character character_from_index(const AbelianGroup& g, elem_t t) {
    return Character(g, g.coords(t));
}

Character trivial_character(const AbelianGroup& g) {
    return Character(g, std::vector<std::uint32_t>(g.rank(), 0));
}

std::vector<Character> annihilator(const Subgroup& h) {
    const AbelianGroup& g = h.group;
    // chi_t is trivial on H iff sum_i t_i x_i L/d_i = 0 mod L for all x in
    // H, where L is the lcm of the d_i; integer arithmetic keeps it exact.
    std::int64_t L = 1;
    for (std::uint32_t d : g.orders())
        L = std::lcm(L, static_cast<std::int64_t>(d));
    std::vector<std::vector<std::int64_t>> weights;
    weights.reserve(h.elements.size());
    for (elem_t x : h.elements) {
        auto c = g.coords(x);
        std::vector<std::int64_t> w(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            w[i] = static_cast<std::int64_t>(c[i]) * (L / g.orders()[i]) % L;
        weights.push_back(std::move(w));
    }
    std::vector<Character> out;
    for (elem_t t = 0; t < g.order(); ++t) {
        auto exps = g.coords(t);
        bool trivial = true;
        for (const auto& w : weights) {
            std::int64_t acc = 0;
            for (std::size_t i = 0; i < w.size(); ++i)
                acc = (acc + static_cast<std::int64_t>(exps[i]) * w[i]) % L;
            if (acc != 0) {
                trivial = false;
                break;
            }
        }
        if (trivial)
            out.emplace_back(g, std::move(exps));
    }
    return out;
}

Character separating_character(const Subgroup& h, elem_t a) {
    if (h.contains(a))
        throw domain_error("separating_character: point lies in the subgroup");
    for (Character& chi : annihilator(h))
        if (!chi(a).is_one())
            return std::move(chi);
    throw std::logic_error("separating_character: no character separates the point");
}

std::vector<std::complex<double>> psi_values(const CosetSystem& sys, int m, elem_t a) {
    Separated sep = separate(sys, m, a);
    const AbelianGroup& g = sys.group();
    std::vector<std::complex<double>> psi(g.order(), {1.0, 0.0});
    for (std::size_t j = 0; j < sep.outside.size(); ++j) {
        std::complex<double> zeta = sep.zetas[j].value();
        for (elem_t x = 0; x < g.order(); ++x) {
            // Exact-equal phases cancel to a hard zero.
            UnitRootPhase chi_x = sep.chis[j](x);
            psi[x] *= chi_x == sep.zetas[j] ? std::complex<double>(0.0, 0.0)
                                            : chi_x.value() - zeta;
        }
    }
    return psi;
}

std::vector<std::complex<double>> fourier_coefficients(const CosetSystem& sys, int m,
                                                       elem_t a) {
    Separated sep = separate(sys, m, a);
    const AbelianGroup& g = sys.group();
    std::vector<std::complex<double>> coeff(g.order(), {0.0, 0.0});
    // DFS over subsets of J: include j (multiply the character product by
    // chi_j) or exclude j (multiply the scalar by -zeta_j).
    auto descend = [&](auto&& self, std::size_t j, elem_t chi_index,
                       std::complex<double> scalar) -> void {
        if (j == sep.outside.size()) {
            coeff[chi_index] += scalar;
            return;
        }
        self(self, j + 1, g.add(chi_index, sep.chis[j].index()), scalar);
        self(self, j + 1, chi_index, scalar * -sep.zetas[j].value());
    };
    descend(descend, 0, 0, {1.0, 0.0});
    return coeff;
}

BoundReport verify_divisibility(const CosetSystem& sys, int m, elem_t a) {
    Separated sep = separate(sys, m, a);
    const AbelianGroup& g = sys.group();
    const std::int64_t k = static_cast<std::int64_t>(sys.k());

    Subgroup h_a = intersection_through(sys, a);
    const std::int64_t N = static_cast<std::int64_t>(h_a.index());

    BoundReport report;
    report.check = "divisibility";
    report.facts["k"] = std::to_string(k);
    report.facts["m"] = std::to_string(m);
    report.facts["a"] = g.format(a);
    report.facts["N_a"] = std::to_string(N);
    report.facts["|J|"] = std::to_string(sep.outside.size());
    {
        std::string orders;
        for (const auto& z : sep.zetas)
            orders += (orders.empty() ? "" : ",") + std::to_string(z.order());
        report.facts["zeta orders"] = orders;
    }

    auto psi = psi_values(sys, m, a);
    auto ann = annihilator(h_a);

    // Psi(chi x) = Psi(x) ... rather, (Psi * chi)(x) = Psi(x) chi(x) must
    // equal Psi(x) for every chi trivial on H_a.
    double worst_invariance = 0.0;
    for (const auto& chi : ann) {
        for (elem_t x = 0; x < g.order(); ++x) {
            double dev = std::abs(psi[x] * chi(x).value() - psi[x]);
            worst_invariance = std::max(worst_invariance, dev);
        }
    }
    report.add_residual("all chi in annihilator of H_a", "Psi*chi = Psi",
                        worst_invariance, kTolerance);

    // Coefficient identity: sum of all c(psi) = Psi(e) = N_a * (sum of
    // c(psi_r) over coset representatives of the annihilator).
    auto coeff = fourier_coefficients(sys, m, a);
    std::complex<double> total{0.0, 0.0};
    for (const auto& c : coeff)
        total += c;
    report.add_residual("e", "sum of c(psi) = Psi(e)", std::abs(total - psi[0]),
                        kTolerance);

    std::vector<char> in_ann(g.order(), 0);
    for (const auto& chi : ann)
        in_ann[chi.index()] = 1;
    std::vector<char> seen(g.order(), 0);
    std::complex<double> rep_sum{0.0, 0.0};
    for (elem_t t = 0; t < g.order(); ++t) {
        if (seen[t])
            continue;
        rep_sum += coeff[t];
        for (elem_t u = 0; u < g.order(); ++u)
            if (in_ann[u])
                seen[g.add(t, u)] = 1;
    }
    report.add_residual("annihilator cosets", "sum of c(psi) = N_a * sum over reps",
                        std::abs(total - static_cast<double>(N) * rep_sum), kTolerance);

    // Exact route: N_a divides prod (1 - zeta_j) among algebraic integers.
    std::vector<std::int64_t> orders;
    for (const auto& z : sep.zetas)
        orders.push_back(z.order());
    bool divides = cyclotomic::divides_product(N, cyclotomic::OrderMultiset(orders));
    report.add_bound("product over J", "N_a | prod (1 - zeta_j)", arith::Rational(divides),
                     arith::Rational(1), divides);

    std::int64_t fN = arith::mycielski_f(N);
    report.add_bound("a=" + g.format(a), "k - m >= f(N_a)", arith::Rational(k - m),
                     arith::Rational(fN), k - m >= fN);

    report.finalize();
    return report;
}

} // namespace cosetcover::characters
