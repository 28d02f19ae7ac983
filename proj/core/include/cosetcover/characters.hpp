// Characters of finite abelian groups with exact root-of-unity phases.
//
// A character of Z_{d1} x ... x Z_{dr} is an exponent tuple (t_1,...,t_r),
// t_i in [0, d_i); it sends x to e(sum t_i x_i / d_i) where e(q) = exp(2 pi
// i q).  Exponent tuples use the same mixed-radix indexing as group
// elements, so the dual group is the same AbelianGroup and characters
// multiply by adding indices.  Phases stay exact rationals until a value
// is actually needed as a complex number.
//
// The cover machinery: given an m-cover {a_s G_s} and a base point a with
// multiplicity exactly m, pick for every coset not containing a a
// character chi_j trivial on G_j with zeta_j = chi_j(a_j - a) != 1.  Then
//
//   Psi(x) = prod_j (chi_j(x) - zeta_j)
//
// vanishes off H_a (the intersection of the subgroups through a), Psi is
// invariant under multiplication by any character trivial on H_a, and the
// Fourier coefficients c(psi) of Psi satisfy
//
//   sum over all psi of c(psi)  =  Psi(e)  =  N_a * sum over coset
//   representatives psi_r of the annihilator of H_a of c(psi_r),
//
// which forces N_a to divide prod_j (1 - zeta_j) in the algebraic
// integers and yields k - m >= f(N_a).
#pragma once

#include <complex>
#include <vector>

#include "cosetcover/abgroup.hpp"
#include "cosetcover/rational.hpp"
#include "cosetcover/report.hpp"

namespace cosetcover::characters {

using abgroup::elem_t;

inline constexpr std::size_t kMaxOutsideCosets = 24;
inline constexpr double kTolerance = 1e-9;

// e(phase) with the phase kept as an exact rational in [0, 1).
struct UnitRootPhase {
    UnitRootPhase() : phase(0) {}
    explicit UnitRootPhase(const arith::Rational& q) : phase(q.frac()) {}

    arith::Rational phase;

    bool is_one() const { return phase == arith::Rational(0); }
    // Multiplicative order of the root of unity, i.e. the phase denominator.
    std::int64_t order() const { return phase.den().get_si(); }
    std::complex<double> value() const;

    friend UnitRootPhase operator*(const UnitRootPhase& a, const UnitRootPhase& b) {
        return UnitRootPhase(a.phase + b.phase);
    }
    friend bool operator==(const UnitRootPhase&, const UnitRootPhase&) = default;
};

struct Character {
    Character(abgroup::AbelianGroup g, std::vector<std::uint32_t> exps);

    abgroup::AbelianGroup group;
    std::vector<std::uint32_t> exponents; // t_i in [0, d_i)

    UnitRootPhase operator()(elem_t x) const;
    elem_t index() const; // mixed-radix index of the exponent tuple
};

Character character_from_index(const abgroup::AbelianGroup& g, elem_t t);
Character trivial_character(const abgroup::AbelianGroup& g);

// All characters trivial on H, ordered by exponent index.  Its size is
// always [G:H].
std::vector<Character> annihilator(const abgroup::Subgroup& h);

// The first character (by exponent index) trivial on H with chi(a) != 1;
// requires a outside H.
Character separating_character(const abgroup::Subgroup& h, elem_t a);

// Psi tabulated over the whole group; requires an m-cover and
// multiplicity(a) == m so that the vanishing guarantee applies.
std::vector<std::complex<double>> psi_values(const abgroup::CosetSystem& sys, int m,
                                             elem_t a);

// Fourier coefficients of Psi in the character basis, indexed by exponent
// index: c(psi) = sum over subsets I of J with prod_{j in I} chi_j = psi
// of prod_{j not in I} (-zeta_j).
std::vector<std::complex<double>> fourier_coefficients(const abgroup::CosetSystem& sys,
                                                       int m, elem_t a);

// Bundles the checks above: Psi-invariance under the annihilator of H_a,
// the coefficient identity sum c(psi) = N_a * sum over coset reps, and
// the exact divisibility criterion giving k - m >= f(N_a).
BoundReport verify_divisibility(const abgroup::CosetSystem& sys, int m, elem_t a);

} // namespace cosetcover::characters
