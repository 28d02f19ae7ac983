// Covers of the integers by residue classes a mod n.
//
// A system {a_s(n_s)} is an m-cover when every integer lies in at least m
// of the classes; checks run over one full period lcm(n_1..n_k).  The main
// verdict, check_zcover_bounds, verifies the refined per-prime chain
//
//   |I(p)|  >=  sum_{s in I(p)} p^{-(ord_p(n_s) - ord_p(a_s - a) - 1)}
//           >=  ord_p(N_a) (p - 1)
//
// for every prime p | N_a, where N_a = lcm of the moduli of the classes
// through a, together with k >= m + f(N_a) and N_a <= 2^(k-m).
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "cosetcover/arith.hpp"
#include "cosetcover/report.hpp"

namespace cosetcover::zcover {

// Coverage tables materialize one period; keep it interactive.
inline constexpr std::int64_t kMaxPeriod = 1'000'000;
// Subset sums enumerate 2^|J| terms.
inline constexpr std::size_t kMaxSubsetClasses = 20;

struct ResidueClass {
    ResidueClass(std::int64_t a, std::int64_t n);

    std::int64_t rep; // normalized into [0, mod)
    std::int64_t mod;

    bool contains(std::int64_t x) const;
    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

class ZCoverSystem {
public:
    explicit ZCoverSystem(std::vector<ResidueClass> classes);

    const std::vector<ResidueClass>& classes() const { return classes_; }
    std::size_t k() const { return classes_.size(); }

    // lcm of all moduli; throws capacity_error beyond kMaxPeriod.
    std::int64_t period() const;

private:
    std::vector<ResidueClass> classes_;
};

// Number of classes containing x.
std::size_t multiplicity(const ZCoverSystem& sys, std::int64_t x);

bool is_m_cover(const ZCoverSystem& sys, int m);
bool is_exact_m_cover(const ZCoverSystem& sys, int m);
bool is_minimal_m_cover(const ZCoverSystem& sys, int m);

// Indices (ascending) of classes whose removal breaks the m-cover property.
std::vector<std::size_t> irredundant_indices(const ZCoverSystem& sys, int m);

// N_a = lcm of the moduli of the classes containing a (1 when none does).
std::int64_t n_a(const ZCoverSystem& sys, std::int64_t a);

// Indices of classes NOT containing a.
std::vector<std::size_t> outside_indices(const ZCoverSystem& sys, std::int64_t a);

// Requires an m-cover with multiplicity(a) == m; see the header comment.
BoundReport check_zcover_bounds(const ZCoverSystem& sys, int m, std::int64_t a);

// Runs the same bounds at every base point a in [0, period) with
// multiplicity exactly m, aggregated: the report carries counts, the
// largest N_a, tight base points (k = m + f(N_a)), and witnesses only for
// violations.  Single coverage pass, so it stays linear in the period.
BoundReport check_zcover_bounds_all(const ZCoverSystem& sys, int m);

// Subset exponential sums attached to a base point and integer weights.
//
// For J = outside_indices(sys, base), weights m_s (s in J) and a target
// fractional class alpha in [0,1), the value C_r collects
// (-1)^|I| e(sum_{s in I} (a_s - base) m_s / n_s) over the subsets I of J
// whose weight sum has fractional part (alpha + r) / N_base.  All C_r for a
// fixed alpha are equal whenever the system m-covers the base point.
struct ExpSumSpec {
    std::int64_t base = 0;
    std::map<std::size_t, std::int64_t> weights; // keyed by class index, all in J
    arith::Rational alpha;                       // in [0, 1)
};

std::vector<std::complex<double>> exponential_sums(const ZCoverSystem& sys,
                                                   const ExpSumSpec& spec);

// The alpha values realized by some subset of J (sorted, deduplicated).
std::vector<arith::Rational> realized_alphas(const ZCoverSystem& sys, std::int64_t base,
                                             const std::map<std::size_t, std::int64_t>& weights);

// The extremal exact m-cover with k = m + f(2^(k-m)):
// m-1 copies of 0(1), the classes 2^(j-1)(2^j) for j = 1..k-m, and 0(2^(k-m)).
ZCoverSystem build_extremal_zcover(int k, int m);

} // namespace cosetcover::zcover
