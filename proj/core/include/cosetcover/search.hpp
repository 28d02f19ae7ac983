// Exhaustive searches over coset systems of small groups.
//
// Systems are multisets of cosets drawn from a fixed, deterministically
// ordered pool (duplicates allowed); enumeration walks nondecreasing index
// sequences so each multiset appears once.  Coverage is tracked through
// 64-bit element masks, which caps searched groups at order 64.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cosetcover/abgroup.hpp"

namespace cosetcover::search {

using abgroup::elem_t;
using CoverBitmask = std::uint64_t;

inline constexpr std::uint64_t kMaxSearchOrder = 64;
inline constexpr std::uint64_t kMaxAutomorphismOrder = 16;

// Every coset of every subgroup (optionally only proper ones), ordered by
// (subgroup size, subgroup elements, representative).
std::vector<abgroup::Coset> enumerate_cosets(const abgroup::AbelianGroup& g,
                                             bool proper_only);

// Element masks for a coset pool over a group of order <= 64.
std::vector<CoverBitmask> coset_masks(const abgroup::AbelianGroup& g,
                                      std::span<const abgroup::Coset> cosets);

// Mask-based cover test; must agree with the set-based one.
bool is_m_cover_masks(std::span<const CoverBitmask> masks, std::uint32_t n_elements,
                      int m);

struct SearchConfig {
    abgroup::AbelianGroup group;
    int max_k = 3;
    int m = 1;
    bool proper_cosets_only = false;
    bool dedup_by_symmetry = false;
    int jobs = 1;
    std::size_t max_tight_witnesses = 16;
};

struct SweepStats {
    std::uint64_t systems_examined = 0;
    std::uint64_t covers_found = 0;
    std::uint64_t counterexamples = 0;
    std::uint64_t tight_cases = 0;
    std::vector<std::string> tight_witnesses; // capped formatted samples
};

// Enumerates all systems with 1 <= k <= max_k cosets, runs the cover-bound
// check on every m-cover found, and tallies violations (there should be
// none) and tight cases where k = m + f(N_a).  Branches that can no longer
// reach an m-cover are pruned.  With jobs > 1 the first-choice frontier is
// split across threads; results are merged in frontier order, so output
// does not depend on scheduling.
SweepStats verify_bounds_exhaustively(const SearchConfig& config);

struct MinCoverResult {
    int k_min = 0;
    std::vector<abgroup::Coset> witness; // empty for the trivial group
};

// Least number of proper cosets whose union is G minus the identity,
// by branch and bound over the full proper-coset pool: branch on the
// uncovered element with the fewest candidates, bound by covered-per-coset
// capacity.  Independent of the f-based lower bound by construction.
MinCoverResult min_proper_coset_cover(const abgroup::AbelianGroup& g);

// Least k such that some multiset of k root-of-unity orders (prime powers
// <= 2n suffice) makes n divide prod (1 - zeta_s); plain enumeration in
// increasing k, again independent of f.
std::int64_t min_multiset_for_divisibility(std::int64_t n);

// Human-readable one-liners, also used for sweep witness samples:
// "rep+<gens>" and "orders=2x2 m=1 cosets: ...".
std::string format_coset(const abgroup::Coset& c);
std::string format_system(const abgroup::AbelianGroup& g,
                          std::span<const abgroup::Coset> cosets, int m);

// All automorphisms as permutation tables, for the symmetry filter.
std::vector<std::vector<elem_t>> automorphisms(const abgroup::AbelianGroup& g);

// Unordered factorizations of the order into parts >= 2 (ascending), the
// presentations swept by exhaustive verification; order 1 gives {1}.
std::vector<std::vector<std::uint32_t>> group_presentations(std::uint64_t order);

// One presentation per isomorphism class: prime-power cyclic factors.
std::vector<std::vector<std::uint32_t>> abelian_isomorphism_types(std::uint64_t order);

} // namespace cosetcover::search
