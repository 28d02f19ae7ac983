// Finite abelian groups presented as Z_{d1} x ... x Z_{dr}, their
// subgroups, cosets, and cover-bound verdicts.
//
// Elements are mixed-radix indices: the element with coordinates
// (c_1, ..., c_r) has index c_1*d_2*...*d_r + ... + c_r, so index order
// equals lexicographic coordinate order and every set of elements can be a
// sorted vector.  Subgroups store their full element list; cosets store a
// subgroup plus the least member as canonical representative.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosetcover/arith.hpp"
#include "cosetcover/report.hpp"

namespace cosetcover::abgroup {

using elem_t = std::uint32_t;

inline constexpr std::uint64_t kMaxGroupOrder = 1'000'000;
inline constexpr std::uint64_t kMaxSubgroupEnumOrder = 512;

class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<std::uint32_t> orders);

    const std::vector<std::uint32_t>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    std::uint64_t order() const { return order_; }

    elem_t element(const std::vector<std::uint32_t>& coords) const;
    std::vector<std::uint32_t> coords(elem_t x) const;

    elem_t zero() const { return 0; }
    elem_t add(elem_t x, elem_t y) const;
    elem_t neg(elem_t x) const;
    elem_t sub(elem_t x, elem_t y) const { return add(x, neg(y)); }
    elem_t mul(std::int64_t t, elem_t x) const;

    std::uint64_t element_order(elem_t x) const;

    std::string format(elem_t x) const; // "(c1,c2,...)"

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.orders_ == b.orders_;
    }

private:
    std::vector<std::uint32_t> orders_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t order_ = 1;
};

struct Subgroup {
    Subgroup(AbelianGroup parent, std::vector<elem_t> elems,
             std::vector<elem_t> gens = {});

    AbelianGroup group;
    std::vector<elem_t> elements;   // sorted, closed, contains 0
    std::vector<elem_t> generators; // may be empty for enumerated subgroups

    std::uint64_t size() const { return elements.size(); }
    std::uint64_t index() const { return group.order() / elements.size(); }
    bool contains(elem_t x) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.group == b.group && a.elements == b.elements;
    }
};

Subgroup trivial_subgroup(const AbelianGroup& g);
Subgroup full_subgroup(const AbelianGroup& g);
Subgroup subgroup_from_generators(const AbelianGroup& g, const std::vector<elem_t>& gens);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Every subgroup, ordered by (size, element list); requires order <= 512.
std::vector<Subgroup> all_subgroups(const AbelianGroup& g);

// A small generating set: greedy over ascending element indices, then
// pruned so no generator is redundant.
std::vector<elem_t> generating_set(const Subgroup& h);

struct Coset {
    Coset(Subgroup h, elem_t a);

    Subgroup subgroup;
    elem_t rep; // least member of the coset

    bool contains(elem_t x) const;
    std::vector<elem_t> members() const; // sorted
    bool is_proper() const;              // proper iff the identity lies outside
    friend bool operator==(const Coset& a, const Coset& b) {
        return a.rep == b.rep && a.subgroup == b.subgroup;
    }
};

class CosetSystem {
public:
    CosetSystem(AbelianGroup g, std::vector<Coset> cosets);

    const AbelianGroup& group() const { return group_; }
    const std::vector<Coset>& cosets() const { return cosets_; }
    std::size_t k() const { return cosets_.size(); }

private:
    AbelianGroup group_;
    std::vector<Coset> cosets_;
};

std::size_t multiplicity(const CosetSystem& sys, elem_t x);
bool is_m_cover(const CosetSystem& sys, int m);
bool is_exact_m_cover(const CosetSystem& sys, int m);
bool is_minimal_m_cover(const CosetSystem& sys, int m);
std::vector<std::size_t> irredundant_indices(const CosetSystem& sys, int m);

// N_a = index of the intersection of the subgroups whose coset contains a.
std::uint64_t n_a(const CosetSystem& sys, elem_t a);

// For an m-cover, verifies at every a with multiplicity m
//     N_a <= 2^(k-m)   and   k >= m + f(N_a),
// and for every irredundant index t
//     [G:G_t] <= 2^(k-m)   and   k >= m + f([G:G_t]).
BoundReport check_cover_bounds(const CosetSystem& sys, int m);

// Subgroup-relative variant: for a subgroup K and a base point a with
// multiplicity m,
//     k - m >= |{s : a not in a_s G_s, K not <= G_s}| >= f([K : K n H_a])
// and for irredundant t with K not <= G_t
//     |{s : K not <= G_s}| >= 1 + f([K : K n G_t]).
BoundReport check_subgroup_cover_bounds(const CosetSystem& sys, int m, elem_t a,
                                        const Subgroup& K);

// Checks that proper cosets covering G minus the identity satisfy
// k >= f(|G|).
BoundReport check_proper_coset_cover_bound(const AbelianGroup& g,
                                           const std::vector<Coset>& cosets);

// The p+1 subgroups of order p in Z_p x Z_p, as cosets of themselves: a
// minimal 1-cover in which the identity has multiplicity p+1 and every
// other element multiplicity 1.
CosetSystem build_cp_cp_cover(std::int64_t p);

// Projection onto the quotient by a subgroup, with the quotient presented
// again as an explicit AbelianGroup via a greedy basis of maximal orders.
struct QuotientMap {
    AbelianGroup quotient;
    Subgroup kernel;
    std::vector<elem_t> project; // indexed by parent element
};

QuotientMap quotient(const AbelianGroup& g, const Subgroup& h);

// Pushes a system through a quotient map; every coset subgroup must
// contain the kernel so that cover multiplicities are preserved.
CosetSystem map_system(const QuotientMap& q, const CosetSystem& sys);

} // namespace cosetcover::abgroup
