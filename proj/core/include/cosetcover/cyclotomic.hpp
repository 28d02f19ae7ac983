// Exact divisibility of products of (1 - zeta) by rational integers.
//
// For roots of unity zeta_s of orders n_s >= 2, the rational integer n
// divides prod_s (1 - zeta_s) in the ring of algebraic integers exactly
// when for every prime p
//
//   sum over s with n_s a power of p of 1/phi(n_s)  >=  ord_p(n).
//
// Consequently the least k for which orders n_1..n_k with this property
// exist is k = f(n), witnessed by ord_p(n)(p-1) copies of p for each
// prime p dividing n.
#pragma once

#include <cstdint>
#include <vector>

#include "cosetcover/arith.hpp"
#include "cosetcover/rational.hpp"

namespace cosetcover::cyclotomic {

// Multiset of root-of-unity orders, each >= 2, kept sorted.
struct OrderMultiset {
    OrderMultiset() = default;
    explicit OrderMultiset(std::vector<std::int64_t> values);

    std::vector<std::int64_t> orders;

    std::size_t size() const { return orders.size(); }
};

// The per-prime criterion above, evaluated in exact rationals.
bool divides_product(std::int64_t n, const OrderMultiset& orders);

// One row per prime dividing n: the accumulated sum of 1/phi(n_s) over
// p-power orders against the required ord_p(n).
struct PrimeCheck {
    std::int64_t prime = 0;
    std::int64_t required = 0; // ord_p(n)
    arith::Rational sum;
    bool holds = false;
};

std::vector<PrimeCheck> divisibility_profile(std::int64_t n, const OrderMultiset& orders);

struct MinimalCertificate {
    std::int64_t k = 0;
    OrderMultiset orders;
};

// k = f(n) together with the witnessing multiset of prime orders.
MinimalCertificate minimal_k(std::int64_t n);

// For a multiset of exactly f(n) orders, divisibility holds iff the
// multiset consists of exactly ord_p(n)(p-1) copies of p for every prime
// p | n.  Both the per-prime criterion and this structural shape are
// evaluated; a mismatch would be a bug and throws logic_error.
bool is_tight_configuration(std::int64_t n, const OrderMultiset& orders);

} // namespace cosetcover::cyclotomic
