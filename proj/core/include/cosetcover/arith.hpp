// Elementary number theory: factorization, p-adic valuations, Euler phi,
// overflow-checked lcm, and the Mycielski function
//
//     f(n) = sum over primes p | n of ord_p(n) * (p - 1),
//
// which is the central lower-bound quantity of the whole library.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cosetcover/rational.hpp"

namespace cosetcover::arith {

// Trial division stays interactive up to this bound.
inline constexpr std::int64_t kMaxFactorInput = 1'000'000'000'000LL;

struct PrimePower {
    std::int64_t prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    std::int64_t n = 1;
    std::vector<PrimePower> factors; // ascending primes; empty iff n == 1
};

// Prime factorization by trial division on a mod-30 wheel.
Factorization factorize(std::int64_t n);

bool is_prime(std::int64_t n);

// ord_p(n): the exponent of the prime p in n.
int ord_p(std::int64_t n, std::int64_t p);

// f(n) = sum_{p | n} ord_p(n) (p - 1).  Completely additive, f(1) = 0.
std::int64_t mycielski_f(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

// lcm with overflow detection; throws capacity_error rather than wrapping.
std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

// lcm of a list; the empty list has lcm 1.
std::int64_t lcm_all(std::span<const std::int64_t> values);

} // namespace cosetcover::arith
