#include "cosetcover/arith.hpp"

#include <numeric>

#include "cosetcover/errors.hpp"

namespace cosetcover::arith {

namespace {

void require_positive(std::int64_t n, const char* who) {
    if (n <= 0)
        throw domain_error(std::string(who) + ": argument must be a positive integer");
    if (n > kMaxFactorInput)
        throw capacity_error(std::string(who) + ": argument exceeds trial division bound");
}

// Increments that skip multiples of 2, 3 and 5 starting from 7.
constexpr int kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};

} // namespace

Factorization factorize(std::int64_t n) {
    require_positive(n, "factorize");
    Factorization out;
    out.n = n;
    auto strip = [&](std::int64_t p) {
        if (n % p != 0)
            return;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    strip(5);
    std::int64_t d = 7;
    int w = 0;
    while (d * d <= n) {
        strip(d);
        d += kWheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1)
        out.factors.push_back({n, 1});
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    if (n > kMaxFactorInput)
        throw capacity_error("is_prime: argument exceeds trial division bound");
    for (std::int64_t p : {2LL, 3LL, 5LL})
        if (n % p == 0)
            return n == p;
    std::int64_t d = 7;
    int w = 0;
    while (d * d <= n) {
        if (n % d == 0)
            return false;
        d += kWheel[w];
        w = (w + 1) & 7;
    }
    return true;
}

int ord_p(std::int64_t n, std::int64_t p) {
    require_positive(n, "ord_p");
    if (!is_prime(p))
        throw domain_error("ord_p: p must be prime");
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

std::int64_t mycielski_f(std::int64_t n) {
    std::int64_t f = 0;
    for (const auto& [p, e] : factorize(n).factors)
        f += static_cast<std::int64_t>(e) * (p - 1);
    return f;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = n; // validated by factorize below
    for (const auto& [p, e] : factorize(n).factors)
        phi = phi / p * (p - 1);
    return phi;
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0)
        throw domain_error("lcm_checked: arguments must be positive");
    std::int64_t g = std::gcd(a, b);
    __int128 l = static_cast<__int128>(a / g) * b;
    if (l > kMaxFactorInput)
        throw capacity_error("lcm_checked: lcm exceeds supported range");
    return static_cast<std::int64_t>(l);
}

std::int64_t lcm_all(std::span<const std::int64_t> values) {
    std::int64_t l = 1;
    for (std::int64_t v : values)
        l = lcm_checked(l, v);
    return l;
}

} // namespace cosetcover::arith
