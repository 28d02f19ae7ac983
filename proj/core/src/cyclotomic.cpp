#include "cosetcover/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

#include "cosetcover/errors.hpp"

namespace cosetcover::cyclotomic {

OrderMultiset::OrderMultiset(std::vector<std::int64_t> values) : orders(std::move(values)) {
    for (std::int64_t v : orders)
        if (v < 2)
            throw domain_error("OrderMultiset: root-of-unity orders must be >= 2");
    std::sort(orders.begin(), orders.end());
}

std::vector<PrimeCheck> divisibility_profile(std::int64_t n, const OrderMultiset& orders) {
    if (n < 1)
        throw domain_error("divisibility_profile: n must be a positive integer");
    std::vector<PrimeCheck> rows;
    for (const auto& [p, e] : arith::factorize(n).factors) {
        PrimeCheck row;
        row.prime = p;
        row.required = e;
        for (std::int64_t v : orders.orders) {
            std::int64_t rest = v;
            while (rest % p == 0)
                rest /= p;
            if (rest == 1) // v is a power of p
                row.sum += arith::Rational(1, arith::euler_phi(v));
        }
        row.holds = row.sum >= arith::Rational(e);
        rows.push_back(std::move(row));
    }
    return rows;
}

bool divides_product(std::int64_t n, const OrderMultiset& orders) {
    for (const auto& row : divisibility_profile(n, orders))
        if (!row.holds)
            return false;
    return true;
}

MinimalCertificate minimal_k(std::int64_t n) {
    if (n < 2)
        throw domain_error("minimal_k: n must be >= 2");
    MinimalCertificate cert;
    std::vector<std::int64_t> orders;
    for (const auto& [p, e] : arith::factorize(n).factors)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(e) * (p - 1); ++i)
            orders.push_back(p);
    cert.orders = OrderMultiset(std::move(orders));
    cert.k = static_cast<std::int64_t>(cert.orders.size());
    if (cert.k != arith::mycielski_f(n) || !divides_product(n, cert.orders))
        throw std::logic_error("minimal_k: certificate construction failed");
    return cert;
}

bool is_tight_configuration(std::int64_t n, const OrderMultiset& orders) {
    if (n < 2)
        throw domain_error("is_tight_configuration: n must be >= 2");
    if (static_cast<std::int64_t>(orders.size()) != arith::mycielski_f(n))
        throw domain_error("is_tight_configuration: multiset size must equal f(n)");
    bool by_criterion = divides_product(n, orders);
    bool by_shape = orders.orders == minimal_k(n).orders.orders;
    if (by_criterion != by_shape)
        throw std::logic_error("is_tight_configuration: characterizations disagree");
    return by_criterion;
}

} // namespace cosetcover::cyclotomic
