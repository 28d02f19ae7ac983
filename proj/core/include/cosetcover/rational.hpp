// Exact rational arithmetic on top of GMP.
//
// All bound checks in this library compare exact rationals; doubles only
// appear at the very end when a quantity is exponentiated onto the unit
// circle.  The wrapper keeps values canonical (reduced, positive
// denominator) at all times.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "cosetcover/errors.hpp"

namespace cosetcover::arith {

using BigInt = mpz_class;

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long v) : q_(BigInt(static_cast<long>(v))) {}
    Rational(const BigInt& v) : q_(v) {}

    Rational(long long num, long long den)
        : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.q_ == 0)
            throw domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // Largest integer <= *this, correct for negatives as well.
    BigInt floor() const {
        BigInt f;
        mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
        return f;
    }

    // Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    double to_double() const { return q_.get_d(); }

    std::string str() const {
        if (is_integer())
            return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

} // namespace cosetcover::arith
