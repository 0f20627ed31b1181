#pragma once

// Exact integers and rationals, plus the combinatorial number functions
// (binomials, factorials, Bernoulli numbers) the identity checkers share.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace girard {

using BigInt = boost::multiprecision::cpp_int;

/// Canonical exact rational: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
    Rational(std::int64_t n) : num_(n), den_(1) {}        // NOLINT
    Rational(int n) : num_(n), den_(1) {}                 // NOLINT

    /// Throws std::domain_error if den == 0.
    Rational(BigInt num, BigInt den);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    /// The integer value; throws std::domain_error when the denominator is not 1.
    const BigInt& as_integer() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

enum class ArithOp { add, sub, mul, div };

/// Single dispatch point for the four field operations.
Rational rational_arith(const Rational& a, const Rational& b, ArithOp op);

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

/// base^exp for exp >= 0 (0^0 = 1).
BigInt ipow(const BigInt& base, std::uint32_t exp);

/// B_k with B_1 = -1/2, from sum_{j=0}^{m} C(m+1, j) B_j = 0.
/// Values are memoized process-wide behind a mutex.
Rational bernoulli_number(std::uint32_t k);

}  // namespace girard
