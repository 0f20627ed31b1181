#include "girard/exactnum.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace girard {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g < 0) g = -g;
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

const BigInt& Rational::as_integer() const {
    if (den_ != 1) {
        throw std::domain_error("rational " + str() + " is not an integer");
    }
    return num_;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) {
        throw std::domain_error("rational division by zero");
    }
    BigInt n = num_ * o.den_;
    BigInt d = den_ * o.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be nonnegative");
    }
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    // Each partial product C(n-k+i, i) is an integer, so the division is exact.
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

BigInt factorial(std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: n must be nonnegative");
    }
    BigInt result = 1;
    for (std::int64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt ipow(const BigInt& base, std::uint32_t exp) { return boost::multiprecision::pow(base, exp); }

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

}  // namespace

Rational bernoulli_number(std::uint32_t k) {
    std::lock_guard lock(bernoulli_mutex);
    while (bernoulli_cache.size() <= k) {
        // B_m = -(1/(m+1)) sum_{j<m} C(m+1, j) B_j
        const auto m = static_cast<std::int64_t>(bernoulli_cache.size());
        Rational acc;
        for (std::int64_t j = 0; j < m; ++j) {
            acc += Rational(binomial(m + 1, j)) * bernoulli_cache[static_cast<std::size_t>(j)];
        }
        bernoulli_cache.push_back(-acc / Rational(BigInt(m + 1)));
    }
    return bernoulli_cache[k];
}

}  // namespace girard
