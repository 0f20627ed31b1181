#pragma once

// Sparse multivariate polynomials over the integers in three variable
// families:
//   X  x_i^{(j)}   printed  x[i]^(j)
//   Y  y_l         printed  y[l]
//   A  a_j^{(i)}   printed  a[j]^(i)
//
// Text form: terms in canonical order joined by " + " / " - ", each term
// "coef*var*var..." with the coefficient omitted when it is 1, and a
// power written as a trailing "^e" (e.g. "x[1]^(2)^3", "y[4]^2").

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "girard/exactnum.hpp"

namespace girard {

enum class Family : std::uint8_t { X = 0, Y = 1, A = 2 };

/// A variable. Order: family (X < Y < A), then subscript, then superscript.
/// Y variables carry no superscript (stored as 0).
struct VarId {
    Family family = Family::X;
    std::uint32_t sub = 1;
    std::uint32_t sup = 0;

    /// x_sub^{(sup)}
    static VarId x(std::uint32_t sub, std::uint32_t sup);
    /// y_index
    static VarId y(std::uint32_t index);
    /// a_sub^{(sup)}: alpha_j^{(i)} with j = sub, i = sup.
    static VarId a(std::uint32_t sub, std::uint32_t sup);

    std::string str() const;

    friend auto operator<=>(const VarId&, const VarId&) = default;
    friend bool operator==(const VarId&, const VarId&) = default;
};

std::ostream& operator<<(std::ostream& os, const VarId& v);

/// Power product; sorted by VarId, exponents strictly positive.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(VarId v, std::uint32_t exp = 1);

    const std::vector<std::pair<VarId, std::uint32_t>>& factors() const noexcept { return factors_; }
    bool is_unit() const noexcept { return factors_.empty(); }
    std::uint32_t degree() const noexcept;
    std::uint32_t exponent(const VarId& v) const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str() const;

private:
    std::vector<std::pair<VarId, std::uint32_t>> factors_;
};

/// Graded order: higher total degree first, then lexicographic with the
/// smaller variable (or larger exponent on it) first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, BigInt, MonomialOrder>;

    Polynomial() = default;
    Polynomial(BigInt c);  // NOLINT: constants embed implicitly
    Polynomial(int c) : Polynomial(BigInt(c)) {}  // NOLINT
    explicit Polynomial(const VarId& v);
    Polynomial(const Monomial& m, BigInt c);

    static Polynomial variable(const VarId& v) { return Polynomial(v); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term (zero if absent).
    BigInt constant_term() const;
    std::size_t size() const noexcept { return terms_.size(); }
    std::uint32_t degree() const noexcept;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const BigInt& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
    friend Polynomial operator*(const BigInt& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Canonical text form; "0" for the zero polynomial.
    std::string str() const;

private:
    void add_term(const Monomial& m, const BigInt& c);

    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
bool poly_equal(const Polynomial& p, const Polynomial& q);
Polynomial poly_pow(const Polynomial& p, std::uint32_t exp);

using Assignment = std::map<VarId, BigInt>;

/// Exact value at the assignment. Throws std::invalid_argument naming the
/// first variable of p that the assignment does not cover.
BigInt poly_eval(const Polynomial& p, const Assignment& assignment);

/// Replaces every variable v by image(v) and expands.
Polynomial poly_substitute(const Polynomial& p, const std::function<Polynomial(const VarId&)>& image);

/// Thrown by the text parsers; carries the byte offset of the problem.
class PolyParseError : public std::runtime_error {
public:
    PolyParseError(const std::string& what, std::size_t pos);
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// Inverse of Polynomial::str(). Accepts any term order and merges like
/// terms, so parse(str(p)) == p and str(parse(s)) is canonical.
Polynomial parse_polynomial(std::string_view text);

}  // namespace girard
