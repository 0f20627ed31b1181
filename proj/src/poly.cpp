#include "girard/poly.hpp"

#include <cctype>
#include <algorithm>

namespace girard {

VarId VarId::x(std::uint32_t sub, std::uint32_t sup) { return VarId{Family::X, sub, sup}; }
VarId VarId::y(std::uint32_t index) { return VarId{Family::Y, index, 0}; }
VarId VarId::a(std::uint32_t sub, std::uint32_t sup) { return VarId{Family::A, sub, sup}; }

std::string VarId::str() const {
    switch (family) {
        case Family::X: return "x[" + std::to_string(sub) + "]^(" + std::to_string(sup) + ")";
        case Family::Y: return "y[" + std::to_string(sub) + "]";
        case Family::A: return "a[" + std::to_string(sub) + "]^(" + std::to_string(sup) + ")";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const VarId& v) { return os << v.str(); }

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(VarId v, std::uint32_t exp) {
    if (exp > 0) factors_.emplace_back(v, exp);
}

std::uint32_t Monomial::degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

std::uint32_t Monomial::exponent(const VarId& v) const noexcept {
    for (const auto& [w, e] : factors_) {
        if (w == v) return e;
    }
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            out.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
}

std::string Monomial::str() const {
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += '*';
        s += v.str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    const auto n = std::min(fa.size(), fb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
        if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    }
    return fa.size() < fb.size();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(BigInt c) {
    if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

Polynomial::Polynomial(const VarId& v) { terms_.emplace(Monomial(v), BigInt(1)); }

Polynomial::Polynomial(const Monomial& m, BigInt c) {
    if (c != 0) terms_.emplace(m, std::move(c));
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

BigInt Polynomial::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t Polynomial::degree() const noexcept {
    // Highest degree term sorts first.
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (first) {
            if (negative) s += '-';
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        if (m.is_unit()) {
            s += mag.str();
        } else if (mag == 1) {
            s += m.str();
        } else {
            s += mag.str() + "*" + m.str();
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
bool poly_equal(const Polynomial& p, const Polynomial& q) { return p == q; }

Polynomial poly_pow(const Polynomial& p, std::uint32_t exp) {
    Polynomial result(1);
    Polynomial base = p;
    while (exp > 0) {
        if (exp & 1U) result *= base;
        exp >>= 1U;
        if (exp > 0) base *= base;
    }
    return result;
}

BigInt poly_eval(const Polynomial& p, const Assignment& assignment) {
    BigInt total = 0;
    for (const auto& [m, c] : p.terms()) {
        BigInt term = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                throw std::invalid_argument("no value assigned to variable " + v.str());
            }
            term *= ipow(it->second, e);
        }
        total += term;
    }
    return total;
}

Polynomial poly_substitute(const Polynomial& p, const std::function<Polynomial(const VarId&)>& image) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term(c);
        for (const auto& [v, e] : m.factors()) term *= poly_pow(image(v), e);
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

PolyParseError::PolyParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Polynomial parse() {
        skip_ws();
        if (at_end()) fail("empty polynomial text");
        Polynomial result;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
            skip_ws();
        }
        result += term(negative);
        skip_ws();
        while (!at_end()) {
            const char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            result += term(op == '-');
            skip_ws();
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(msg, pos_); }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string digits() {
        const auto start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::uint32_t index() {
        const auto at = pos_;
        const auto d = digits();
        if (d.size() > 9) throw PolyParseError("index too large", at);
        const auto v = static_cast<std::uint32_t>(std::stoul(d));
        if (v == 0) throw PolyParseError("indices start at 1", at);
        return v;
    }

    Polynomial term(bool negative) {
        BigInt coef = 1;
        Monomial mono;
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = BigInt(digits());
            need_factor = false;
            if (peek() == '*') {
                ++pos_;
                need_factor = true;
            }
        }
        if (need_factor) {
            mono = mono * factor();
            while (peek() == '*') {
                ++pos_;
                mono = mono * factor();
            }
        }
        return Polynomial(mono, negative ? BigInt(-coef) : coef);
    }

    Monomial factor() {
        const char f = peek();
        VarId v;
        if (f == 'x' || f == 'a') {
            ++pos_;
            expect('[');
            const auto sub = index();
            expect(']');
            expect('^');
            expect('(');
            const auto sup = index();
            expect(')');
            v = f == 'x' ? VarId::x(sub, sup) : VarId::a(sub, sup);
        } else if (f == 'y') {
            ++pos_;
            expect('[');
            const auto sub = index();
            expect(']');
            v = VarId::y(sub);
        } else {
            fail("expected a variable");
        }
        std::uint32_t exp = 1;
        if (peek() == '^') {
            ++pos_;
            exp = index();
        }
        return Monomial(v, exp);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace girard
