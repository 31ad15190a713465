#include "aeq/intpoly.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "aeq/errors.hpp"

namespace aeq {

namespace {

void trim(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim(coeffs_);
}

const BigInt& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

BigInt IntPolynomial::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

IntPolynomial IntPolynomial::derivative() const {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.emplace_back(coeffs_[i] * static_cast<unsigned long>(i));
    return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class Cursor {
   public:
    explicit Cursor(std::string s) : s_(std::move(s)) {}
    bool done() const { return i_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[i_]; }
    char take() { return s_[i_++]; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    std::size_t pos() const { return i_; }

    std::string digits() {
        std::string out;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(take());
        return out;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(i_) + " in \"" + s_ + "\"");
    }

    // A decimal point or exponent right after an integer means a non-integer coefficient.
    void reject_fraction() const {
        char c = peek();
        if (c == '.' || c == '/' || c == 'e' || c == 'E')
            throw ParseError("non-integer coefficient at position " + std::to_string(i_) + " in \"" + s_ + "\"");
    }

   private:
    std::string s_;
    std::size_t i_ = 0;
};

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

IntPolynomial parse_list(Cursor& cur) {
    cur.take();  // '['
    std::vector<BigInt> coeffs;
    if (cur.accept(']')) {
        if (!cur.done()) cur.fail("trailing characters");
        return {};
    }
    for (;;) {
        std::string num;
        if (cur.peek() == '-' || cur.peek() == '+') num.push_back(cur.take());
        std::string d = cur.digits();
        cur.reject_fraction();
        if (d.empty()) {
            if (std::isalpha(static_cast<unsigned char>(cur.peek()))) throw ParseError("non-integer coefficient in list");
            cur.fail("expected integer");
        }
        if (num == "+") num.clear();
        coeffs.emplace_back(num + d);
        if (cur.accept(',')) continue;
        if (cur.accept(']')) break;
        cur.fail("expected ',' or ']'");
    }
    if (!cur.done()) cur.fail("trailing characters");
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial parse_expression(Cursor& cur) {
    std::map<unsigned long, BigInt> terms;
    bool first = true;
    while (!cur.done() || first) {
        int sign = 1;
        if (cur.accept('+')) {
        } else if (cur.accept('-')) {
            sign = -1;
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;

        BigInt coef = 1;
        bool have_coef = false;
        std::string d = cur.digits();
        if (!d.empty()) {
            cur.reject_fraction();
            coef = BigInt(d);
            have_coef = true;
        }
        bool star = cur.accept('*');
        unsigned long exponent = 0;
        if (cur.peek() == 'x' || cur.peek() == 'X') {
            cur.take();
            exponent = 1;
            if (cur.accept('^')) {
                std::string e = cur.digits();
                if (e.empty()) cur.fail("expected exponent");
                cur.reject_fraction();
                if (e.size() > 6) cur.fail("exponent too large");
                exponent = std::stoul(e);
            }
        } else if (star || !have_coef) {
            if (cur.peek() == '.') throw ParseError("non-integer coefficient");
            cur.fail("expected term");
        }
        terms[exponent] += sign * coef;
    }
    if (terms.empty()) cur.fail("empty expression");
    std::vector<BigInt> coeffs(terms.rbegin()->first + 1);
    for (auto& [e, c] : terms) coeffs[e] = c;
    return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial parse_poly(std::string_view text) {
    Cursor cur(strip_spaces(text));
    if (cur.done()) throw ParseError("empty polynomial text");
    if (cur.peek() == '[') return parse_list(cur);
    return parse_expression(cur);
}

std::string render(const IntPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const BigInt& c = f.coeffs()[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) {
            if (mag != 1) out += "*";
            out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace aeq
