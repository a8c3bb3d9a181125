#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "bpsdt/errors.hpp"

namespace bpsdt {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Equality is therefore structural.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}            // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(v) {}             // NOLINT(google-explicit-constructor)
    Rational(unsigned long v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(unsigned v) : value_(v) {}        // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) {
            detail::fail_input("rational with zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Parses `[+-]digits[/digits]`. Anything else, including whitespace and a
    /// zero denominator, throws InvalidInput.
    static Rational parse(std::string_view text) {
        auto digits_only = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s) {
                if (c < '0' || c > '9') return false;
            }
            return true;
        };
        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }
        const auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) {
            detail::fail_input("malformed rational \"" + std::string(text) + "\"");
        }
        Integer n(std::string(num), 10);
        Integer d(std::string(den), 10);
        if (d == 0) {
            detail::fail_input("zero denominator in \"" + std::string(text) + "\"");
        }
        if (negative) n = -n;
        return Rational(n, d);
    }

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Numerator of an integral value; throws if not integral.
    [[nodiscard]] Integer to_integer() const {
        if (!is_integer()) {
            detail::fail_input("expected an integer, got " + str());
        }
        return value_.get_num();
    }

    /// "p/q", or "p" when q = 1.
    [[nodiscard]] std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) detail::fail_input("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

inline Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
inline Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }
inline Rational rat_neg(const Rational& a) { return -a; }
inline Rational rat_div(const Rational& a, const Rational& b) { return a / b; }

/// (-1)^e for any integer exponent.
constexpr int sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace bpsdt
