#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oscdirac {

/// Exact rational with int64 numerator/denominator, normalized (den > 0,
/// gcd = 1). Arithmetic throws std::overflow_error instead of wrapping.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    std::string str() const;
};

/// Scalar input that may carry an exact form:  p/q, sqrtN, or p/q*sqrtN.
/// radicand == 1 means the value is the rational coef itself.
struct ScalarInput {
    double value = 0.0;
    std::optional<Rational> coef;  // set when the token was exact
    std::int64_t radicand = 1;

    bool exact() const { return coef.has_value(); }
    bool exact_rational() const { return coef.has_value() && radicand == 1; }
    bool exact_irrational() const { return coef.has_value() && radicand != 1; }

    static ScalarInput from_double(double v) {
        ScalarInput s;
        s.value = v;
        return s;
    }
    static ScalarInput from_rational(const Rational& r) {
        ScalarInput s;
        s.coef = r;
        s.radicand = 1;
        s.value = r.value();
        return s;
    }
    static ScalarInput from_surd(const Rational& r, std::int64_t radicand);
};

/// Parses "p", "p/q", "sqrtN", "p/q*sqrtN" (optional leading '-'); any other
/// token is read as a plain floating-point literal. Throws on garbage.
ScalarInput parse_scalar(const std::string& token);

/// Continued-fraction convergents p/q of sqrt(radicand) for non-square
/// radicand >= 2, exact integer arithmetic.
struct Convergent {
    std::int64_t p = 0;  // numerator
    std::int64_t q = 1;  // denominator
};
std::vector<Convergent> sqrt_convergents(std::int64_t radicand, int count);

/// Convergents of an arbitrary double (floating continued fraction; used for
/// opaque non-surd inputs).
std::vector<Convergent> double_convergents(double x, int count);

bool is_perfect_square(std::int64_t n);

}  // namespace oscdirac
