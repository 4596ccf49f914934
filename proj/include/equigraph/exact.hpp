#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace equigraph {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest s with s*s <= n (n >= 0).
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// Splits n = f^2 * core with core squarefree. Returns {f, core}; n >= 0.
std::pair<Integer, Integer> square_factor(const Integer& n);

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// An exact real number a + b*sqrt(D) with D squarefree.
///
/// Values with D in {0, 1} are folded into the rational part, so every
/// Surd has a unique normalized representation and equality is
/// field-wise.
class Surd {
public:
    Surd() = default;
    Surd(long long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
    Surd(Rational value) : a_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

    /// Canonical form of a + b*sqrt(D). Throws std::domain_error if D < 0.
    static Surd normalize(Rational a, Rational b, Integer D);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Integer& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_integer() const;
    /// Sign of the real value: -1, 0 or 1.
    int sign() const;
    double to_double() const;

    Surd operator-() const;
    /// Sums and products must share the radicand (or have a rational side).
    friend Surd operator+(const Surd& x, const Surd& y);
    friend Surd operator-(const Surd& x, const Surd& y);
    friend Surd operator*(const Surd& x, const Surd& y);
    friend Surd operator/(const Surd& x, const Surd& y);

    friend bool operator==(const Surd& x, const Surd& y) = default;

    std::string str() const;
    static Surd parse(std::string_view text);

private:
    Rational a_{0};
    Rational b_{0};
    Integer d_{1};
};

/// Exact ordering of two single-radicand values; radicands may differ.
std::strong_ordering compare(const Surd& x, const Surd& y);
Surd abs(const Surd& x);

inline bool operator<(const Surd& x, const Surd& y) { return compare(x, y) < 0; }
inline bool operator>(const Surd& x, const Surd& y) { return compare(x, y) > 0; }
inline bool operator<=(const Surd& x, const Surd& y) { return compare(x, y) <= 0; }
inline bool operator>=(const Surd& x, const Surd& y) { return compare(x, y) >= 0; }

/// A finite sum of c_D * sqrt(D) over distinct squarefree D (D = 1 is the
/// rational part). Zero coefficients are never stored.
class ExactValue {
public:
    ExactValue() = default;
    ExactValue(long long value);  // NOLINT(google-explicit-constructor)
    ExactValue(const Rational& value);  // NOLINT(google-explicit-constructor)
    ExactValue(const Surd& value);  // NOLINT(google-explicit-constructor)

    const std::map<Integer, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Rational part (coefficient of sqrt(1)).
    Rational rational_part() const;
    /// Single-radicand view; throws std::domain_error with >1 irrational term.
    Surd as_surd() const;
    double to_double() const;

    ExactValue& operator+=(const ExactValue& other);
    ExactValue& operator-=(const ExactValue& other);
    ExactValue& operator*=(const Rational& factor);
    friend ExactValue operator+(ExactValue x, const ExactValue& y) { return x += y; }
    friend ExactValue operator-(ExactValue x, const ExactValue& y) { return x -= y; }
    friend ExactValue operator*(ExactValue x, const Rational& f) { return x *= f; }
    ExactValue operator-() const { return ExactValue{} - *this; }

    friend bool operator==(const ExactValue&, const ExactValue&) = default;

    /// Exact comparison against a rational threshold.
    std::strong_ordering compare_to(const Rational& threshold) const;

    std::string str() const;
    static ExactValue parse(std::string_view text);

private:
    void add_term(const Integer& radicand, const Rational& coeff);
    std::map<Integer, Rational> terms_;
};

/// Multiset sum of Surds weighted by positive multiplicities.
ExactValue exact_sum(const std::vector<std::pair<Surd, Integer>>& values);

}  // namespace equigraph
