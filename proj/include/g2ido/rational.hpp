#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace g2ido {

/// Raised when an exact computation leaves the range of int64_t.
class OverflowError : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

/// Exact fraction over int64_t, always kept in lowest terms with a positive
/// denominator. Every operation checks for overflow and throws OverflowError
/// instead of wrapping.
class Rational {
  public:
    constexpr Rational() noexcept = default;
    Rational(std::int64_t value) noexcept : num_(value) {} // NOLINT: implicit by intent
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    /// Strictly positive integer.
    bool is_natural() const noexcept { return den_ == 1 && num_ > 0; }
    /// k * value is a natural number, i.e. value lies in N/k.
    bool in_natural_lattice(std::int64_t k) const;

    Rational operator-() const;
    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational &, const Rational &) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) noexcept;

    /// Canonical "p" or "p/q" rendering.
    std::string str() const;

    /// Accepts only "p" or "p/q" with an optional leading '-' and q > 0.
    static std::optional<Rational> parse(std::string_view text);

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace g2ido
