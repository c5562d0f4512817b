#include "g2ido/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace g2ido {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("rational addition overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("rational multiplication overflow");
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min())
        throw OverflowError("rational negation overflow");
    return -a;
}

// gcd on magnitudes; INT64_MIN is rejected by the callers before it gets here.
std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = checked_neg(num);
        den = checked_neg(den);
    }
    if (num == std::numeric_limits<std::int64_t>::min())
        throw OverflowError("rational numerator out of range");
    const std::int64_t g = gcd64(num, den);
    num_ = num / g;
    den_ = den / g;
}

bool Rational::in_natural_lattice(std::int64_t k) const {
    return (*this * Rational(k)).is_natural();
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_neg(num_);
    r.den_ = den_;
    return r;
}

Rational &Rational::operator+=(const Rational &rhs) {
    // a/b + c/d = (a*(d/g) + c*(b/g)) / (b/g*d)
    const std::int64_t g = std::gcd(den_, rhs.den_);
    const std::int64_t n = checked_add(checked_mul(num_, rhs.den_ / g), checked_mul(rhs.num_, den_ / g));
    const std::int64_t d = checked_mul(den_ / g, rhs.den_);
    *this = Rational(n, d);
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs) { return *this += -rhs; }

Rational &Rational::operator*=(const Rational &rhs) {
    const std::int64_t g1 = gcd64(num_, rhs.den_);
    const std::int64_t g2 = gcd64(rhs.num_, den_);
    // denominators are positive, so both gcds are at least 1
    const std::int64_t n = checked_mul(num_ / g1, rhs.num_ / g2);
    const std::int64_t d = checked_mul(den_ / g2, rhs.den_ / g1);
    *this = Rational(n, d);
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
    if (rhs.num_ == 0)
        throw std::domain_error("rational division by zero");
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? checked_neg(rhs.den_) : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? checked_neg(rhs.num_) : rhs.num_;
    return *this *= inv;
}

std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) noexcept {
    __extension__ using Wide = __int128;
    const Wide l = static_cast<Wide>(lhs.num_) * rhs.den_;
    const Wide r = static_cast<Wide>(rhs.num_) * lhs.den_;
    if (l < r)
        return std::strong_ordering::less;
    if (l > r)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s, bool allow_sign) -> std::optional<std::int64_t> {
        if (s.empty())
            return std::nullopt;
        std::size_t start = 0;
        if (s[0] == '-') {
            if (!allow_sign)
                return std::nullopt;
            start = 1;
        }
        if (start == s.size())
            return std::nullopt;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return std::nullopt;
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size())
            return std::nullopt;
        return value;
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text, true);
        if (!n || *n == std::numeric_limits<std::int64_t>::min())
            return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(text.substr(0, slash), true);
    auto d = parse_int(text.substr(slash + 1), false);
    if (!n || !d || *d == 0 || *n == std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    return Rational(*n, *d);
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace g2ido
