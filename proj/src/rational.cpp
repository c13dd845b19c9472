#include "hodgecheck/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hodgecheck {

namespace {

using detail::wide_int;

wide_int wide_gcd(wide_int a, wide_int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(wide_int v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("malformed rational \"" + std::string(whole) + "\"");
    }
    return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    *this = from_wide(n, d);
}

Rational Rational::from_wide(detail::wide_int n, detail::wide_int d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    wide_int g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits(n) || !fits(d)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s, text));
    std::int64_t n = parse_int(trim(s.substr(0, slash)), text);
    std::int64_t d = parse_int(trim(s.substr(slash + 1)), text);
    if (d == 0) {
        throw std::invalid_argument("rational \"" + std::string(text) + "\" has zero denominator");
    }
    return Rational(n, d);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    return from_wide(-static_cast<detail::wide_int>(num_), den_);
}

Rational& Rational::operator+=(const Rational& o) {
    wide_int n = static_cast<detail::wide_int>(num_) * o.den_ + static_cast<detail::wide_int>(o.num_) * den_;
    wide_int d = static_cast<detail::wide_int>(den_) * o.den_;
    return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o) {
    return *this += -o;
}

Rational& Rational::operator*=(const Rational& o) {
    // cross-reduce first so products of already-reduced values stay small
    wide_int g1 = wide_gcd(num_, o.den_);
    wide_int g2 = wide_gcd(o.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    wide_int n = (num_ / g1) * (o.num_ / g2);
    wide_int d = (den_ / g2) * (o.den_ / g1);
    return *this = from_wide(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero rational");
    Rational inv;
    inv = from_wide(o.den_, o.num_);
    return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    wide_int l = static_cast<detail::wide_int>(a.num_) * b.den_;
    wide_int r = static_cast<detail::wide_int>(b.num_) * a.den_;
    return l <=> r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace hodgecheck
