#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace maslov {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always in lowest terms with positive denominator
/// (the backing type canonicalizes on every operation).
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational(long long num, long long den = 1) {
    return Rational(num, den);
}

inline int sgn(const Rational& q) { return q.sign(); }

inline Rational abs_r(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational min_r(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max_r(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Serializes as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point&) const = default;

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator-() const { return {-x, -y}; }
    Point operator*(const Rational& s) const { return {x * s, y * s}; }
};

inline Point point(long long x, long long y) { return {Rational(x), Rational(y)}; }

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

/// L1 norm; rational, monotone along segments. Used as the curve parameter scale.
inline Rational l1(const Point& p) { return abs_r(p.x) + abs_r(p.y); }

std::string to_string(const Point& p);

}  // namespace maslov
