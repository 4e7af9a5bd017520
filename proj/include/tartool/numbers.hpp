#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace tar {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Rat& r) { return r.sign(); }

std::string to_string(const Rat& r);
double to_double(const Rat& r);

// Parses "p/q", integer, or decimal literals ("1.25", "-3e2"), exactly as written.
std::optional<Rat> parse_rat(const std::string& text);

/// Element of Q(sqrt(3)): value a + b*sqrt(3). Closed under +,-,*,/ and
/// exactly signed, which keeps every 60/90/120-degree comparison exact even
/// for drawings on the triangular lattice.
struct Quad {
  Rat a;
  Rat b;

  Quad() = default;
  Quad(int v) : a(v) {}                // NOLINT: implicit by design
  Quad(Rat v) : a(std::move(v)) {}     // NOLINT
  Quad(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}

  bool is_rational() const { return b.is_zero(); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  Quad operator-() const { return {-a, -b}; }
  Quad& operator+=(const Quad& o) { a += o.a; b += o.b; return *this; }
  Quad& operator-=(const Quad& o) { a -= o.a; b -= o.b; return *this; }

  friend Quad operator+(const Quad& x, const Quad& y) { return {x.a + y.a, x.b + y.b}; }
  friend Quad operator-(const Quad& x, const Quad& y) { return {x.a - y.a, x.b - y.b}; }
  friend Quad operator*(const Quad& x, const Quad& y) {
    return {x.a * y.a + 3 * (x.b * y.b), x.a * y.b + x.b * y.a};
  }
  friend Quad operator/(const Quad& x, const Quad& y);

  friend bool operator==(const Quad& x, const Quad& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
};

// Exact sign of a + b*sqrt(3).
int sign(const Quad& q);

inline bool operator<(const Quad& x, const Quad& y) { return sign(x - y) < 0; }
inline bool operator>(const Quad& x, const Quad& y) { return sign(x - y) > 0; }
inline bool operator<=(const Quad& x, const Quad& y) { return sign(x - y) <= 0; }
inline bool operator>=(const Quad& x, const Quad& y) { return sign(x - y) >= 0; }

Quad abs(const Quad& q);
double to_double(const Quad& q);

// Coordinate token: "p/q", "3", "1.25", "2r3", "1/2-3/4r3" (r3 = sqrt(3) unit).
std::string to_string(const Quad& q);
std::optional<Quad> parse_quad(const std::string& text);

// Exact total order on (a, b) pairs; used for point-keyed maps, not magnitude.
struct QuadLexLess {
  bool operator()(const Quad& x, const Quad& y) const {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

}  // namespace tar
