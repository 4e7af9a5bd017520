#include "tartool/numbers.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace tar {

std::string to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

namespace {

// Decimal literal -> exact rational. pos points at the first char of the
// number (after any sign handled by the caller).
std::optional<Rat> parse_decimal(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  BigInt mantissa = 0;
  long frac_digits = 0;
  bool any = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    mantissa = mantissa * 10 + (s[i] - '0');
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      mantissa = mantissa * 10 + (s[i] - '0');
      ++frac_digits;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    if (i >= s.size()) return std::nullopt;
    long v = 0;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      v = v * 10 + (s[i] - '0');
      if (v > 100000) return std::nullopt;
    }
    exp10 = eneg ? -v : v;
  }
  if (i != s.size()) return std::nullopt;
  long net = exp10 - frac_digits;
  BigInt num = mantissa, den = 1;
  if (net >= 0) {
    for (long k = 0; k < net; ++k) num *= 10;
  } else {
    for (long k = 0; k < -net; ++k) den *= 10;
  }
  Rat r(num, den);
  if (neg) r = -r;
  return r;
}

}  // namespace

std::optional<Rat> parse_rat(const std::string& raw) {
  std::string text = raw;
  if (!text.empty() && text[0] == '+') text = text.substr(1);
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty()) return std::nullopt;
    try {
      BigInt num(ns), den(ds);
      if (den <= 0) return std::nullopt;
      return Rat(num, den);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos) {
    return parse_decimal(text);
  }
  try {
    return Rat(BigInt(text));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Quad operator/(const Quad& x, const Quad& y) {
  // 1/(a+b*s) = (a-b*s)/(a^2-3b^2); the norm is nonzero since sqrt(3) is
  // irrational and y != 0.
  if (y.is_zero()) throw std::domain_error("Quad division by zero");
  Rat norm = y.a * y.a - 3 * (y.b * y.b);
  Quad conj{y.a / norm, -y.b / norm};
  return x * conj;
}

int sign(const Quad& q) {
  int sa = q.a.sign(), sb = q.b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(3) decides, i.e. a^2 vs 3 b^2.
  Rat norm = q.a * q.a - 3 * (q.b * q.b);
  int t = norm.sign();
  if (t == 0) throw std::logic_error("Quad: a^2 == 3 b^2 with a,b nonzero is impossible");
  return sa * t;
}

Quad abs(const Quad& q) { return sign(q) < 0 ? -q : q; }

double to_double(const Quad& q) {
  static const double kSqrt3 = std::sqrt(3.0);
  return to_double(q.a) + to_double(q.b) * kSqrt3;
}

std::string to_string(const Quad& q) {
  if (q.b.is_zero()) return to_string(q.a);
  if (q.a.is_zero()) return to_string(q.b) + "r3";
  if (q.b > 0) return to_string(q.a) + "+" + to_string(q.b) + "r3";
  return to_string(q.a) + "-" + to_string(Rat(-q.b)) + "r3";
}

std::optional<Quad> parse_quad(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto r3 = text.rfind("r3");
  if (r3 == std::string::npos) {
    auto r = parse_rat(text);
    if (!r) return std::nullopt;
    return Quad(*r);
  }
  if (r3 + 2 != text.size()) return std::nullopt;
  std::string head = text.substr(0, r3);
  if (head.empty()) return std::nullopt;
  // Split "A+Br3" / "A-Br3" at the sign separating the two terms; careful
  // with exponents ("1e-2") and leading signs.
  for (size_t i = head.size(); i-- > 1;) {
    char c = head[i];
    if ((c == '+' || c == '-') && head[i - 1] != 'e' && head[i - 1] != 'E' &&
        head[i - 1] != '/' && head[i - 1] != '+' && head[i - 1] != '-') {
      auto a = parse_rat(head.substr(0, i));
      auto b = parse_rat(head.substr(i));
      if (a && b) return Quad(*a, *b);
      // Otherwise keep scanning: the sign may belong to an exponent form the
      // guard above did not catch.
    }
  }
  auto b = parse_rat(head);
  if (!b) return std::nullopt;
  return Quad(Rat(0), *b);
}

}  // namespace tar
