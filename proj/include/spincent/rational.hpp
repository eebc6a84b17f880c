#pragma once

// Exact scalars: GMP rationals and Gaussian rationals (a + b i with a, b in Q),
// plus the decimal-free string forms used by the JSON reports.

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spincent {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Absolute threshold used by the floating-point mirror backend.
inline constexpr double kFloatTolerance = 1e-9;

inline bool is_zero(double x) { return std::fabs(x) < kFloatTolerance; }

/// "p/q" with q > 0; integers keep the "/1".
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') ++pos;
  bool seen_digit = false;
  bool seen_slash = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational literal: " + std::string(text));
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

/// Element of Q(i).
struct Gaussian {
  Rational re{0};
  Rational im{0};

  Gaussian() = default;
  Gaussian(int v) : re(v) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator-(const Gaussian& a) { return {Rational(-a.re), Rational(-a.im)}; }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational den = b.re * b.re + b.im * b.im;
    if (sgn(den) == 0) throw std::domain_error("division by zero in Q(i)");
    return {Rational((a.re * b.re + a.im * b.im) / den), Rational((a.im * b.re - a.re * b.im) / den)};
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

inline Gaussian conj(const Gaussian& z) { return {z.re, Rational(-z.im)}; }
inline bool is_zero(const Gaussian& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }
inline bool is_real(const Gaussian& z) { return sgn(z.im) == 0; }
inline Rational norm2(const Gaussian& z) { return z.re * z.re + z.im * z.im; }

/// "a/b+c/d*i" (or "a/b-c/d*i").
inline std::string to_string(const Gaussian& z) {
  std::string out = to_string(z.re);
  if (sgn(z.im) < 0) {
    out += "-" + to_string(Rational(-z.im));
  } else {
    out += "+" + to_string(z.im);
  }
  return out + "*i";
}

inline Gaussian parse_gaussian(std::string_view text) {
  if (text.size() < 2 || text.substr(text.size() - 2) != "*i") return Gaussian(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 2);
  std::size_t split = std::string_view::npos;
  for (std::size_t p = 1; p < body.size(); ++p) {
    if ((body[p] == '+' || body[p] == '-') && std::isdigit(static_cast<unsigned char>(body[p - 1]))) {
      split = p;
      break;
    }
  }
  if (split == std::string_view::npos) throw std::invalid_argument("malformed Gaussian literal: " + std::string(text));
  std::string_view im_text = body.substr(split);
  if (im_text.size() > 1 && im_text[0] == '+' && (im_text[1] == '-' || im_text[1] == '+')) im_text.remove_prefix(1);
  return {parse_rational(body.substr(0, split)), parse_rational(im_text)};
}

inline std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_string(z); }

/// Exact square root of a non-negative rational, if it is a perfect square.
inline bool rational_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  out = Rational(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace spincent
