#pragma once

// Exact integers and rationals, coprime pairs, cusps of the projective
// rational line and the unimodular action on them.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncdedekind/errors.hpp"

namespace ncdedekind {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);
/// Non-negative remainder, 0 <= result < |b|.
BigInt mod_floor(const BigInt& a, const BigInt& b);
int sign(const BigInt& a);

/// Result of the extended Euclidean algorithm: x*a + y*b = g, g >= 0.
struct Bezout {
  BigInt g, x, y;
};
Bezout extended_gcd(const BigInt& a, const BigInt& b);

/// "num/den" for rationals; integers print without denominator.
std::string to_string(const BigRat& r);
double to_double(const BigRat& r);
BigRat make_rat(const BigInt& num, const BigInt& den);

/// An element of W = {(p, q) : gcd(p, q) = 1}.
class CoprimePair {
 public:
  /// Throws NotCoprime when gcd(|p|, |q|) != 1, which includes (0, 0).
  static CoprimePair make(BigInt p, BigInt q);

  const BigInt& p() const noexcept { return p_; }
  const BigInt& q() const noexcept { return q_; }

  CoprimePair negated() const { return CoprimePair(-p_, -q_); }

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;
  friend bool operator<(const CoprimePair& a, const CoprimePair& b) {
    return a.p_ < b.p_ || (a.p_ == b.p_ && a.q_ < b.q_);
  }

 private:
  CoprimePair(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {}
  BigInt p_, q_;
};

std::ostream& operator<<(std::ostream& os, const CoprimePair& pair);

/// Point of P^1(Q). Canonical form: denominator > 0, or (1, 0) for infinity.
class Cusp {
 public:
  /// The class of num/den; throws NotCoprime for non-coprime or (0, 0).
  static Cusp make(BigInt num, BigInt den);
  static Cusp infinity() { return Cusp(1, 0); }
  static Cusp integer(BigInt n) { return Cusp(std::move(n), 1); }

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  bool is_infinity() const noexcept { return den_ == 0; }

  friend bool operator==(const Cusp&, const Cusp&) = default;
  friend bool operator<(const Cusp& a, const Cusp& b) {
    return a.den_ < b.den_ || (a.den_ == b.den_ && a.num_ < b.num_);
  }

  std::string to_string() const;

 private:
  Cusp(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}
  BigInt num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Cusp& x);

/// The cusp q/p of a pair; (0, +-1) maps to infinity.
Cusp cusp_of_pair(const CoprimePair& pair);

/// Integer 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  BigInt a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  BigInt det() const { return a * d - b * c; }
  /// Adjugate; the inverse when det = 1.
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// (a x + b) / (c x + d) on P^1(Q). Throws BadMatrix unless det(m) = 1.
Cusp moebius_apply(const Mat2& m, const Cusp& x);

/// Representative of the orbit of (p, q) under (p, q) -> (p, q + p) and
/// (p, q) -> (-p, -q): p > 0 and 0 <= q < p, or (0, 1).
CoprimePair canonical_orbit_rep(const CoprimePair& pair);

}  // namespace ncdedekind
