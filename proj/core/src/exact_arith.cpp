#include "ncdedekind/exact_arith.hpp"

#include <ostream>
#include <sstream>

namespace ncdedekind {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = abs(a), y = abs(b);
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

int sign(const BigInt& a) { return a.sign(); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw ZeroDenominator("floor_div: division by zero");
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw ZeroDenominator("ceil_div: division by zero");
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& b) {
  BigInt m = abs(b);
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

Bezout extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

std::string to_string(const BigRat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

double to_double(const BigRat& r) { return r.convert_to<double>(); }

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDenominator("make_rat: zero denominator");
  return den < 0 ? BigRat(BigInt(-num), BigInt(-den)) : BigRat(num, den);
}

CoprimePair CoprimePair::make(BigInt p, BigInt q) {
  if (gcd(p, q) != 1) {
    std::ostringstream os;
    os << "(" << p << ", " << q << ") is not a coprime pair";
    throw NotCoprime(os.str());
  }
  return CoprimePair(std::move(p), std::move(q));
}

std::ostream& operator<<(std::ostream& os, const CoprimePair& pair) {
  return os << '(' << pair.p() << ", " << pair.q() << ')';
}

Cusp Cusp::make(BigInt num, BigInt den) {
  if (gcd(num, den) != 1) {
    std::ostringstream os;
    os << num << "/" << den << " is not a reduced cusp";
    throw NotCoprime(os.str());
  }
  if (den == 0) return infinity();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Cusp(std::move(num), std::move(den));
}

std::string Cusp::to_string() const {
  if (is_infinity()) return "inf";
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << '/' << den_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cusp& x) {
  return os << x.to_string();
}

Cusp cusp_of_pair(const CoprimePair& pair) {
  return Cusp::make(pair.q(), pair.p());
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d
            << "]]";
}

Cusp moebius_apply(const Mat2& m, const Cusp& x) {
  if (m.det() != 1) {
    std::ostringstream os;
    os << "matrix " << m << " does not have determinant 1";
    throw BadMatrix(os.str());
  }
  // det 1 keeps the image pair coprime
  return Cusp::make(m.a * x.numerator() + m.b * x.denominator(),
                    m.c * x.numerator() + m.d * x.denominator());
}

CoprimePair canonical_orbit_rep(const CoprimePair& pair) {
  if (pair.p() == 0) return CoprimePair::make(0, 1);
  BigInt p = pair.p(), q = pair.q();
  if (p < 0) {
    p = -p;
    q = -q;
  }
  return CoprimePair::make(p, mod_floor(q, p));
}

}  // namespace ncdedekind
