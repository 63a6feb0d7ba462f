#include "ncdedekind/cocycle.hpp"

#include <ostream>

namespace ncdedekind {

Mat2 PSL2Elt::canonical(Mat2 m) {
  if (m.a < 0 || (m.a == 0 && m.c < 0)) return -m;
  return m;
}

PSL2Elt PSL2Elt::make(const Mat2& m) {
  if (m.det() != 1) throw BadMatrix("PSL2Elt: determinant must be 1");
  return PSL2Elt(canonical(m));
}

PSL2Elt operator*(const PSL2Elt& x, const PSL2Elt& y) {
  return PSL2Elt(PSL2Elt::canonical(x.m_ * y.m_));
}

std::ostream& operator<<(std::ostream& os, const PSL2Elt& g) {
  return os << g.matrix();
}

PSL2Elt sigma() { return PSL2Elt::make({0, -1, 1, 0}); }
PSL2Elt tau() { return PSL2Elt::make({0, -1, 1, -1}); }

PSL2Elt evaluate(Gen g) {
  static const PSL2Elt s = sigma(), t = tau(), t_inv = tau().inverse();
  switch (g) {
    case Gen::Sigma:
      return s;
    case Gen::Tau:
      return t;
    case Gen::TauInv:
      return t_inv;
  }
  return PSL2Elt::identity();
}

GenWord::GenWord(const std::vector<Gen>& letters) {
  // tau-blocks are tracked as exponents mod 3
  auto tau_exp = [](Gen g) { return g == Gen::Tau ? 1 : g == Gen::TauInv ? 2 : 0; };
  for (Gen g : letters) {
    if (letters_.empty()) {
      letters_.push_back(g);
      continue;
    }
    const Gen last = letters_.back();
    if (g == Gen::Sigma && last == Gen::Sigma) {
      letters_.pop_back();
    } else if (g != Gen::Sigma && last != Gen::Sigma) {
      const int e = (tau_exp(g) + tau_exp(last)) % 3;
      letters_.pop_back();
      if (e == 1) letters_.push_back(Gen::Tau);
      if (e == 2) letters_.push_back(Gen::TauInv);
    } else {
      letters_.push_back(g);
    }
  }
}

GenWord operator*(const GenWord& x, const GenWord& y) {
  std::vector<Gen> all = x.letters_;
  all.insert(all.end(), y.letters_.begin(), y.letters_.end());
  return GenWord(all);
}

PSL2Elt GenWord::evaluate() const {
  PSL2Elt acc = PSL2Elt::identity();
  for (Gen g : letters_) acc = acc * ncdedekind::evaluate(g);
  return acc;
}

std::string GenWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (Gen g : letters_) out += g == Gen::Sigma ? 's' : g == Gen::Tau ? 't' : 'T';
  return out;
}

GenWord decompose(const PSL2Elt& g) {
  // g = T^{n_1} S T^{n_2} S ... T^{m}
  std::vector<Gen> letters;
  auto push_translation = [&](const BigInt& n) {
    // T = tau^{-1} sigma, T^{-1} = sigma tau
    const bool forward = n > 0;
    for (BigInt k = abs(n); k > 0; --k) {
      if (forward) {
        letters.push_back(Gen::TauInv);
        letters.push_back(Gen::Sigma);
      } else {
        letters.push_back(Gen::Sigma);
        letters.push_back(Gen::Tau);
      }
    }
  };
  Mat2 m = g.matrix();
  while (m.c != 0) {
    // nearest integer to a / c
    const BigInt n = floor_div(2 * m.a + m.c, 2 * m.c);
    push_translation(n);
    letters.push_back(Gen::Sigma);
    // m <- S^{-1} T^{-n} m
    const BigInt a = m.a - n * m.c, b = m.b - n * m.d;
    m = Mat2{m.c, m.d, -a, -b};
  }
  // m = +-[[1, b], [0, 1]] up to the sign of the diagonal
  push_translation(m.a == 1 ? m.b : -m.b);
  return GenWord(letters);
}

PSL2Elt stabilizer_generator(const Cusp& a) {
  const PSL2Elt st = sigma() * tau();
  if (a.is_infinity()) return st;
  // gamma = [[-s, -t], [den, -num]] with s num + t den = 1 sends a to infinity
  const Bezout e = extended_gcd(a.numerator(), a.denominator());
  const PSL2Elt gamma = PSL2Elt::make({-e.x, -e.y, a.denominator(), -a.numerator()});
  return gamma.inverse() * st * gamma;
}

std::vector<Cusp> default_cusp_samples(int bound) {
  std::vector<Cusp> out;
  for (int p = 1; p <= bound; ++p)
    for (int q = -bound; q <= bound; ++q)
      if (gcd(BigInt(p), BigInt(q)) == 1) out.push_back(Cusp::make(q, p));
  out.push_back(Cusp::infinity());
  return out;
}

}  // namespace ncdedekind
