#include "ncdedekind/modforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ncdedekind/errors.hpp"

namespace ncdedekind {

namespace {

using IntSeries = std::vector<BigInt>;

IntSeries mul_int(const IntSeries& a, const IntSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  IntSeries out(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

bool all_integral(const std::vector<BigRat>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const BigRat& x) { return denominator(x) == 1; });
}

QExpansion from_ints(int weight, const IntSeries& v) {
  std::vector<BigRat> c;
  c.reserve(v.size());
  for (const auto& x : v) c.emplace_back(x);
  return QExpansion(weight, std::move(c));
}

BigInt divisor_sigma(std::size_t n, unsigned k) {
  BigInt s = 0;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += boost::multiprecision::pow(BigInt(d), k);
    const std::size_t e = n / d;
    if (e != d) s += boost::multiprecision::pow(BigInt(e), k);
  }
  return s;
}

}  // namespace

QExpansion::QExpansion(int weight, std::vector<BigRat> coeffs)
    : weight_(weight), coeffs_(std::move(coeffs)) {}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  const std::size_t n = std::min(a.terms(), b.terms());
  if (all_integral(a.coefficients()) && all_integral(b.coefficients())) {
    IntSeries x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = numerator(a[i]);
      y[i] = numerator(b[i]);
    }
    return from_ints(a.weight() + b.weight(), mul_int(x, y));
  }
  std::vector<BigRat> out(n, BigRat(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return QExpansion(a.weight() + b.weight(), std::move(out));
}

QExpansion eisenstein(int k, std::size_t terms) {
  long scale;
  unsigned power;
  if (k == 4) {
    scale = 240;
    power = 3;
  } else if (k == 6) {
    scale = -504;
    power = 5;
  } else {
    throw UnsupportedWeight("eisenstein: only weights 4 and 6 are provided");
  }
  IntSeries c(terms, BigInt(0));
  if (terms) c[0] = 1;
  for (std::size_t n = 1; n < terms; ++n) c[n] = scale * divisor_sigma(n, power);
  return from_ints(k, c);
}

QExpansion delta_product(std::size_t terms) {
  // prod (1 - q^n) up to q^{terms-1}, then the 24th power
  IntSeries euler(terms, BigInt(0));
  if (terms) euler[0] = 1;
  for (std::size_t n = 1; n < terms; ++n)
    for (std::size_t i = terms - 1; i >= n; --i) {
      euler[i] -= euler[i - n];
      if (i == n) break;
    }
  IntSeries p2 = mul_int(euler, euler);
  IntSeries p4 = mul_int(p2, p2);
  IntSeries p8 = mul_int(p4, p4);
  IntSeries p16 = mul_int(p8, p8);
  IntSeries p24 = mul_int(p16, p8);
  IntSeries out(terms, BigInt(0));
  for (std::size_t i = 1; i < terms; ++i) out[i] = p24[i - 1];
  return from_ints(12, out);
}

QExpansion delta_from_eisenstein(std::size_t terms) {
  const QExpansion e4 = eisenstein(4, terms);
  const QExpansion e6 = eisenstein(6, terms);
  const QExpansion e4_cubed = e4 * e4 * e4;
  const QExpansion e6_squared = e6 * e6;
  std::vector<BigRat> out(terms);
  for (std::size_t i = 0; i < terms; ++i)
    out[i] = (e4_cubed[i] - e6_squared[i]) / 1728;
  return QExpansion(12, std::move(out));
}

QExpansion delta(std::size_t terms) {
  QExpansion d = delta_product(terms);
  if (!(d == delta_from_eisenstein(terms)))
    throw std::logic_error("delta: product and Eisenstein constructions disagree");
  return d;
}

int cusp_dimension(int weight) {
  if (weight < 0 || weight % 2) return 0;
  const int modular = weight / 12 + (weight % 12 == 2 ? 0 : 1);
  if (weight == 0) return 0;
  return std::max(0, modular - 1);
}

CuspBasis cusp_basis(int weight, std::size_t terms) {
  if (weight < 12 || weight % 2)
    throw UnsupportedWeight("cusp_basis: weight must be even and >= 12, got " +
                            std::to_string(weight));
  const int r = cusp_dimension(weight);
  if (terms < static_cast<std::size_t>(r) + 2)
    throw InsufficientTerms("cusp_basis: need at least r + 2 terms");

  const QExpansion e4 = eisenstein(4, terms);
  const QExpansion e6 = eisenstein(6, terms);
  const QExpansion d = delta(terms);

  std::map<std::pair<int, int>, QExpansion> cache;
  auto power = [&](const QExpansion& base, int tag, int k) {
    auto key = std::make_pair(tag, k);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<BigRat> one(terms, BigRat(0));
    one[0] = 1;
    QExpansion acc(0, std::move(one));
    for (int i = 0; i < k; ++i) acc = acc * base;
    cache.emplace(key, acc);
    return acc;
  };

  std::vector<std::vector<BigRat>> rows;
  for (int a = 1; 12 * a <= weight; ++a) {
    const int rest = weight - 12 * a;
    for (int c = 0; 6 * c <= rest; ++c) {
      if ((rest - 6 * c) % 4) continue;
      const int b = (rest - 6 * c) / 4;
      QExpansion m = power(d, 0, a) * power(e4, 1, b) * power(e6, 2, c);
      rows.push_back(m.coefficients());
    }
  }

  // reduced row echelon form over Q
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < terms && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const BigRat lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const BigRat factor = rows[i][col];
      for (std::size_t j = 0; j < terms; ++j) rows[i][j] -= factor * rows[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }
  if (static_cast<int>(rank) != r)
    throw std::logic_error("cusp_basis: rank does not match the dimension formula");

  CuspBasis basis{weight, {}};
  for (std::size_t i = 0; i < rank; ++i)
    basis.forms.emplace_back(weight, std::move(rows[i]));
  return basis;
}

FormEvaluator::FormEvaluator(const QExpansion& form)
    : weight_(form.weight()),
      exponent_(form.is_cusp_form() ? form.weight() / 2.0 : form.weight() - 1.0),
      log_growth_(-std::numeric_limits<double>::infinity()),
      first_nonzero_(form.terms()) {
  coeffs_.reserve(form.terms());
  for (std::size_t n = 0; n < form.terms(); ++n) {
    const double c = to_double(form[n]);
    coeffs_.push_back(c);
    if (c != 0.0 && first_nonzero_ == form.terms()) first_nonzero_ = n;
    if (n >= 1 && c != 0.0)
      log_growth_ = std::max(log_growth_,
                             std::log(std::abs(c)) - exponent_ * std::log(double(n)));
  }
}

FormValue FormEvaluator::operator()(std::complex<double> z,
                                    const EvalOptions& opts) const {
  if (!(z.imag() >= opts.min_height))
    throw HeightTooLow("eval_form: Im z = " + std::to_string(z.imag()) +
                       " below minimum height " + std::to_string(opts.min_height));
  const std::size_t stored = coeffs_.size();
  if (first_nonzero_ == stored) return {{0.0, 0.0}, 0.0, 0};

  const double log_rho = -2.0 * std::numbers::pi * z.imag();
  const double log_lead = std::log(std::abs(coeffs_[first_nonzero_])) +
                          log_rho * static_cast<double>(first_nonzero_);
  const double log_tol = std::log(opts.rel_tail_tol) + log_lead;

  // first cut-off n whose geometric tail bound is below tolerance
  std::size_t cut = stored;
  double tail = std::numeric_limits<double>::infinity();
  for (std::size_t n = std::max<std::size_t>(first_nonzero_ + 1, 1); n <= stored; ++n) {
    const double dn = static_cast<double>(n);
    const double log_theta = exponent_ * std::log1p(1.0 / dn) + log_rho;
    if (log_theta >= 0.0) continue;
    const double log_tail = log_growth_ + exponent_ * std::log(dn) +
                            log_rho * dn - std::log1p(-std::exp(log_theta));
    if (log_tail <= log_tol) {
      cut = n;
      tail = std::exp(log_tail);
      break;
    }
  }
  if (!std::isfinite(tail))
    throw NotConverged("eval_form: " + std::to_string(stored) +
                       " terms do not converge at height " + std::to_string(z.imag()));

  const std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi) * z);
  std::complex<double> acc = 0.0;
  for (std::size_t n = cut; n-- > 0;) acc = acc * q + coeffs_[n];
  return {acc, tail, cut};
}

double FormEvaluator::envelope(double y) const {
  const double rho = std::exp(-2.0 * std::numbers::pi * y);
  double s = 0.0, w = 1.0;
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    s += std::abs(coeffs_[n]) * w;
    w *= rho;
    if (w == 0.0) break;
  }
  return s;
}

FormValue eval_form(const QExpansion& form, std::complex<double> z,
                    const EvalOptions& opts) {
  return FormEvaluator(form)(z, opts);
}

}  // namespace ncdedekind
