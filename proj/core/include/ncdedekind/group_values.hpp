#pragma once

// Value groups for symbols and reciprocity functions.
//
// A carrier is a small object exposing identity/op/inverse plus two
// comparison hooks:
//
//   magnitude(x)          a scale for x (0 for exact carriers),
//   deviation(x, y, s)    distance between x and y measured at scale s,
//   within(x, y, s, tol)  the pass/fail predicate used by the checkers.
//
// Exact carriers ignore the scale and tolerance and compare exactly.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "ncdedekind/exact_arith.hpp"

namespace ncdedekind {

template <class G>
concept ValueGroup = requires(const G& g, const typename G::value_type& x,
                              double s) {
  { g.identity() } -> std::convertible_to<typename G::value_type>;
  { g.op(x, x) } -> std::convertible_to<typename G::value_type>;
  { g.inverse(x) } -> std::convertible_to<typename G::value_type>;
  { g.equal(x, x) } -> std::convertible_to<bool>;
  { g.magnitude(x) } -> std::convertible_to<double>;
  { g.deviation(x, x, s) } -> std::convertible_to<double>;
  { g.within(x, x, s, s) } -> std::convertible_to<bool>;
};

/// Product x_1 x_2 ... x_k in the given group.
template <ValueGroup G, class... Xs>
typename G::value_type product(const G& g, const typename G::value_type& x,
                               const Xs&... xs) {
  typename G::value_type acc = x;
  ((acc = g.op(acc, xs)), ...);
  return acc;
}

// --------------------------------------------------------------------------
// Rationals under addition.

struct AdditiveRatGroup {
  using value_type = BigRat;

  BigRat identity() const { return BigRat(0); }
  BigRat op(const BigRat& x, const BigRat& y) const { return x + y; }
  BigRat inverse(const BigRat& x) const { return -x; }
  bool equal(const BigRat& x, const BigRat& y) const { return x == y; }
  double magnitude(const BigRat&) const { return 0.0; }
  double deviation(const BigRat& x, const BigRat& y, double) const {
    return std::abs(to_double(BigRat(x - y)));
  }
  bool within(const BigRat& x, const BigRat& y, double, double) const {
    return x == y;
  }
};

// --------------------------------------------------------------------------
// Free groups.

struct FreeLetter {
  std::uint32_t generator;  // 1-based
  int exponent;             // +1 or -1
  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

/// A reduced word; the empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the given letters.
  explicit FreeWord(const std::vector<FreeLetter>& letters);
  static FreeWord generator(std::uint32_t index, int exponent = 1);

  const std::vector<FreeLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<FreeLetter> letters_;
};

FreeWord word_mul(const FreeWord& x, const FreeWord& y);
FreeWord word_inv(const FreeWord& x);

class FreeGroup {
 public:
  using value_type = FreeWord;

  explicit FreeGroup(std::uint32_t rank) : rank_(rank) {}
  std::uint32_t rank() const noexcept { return rank_; }

  FreeWord identity() const { return {}; }
  FreeWord op(const FreeWord& x, const FreeWord& y) const {
    return word_mul(x, y);
  }
  FreeWord inverse(const FreeWord& x) const { return word_inv(x); }
  bool equal(const FreeWord& x, const FreeWord& y) const { return x == y; }
  double magnitude(const FreeWord&) const { return 0.0; }
  /// Length of x y^{-1}.
  double deviation(const FreeWord& x, const FreeWord& y, double) const {
    return static_cast<double>(word_mul(x, word_inv(y)).length());
  }
  bool within(const FreeWord& x, const FreeWord& y, double, double) const {
    return x == y;
  }

  /// Reduced word of length at most max_length.
  FreeWord random_word(std::mt19937_64& rng, std::size_t max_length) const;

 private:
  std::uint32_t rank_;
};

// --------------------------------------------------------------------------
// Truncated free associative series in r non-commuting variables.
//
// Coefficients are stored densely by word: words of length k over the
// alphabet {0..r-1} occupy indices offset(k) .. offset(k) + r^k - 1, with
// the first letter most significant.

class WordIndex {
 public:
  WordIndex(int variables, int depth);

  int variables() const noexcept { return r_; }
  int depth() const noexcept { return d_; }
  std::size_t size() const noexcept { return offsets_.back(); }
  std::size_t offset(int length) const { return offsets_[static_cast<std::size_t>(length)]; }
  std::size_t count(int length) const { return powers_[static_cast<std::size_t>(length)]; }
  std::size_t power(int length) const { return powers_[static_cast<std::size_t>(length)]; }
  int length_of(std::size_t index) const;
  /// Letters (0-based) of the word at index.
  std::vector<int> word(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& letters) const;
  /// Word as 1-based digit string, e.g. "12" for A_1 A_2.
  std::string label(std::size_t index) const;

  friend bool operator==(const WordIndex& a, const WordIndex& b) {
    return a.r_ == b.r_ && a.d_ == b.d_;
  }

 private:
  int r_, d_;
  std::vector<std::size_t> powers_;   // r^k, k = 0..d
  std::vector<std::size_t> offsets_;  // sum_{i<k} r^i, k = 0..d+1
};

namespace detail {

template <class S>
double scalar_abs(const S& s) {
  if constexpr (std::is_same_v<S, BigRat>)
    return std::abs(to_double(s));
  else
    return std::abs(s);
}

}  // namespace detail

template <class Scalar>
class TruncSeries {
 public:
  using scalar_type = Scalar;

  /// The identity element 1.
  TruncSeries(int variables, int depth)
      : index_(variables, depth), coeffs_(index_.size(), Scalar(0)) {
    coeffs_[0] = Scalar(1);
  }

  static TruncSeries one(int variables, int depth) {
    return TruncSeries(variables, depth);
  }
  /// 1 + c A_j (j is 1-based).
  static TruncSeries one_plus(int variables, int depth, int j,
                              Scalar c = Scalar(1)) {
    TruncSeries s(variables, depth);
    if (depth >= 1) s.coeffs_[s.index_.offset(1) + static_cast<std::size_t>(j - 1)] = c;
    return s;
  }

  int variables() const noexcept { return index_.variables(); }
  int depth() const noexcept { return index_.depth(); }
  const WordIndex& index() const noexcept { return index_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }
  /// Coefficient of a word given by 1-based letters.
  const Scalar& coeff(const std::vector<int>& letters1) const {
    std::vector<int> zero_based(letters1);
    for (int& l : zero_based) --l;
    return coeffs_[index_.index_of(zero_based)];
  }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  bool same_shape(const TruncSeries& o) const { return index_ == o.index_; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.index_ == b.index_ && a.coeffs_ == b.coeffs_;
  }

  /// max |coefficient| over words of the given length.
  double degree_norm(int length) const {
    double m = 0.0;
    const std::size_t lo = index_.offset(length), hi = index_.offset(length + 1);
    for (std::size_t i = lo; i < hi; ++i)
      m = std::max(m, detail::scalar_abs(coeffs_[i]));
    return m;
  }

 private:
  WordIndex index_;
  std::vector<Scalar> coeffs_;
};

using ComplexSeries = TruncSeries<std::complex<double>>;
using RationalSeries = TruncSeries<BigRat>;

/// Concatenation product truncated at the common depth. Throws
/// ShapeMismatch when the variable counts or depths differ.
template <class S>
TruncSeries<S> series_mul(const TruncSeries<S>& x, const TruncSeries<S>& y) {
  if (!x.same_shape(y))
    throw ShapeMismatch("series_mul: operands have different shapes");
  const WordIndex& ix = x.index();
  const int d = ix.depth();
  TruncSeries<S> out(ix.variables(), d);
  out[0] = S(0);
  for (int lu = 0; lu <= d; ++lu) {
    const std::size_t ou = ix.offset(lu);
    for (std::size_t u = 0; u < ix.count(lu); ++u) {
      const S& xu = x[ou + u];
      if (xu == S(0)) continue;
      for (int lv = 0; lu + lv <= d; ++lv) {
        const std::size_t ov = ix.offset(lv), ow = ix.offset(lu + lv);
        const std::size_t shift = ix.power(lv);
        for (std::size_t v = 0; v < ix.count(lv); ++v)
          out[ow + u * shift + v] += xu * y[ov + v];
      }
    }
  }
  return out;
}

/// Inverse in 1 + (A_1..A_r) as sum_{k=0..d} (1 - x)^k. Throws
/// BadConstantTerm unless the constant coefficient is 1 (within 1e-12 for
/// floating scalars).
template <class S>
TruncSeries<S> series_inv(const TruncSeries<S>& x) {
  if constexpr (std::is_same_v<S, BigRat>) {
    if (x[0] != S(1)) throw BadConstantTerm("series_inv: constant term != 1");
  } else {
    if (std::abs(x[0] - S(1)) > 1e-12)
      throw BadConstantTerm("series_inv: constant term != 1");
  }
  TruncSeries<S> y = x;  // y = 1 - x
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = -y[i];
  y[0] = S(0);
  TruncSeries<S> result(x.variables(), x.depth());
  TruncSeries<S> power(x.variables(), x.depth());
  for (int k = 1; k <= x.depth(); ++k) {
    power = series_mul(power, y);
    for (std::size_t i = 0; i < result.size(); ++i) result[i] += power[i];
  }
  return result;
}

/// Coefficient-wise |x_w - y_w| <= max(abs_tol, rel_tol * max(|x_w|, |y_w|)).
template <class S>
bool approx_equal(const TruncSeries<S>& x, const TruncSeries<S>& y,
                  double abs_tol = 1e-10, double rel_tol = 1e-8) {
  if (!x.same_shape(y)) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double diff = detail::scalar_abs(S(x[i] - y[i]));
    const double mag = std::max(detail::scalar_abs(x[i]), detail::scalar_abs(y[i]));
    if (diff > std::max(abs_tol, rel_tol * mag)) return false;
  }
  return true;
}

/// The multiplicative group 1 + (A_1..A_r) of truncated series.
///
/// Numeric comparisons are graded. Each letter A_j first has a weight
/// w_j (default 1) divided out, so a word's coefficient is read as
/// x_w / prod w_{letters}; then a coefficient of a length-k word is
/// compared after dividing by s^k, where s = max(floor, scale) and the
/// scale of a series is max_k (max |x_w|, |w| = k)^{1/k} in the weighted
/// coordinates. Uniform rescaling of the variables does not change any
/// deviation, and with weights taken from a reference element (for
/// iterated integrals, the periods of the basis forms) neither does
/// rescaling a single variable. The floor (default 1) keeps values that
/// are products of large factors but close to 1 from being compared at an
/// artificially fine scale.
template <class Scalar>
class SeriesGroup {
 public:
  using value_type = TruncSeries<Scalar>;

  SeriesGroup(int variables, int depth, double scale_floor = 1.0,
              std::vector<double> letter_weights = {})
      : r_(variables), d_(depth), floor_(std::max(1.0, scale_floor)),
        weights_(std::move(letter_weights)) {
    if (weights_.empty()) weights_.assign(static_cast<std::size_t>(std::max(r_, 0)), 1.0);
    if (weights_.size() != static_cast<std::size_t>(r_))
      throw std::invalid_argument("SeriesGroup: one weight per variable");
    for (double w : weights_)
      if (!(w > 0.0) || !std::isfinite(w))
        throw std::invalid_argument("SeriesGroup: weights must be positive");
  }

  int variables() const noexcept { return r_; }
  int depth() const noexcept { return d_; }
  double scale_floor() const noexcept { return floor_; }
  const std::vector<double>& letter_weights() const noexcept { return weights_; }

  value_type identity() const { return value_type(r_, d_); }
  value_type op(const value_type& x, const value_type& y) const {
    return series_mul(x, y);
  }
  value_type inverse(const value_type& x) const { return series_inv(x); }

  bool equal(const value_type& x, const value_type& y) const {
    if constexpr (std::is_same_v<Scalar, BigRat>)
      return x == y;
    else
      return approx_equal(x, y);
  }

  double magnitude(const value_type& x) const {
    const WordIndex& ix = x.index();
    double s = 0.0;
    for (int k = 1; k <= ix.depth(); ++k) {
      double m = 0.0;
      for (std::size_t i = ix.offset(k); i < ix.offset(k + 1); ++i)
        m = std::max(m, detail::scalar_abs(x[i]) / weight_of(ix, i));
      s = std::max(s, std::pow(m, 1.0 / k));
    }
    return s;
  }

  double deviation(const value_type& x, const value_type& y,
                   double scale) const {
    if (!x.same_shape(y)) return std::numeric_limits<double>::infinity();
    const double s = std::max(floor_, scale);
    const WordIndex& ix = x.index();
    double worst = 0.0;
    for (int k = 0; k <= ix.depth(); ++k) {
      const double norm = std::pow(s, k);
      for (std::size_t i = ix.offset(k); i < ix.offset(k + 1); ++i)
        worst = std::max(worst, detail::scalar_abs(Scalar(x[i] - y[i])) /
                                    (norm * weight_of(ix, i)));
    }
    return worst;
  }

  bool within(const value_type& x, const value_type& y, double scale,
              double tol) const {
    if constexpr (std::is_same_v<Scalar, BigRat>) {
      return x == y;
    } else {
      return deviation(x, y, scale) <= tol;
    }
  }

 private:
  double weight_of(const WordIndex& ix, std::size_t i) const {
    double w = 1.0;
    if (ix.variables() == r_)
      for (int letter : ix.word(i)) w *= weights_[static_cast<std::size_t>(letter)];
    return w;
  }

  int r_, d_;
  double floor_;
  std::vector<double> weights_;
};

/// One (word, re, im) record per coefficient, words as 1-based digit
/// strings ("" for the constant term).
struct SeriesTerm {
  std::string word;
  double re;
  double im;
};
std::vector<SeriesTerm> serialize(const ComplexSeries& s);

}  // namespace ncdedekind
