#pragma once

// Level-one modular forms as exact q-expansions, the echelonised cusp-form
// bases built from Delta, E4 and E6, and floating evaluation in the upper
// half-plane with a tail bound.

#include <complex>
#include <vector>

#include "ncdedekind/exact_arith.hpp"

namespace ncdedekind {

/// sum_{n < terms} c_n q^n, q = e^{2 pi i z}, tagged with its weight.
class QExpansion {
 public:
  QExpansion(int weight, std::vector<BigRat> coeffs);

  int weight() const noexcept { return weight_; }
  std::size_t terms() const noexcept { return coeffs_.size(); }
  const std::vector<BigRat>& coefficients() const noexcept { return coeffs_; }
  const BigRat& operator[](std::size_t n) const { return coeffs_[n]; }
  bool is_cusp_form() const { return !coeffs_.empty() && coeffs_[0] == 0; }

  friend bool operator==(const QExpansion&, const QExpansion&) = default;

 private:
  int weight_;
  std::vector<BigRat> coeffs_;
};

/// Product truncated to the shorter operand; weights add.
QExpansion operator*(const QExpansion& a, const QExpansion& b);

/// E4 = 1 + 240 sum sigma_3(n) q^n, E6 = 1 - 504 sum sigma_5(n) q^n.
/// Throws UnsupportedWeight for k not in {4, 6}.
QExpansion eisenstein(int k, std::size_t terms);

/// Delta = q prod (1 - q^n)^24, checked against (E4^3 - E6^2) / 1728
/// (std::logic_error on disagreement).
QExpansion delta(std::size_t terms);

/// The two constructions, exposed for cross-checking.
QExpansion delta_product(std::size_t terms);
QExpansion delta_from_eisenstein(std::size_t terms);

/// dim S_k for even k >= 0.
int cusp_dimension(int weight);

/// Reduced echelon basis of S_weight: form j (1-based) is q^j + O(q^{r+1}).
struct CuspBasis {
  int weight;
  std::vector<QExpansion> forms;
  std::size_t size() const noexcept { return forms.size(); }
};

/// Throws UnsupportedWeight for odd weight or weight < 12, and
/// InsufficientTerms when terms < r + 2.
CuspBasis cusp_basis(int weight, std::size_t terms);

struct EvalOptions {
  double min_height = 0.05;
  /// Accepted tail bound relative to the leading term magnitude.
  double rel_tail_tol = 1e-17;
};

struct FormValue {
  std::complex<double> value;
  double error_bound = 0.0;
  std::size_t terms_used = 0;
};

/// Double-precision evaluator for one q-expansion.
///
/// The tail past the last stored coefficient is bounded by assuming
/// |c_n| <= A n^e with e = k/2 for cusp forms and e = k - 1 otherwise,
/// A fitted to the stored coefficients; summation stops at the first n for
/// which sum_{m >= n} A m^e |q|^m is below the requested tolerance.
class FormEvaluator {
 public:
  explicit FormEvaluator(const QExpansion& form);

  int weight() const noexcept { return weight_; }
  /// Throws HeightTooLow when Im z < min_height, NotConverged when the
  /// stored terms cannot meet the tail tolerance.
  FormValue operator()(std::complex<double> z, const EvalOptions& opts = {}) const;
  /// Bound on sum_n |c_n| e^{-2 pi (n-1) y}, valid for heights >= y.
  double envelope(double y) const;

 private:
  int weight_;
  double exponent_;
  double log_growth_;  // log A
  std::size_t first_nonzero_;
  std::vector<double> coeffs_;
};

FormValue eval_form(const QExpansion& form, std::complex<double> z,
                    const EvalOptions& opts = {});

}  // namespace ncdedekind
