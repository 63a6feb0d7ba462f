#pragma once

// Iterated integrals of the series-valued form
//
//   Omega(p, q) = sum_j A_j phi_j(z) (p z - q)^w dz
//
// over a cusp-form basis phi_1..phi_r of weight w + 2, the reciprocity
// function f(p, q) = J_0^{i inf}(Omega(p, q)) and the symbol
// D(p, q) = J_{q/p}^{i inf}(Omega(p, q)).
//
// A transport is the value at the end of the path of the solution of
// dF = Omega F (ordering LaterLeft, the default) or dF = F Omega
// (LaterRight) with F = 1 at the start. Under LaterLeft transports
// compose as T(a -> c) = T(b -> c) T(a -> b).

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "ncdedekind/exact_arith.hpp"
#include "ncdedekind/group_values.hpp"
#include "ncdedekind/modforms.hpp"

namespace ncdedekind {

enum class Ordering { LaterLeft, LaterRight };

std::string to_string(Ordering o);
/// Accepts "later-left" / "later-right"; throws std::invalid_argument.
Ordering parse_ordering(const std::string& s);

struct IterintConfig {
  int weight = 28;             // weight of the cusp forms, w + 2
  int depth = 2;               // truncation depth of the series
  std::size_t terms = 160;     // q-expansion length
  double y_max = 12.0;         // first truncation height of vertical rays
  double min_height = 0.15;    // lowest point any path may visit
  double step_tol = 1e-10;     // per-piece graded tolerance
  int nodes = 24;              // Chebyshev nodes per piece
  Ordering ordering = Ordering::LaterLeft;
  int p_bound = 6;             // largest |p| accepted by symbol_direct
};

/// Endpoint at i inf, approached vertically above the given abscissa.
struct AtInfinity {
  double abscissa = 0.0;
};
using Waypoint = std::variant<std::complex<double>, AtInfinity>;

/// A polyline; i inf may only appear as the first or last waypoint.
struct Path {
  std::vector<Waypoint> points;
};

struct Transport {
  ComplexSeries value;
  /// Graded bound on quadrature and tail error (same normalisation as
  /// SeriesGroup::deviation at the value's own scale).
  double error_estimate = 0.0;
};

/// The pair (p', q') with gamma^* Omega(p, q) = Omega(p', q') under
/// z = gamma u: (p a - q c, q d - p b). Throws BadMatrix unless det = 1.
CoprimePair pullback(const CoprimePair& omega, const Mat2& gamma);

class IteratedIntegrals {
 public:
  /// Builds the cusp-form basis of the configured weight.
  explicit IteratedIntegrals(IterintConfig config = {});

  const IterintConfig& config() const noexcept { return config_; }
  const CuspBasis& basis() const noexcept { return basis_; }
  int variables() const noexcept { return static_cast<int>(basis_.size()); }
  /// The carrier. Letter j is weighted by the size of the basic periods
  /// f(0, 1) and f(1, 0) in that letter, so comparisons do not depend on
  /// how the basis forms are normalised; the weighted magnitude of f(0, 1)
  /// is the scale floor.
  SeriesGroup<std::complex<double>> group() const {
    return {variables(), config_.depth, reference_scale_, letter_weights_};
  }
  double reference_scale() const noexcept { return reference_scale_; }
  const std::vector<double>& letter_weights() const noexcept { return letter_weights_; }

  /// Component j is phi_j(z) (p z - q)^w. Throws HeightTooLow.
  std::vector<std::complex<double>> omega_eval(const CoprimePair& omega,
                                               std::complex<double> z) const;

  /// Throws BadPath for a malformed path, NotConverged when the adaptive
  /// quadrature or a vertical tail cannot meet the tolerance.
  Transport transport(const CoprimePair& omega, const Path& path) const;

  /// Composition of two consecutive transports (first, then second).
  ComplexSeries compose(const ComplexSeries& first,
                        const ComplexSeries& second) const;

  /// f(p, q) = J_0^{i inf}(Omega(p, q)), split at i with the lower half
  /// pulled back by z = -1/u. Memoised and safe to call concurrently.
  ComplexSeries reciprocity_integral(const CoprimePair& pair) const;
  Transport reciprocity_transport(const CoprimePair& pair) const;

  /// J_{q/p}^{i inf}(Omega(p, q)) computed directly. Throws PTooLarge
  /// when |p| exceeds the configured bound.
  ComplexSeries symbol_direct(const CoprimePair& pair) const;
  Transport symbol_direct_transport(const CoprimePair& pair) const;

  /// The symbol reconstructed from reciprocity_integral through the
  /// continued-fraction tails of (p, q).
  ComplexSeries symbol_reconstructed(const CoprimePair& pair) const;
  /// As above, with the error estimates of the factors summed.
  Transport symbol_reconstructed_transport(const CoprimePair& pair) const;

 private:
  ComplexSeries integrate_piece(const CoprimePair& omega, std::complex<double> a,
                                std::complex<double> b) const;
  Transport segment(const CoprimePair& omega, std::complex<double> a,
                    std::complex<double> b) const;
  Transport ray_up(const CoprimePair& omega, std::complex<double> start) const;
  double tail_bound(const CoprimePair& omega, double x, double y) const;
  Transport upper_ray(const CoprimePair& omega) const;

  IterintConfig config_;
  CuspBasis basis_;
  std::vector<FormEvaluator> evaluators_;
  std::vector<double> nodes_;                // in [0, 1], ascending
  std::vector<std::vector<double>> integ_;   // integ_[i][m]: int_0^{t_i}
  double reference_scale_ = 1.0;
  std::vector<double> letter_weights_;

  mutable std::mutex memo_mutex_;
  mutable std::map<CoprimePair, Transport> ray_memo_;
  mutable std::map<CoprimePair, Transport> f_memo_;
};

}  // namespace ncdedekind
