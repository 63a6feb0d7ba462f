#include "ncdedekind/iterint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ncdedekind/errors.hpp"
#include "ncdedekind/symbols.hpp"

namespace ncdedekind {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Nodes t_i = (1 - cos(pi i / n)) / 2 on [0, 1] and the matrix S with
// sum_m S[i][m] h(t_m) = int_0^{t_i} h for polynomials of degree <= n.
void chebyshev_integration(int count, std::vector<double>& nodes,
                           std::vector<std::vector<double>>& matrix) {
  const int n = count - 1;
  std::vector<double> theta(count), x(count);
  nodes.assign(count, 0.0);
  for (int i = 0; i < count; ++i) {
    theta[i] = kPi - kPi * i / n;  // x = cos(theta) ascending
    x[i] = std::cos(theta[i]);
    nodes[i] = (1.0 + x[i]) / 2.0;
  }
  nodes.front() = 0.0;
  nodes.back() = 1.0;

  // values -> Chebyshev coefficients
  std::vector<std::vector<double>> coef(count, std::vector<double>(count));
  for (int j = 0; j <= n; ++j)
    for (int m = 0; m <= n; ++m) {
      double c = (2.0 / n) * std::cos(j * theta[m]);
      if (m == 0 || m == n) c /= 2.0;
      if (j == 0 || j == n) c /= 2.0;
      coef[j][m] = c;
    }

  auto cheb = [](int j, double th) { return std::cos(j * th); };
  // antiderivative of T_j evaluated at angle th
  auto antideriv = [&](int j, double th) {
    if (j == 0) return cheb(1, th);
    if (j == 1) return cheb(2, th) / 4.0;
    return cheb(j + 1, th) / (2.0 * (j + 1)) - cheb(j - 1, th) / (2.0 * (j - 1));
  };

  matrix.assign(count, std::vector<double>(count, 0.0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const double w = 0.5 * (antideriv(j, theta[i]) - antideriv(j, kPi));
      if (w == 0.0) continue;
      for (int m = 0; m <= n; ++m) matrix[i][m] += w * coef[j][m];
    }
}

cplx int_power(cplx base, int e) {
  cplx result = 1.0;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

CoprimePair sign_normalized(const CoprimePair& pr) {
  if (pr.p() < 0 || (pr.p() == 0 && pr.q() < 0)) return pr.negated();
  return pr;
}

}  // namespace

std::string to_string(Ordering o) {
  return o == Ordering::LaterLeft ? "later-left" : "later-right";
}

Ordering parse_ordering(const std::string& s) {
  if (s == "later-left") return Ordering::LaterLeft;
  if (s == "later-right") return Ordering::LaterRight;
  throw std::invalid_argument("unknown ordering '" + s + "'");
}

CoprimePair pullback(const CoprimePair& omega, const Mat2& gamma) {
  if (gamma.det() != 1) throw BadMatrix("pullback: determinant must be 1");
  const BigInt& p = omega.p();
  const BigInt& q = omega.q();
  return CoprimePair::make(p * gamma.a - q * gamma.c, q * gamma.d - p * gamma.b);
}

IteratedIntegrals::IteratedIntegrals(IterintConfig config)
    : config_(config), basis_(cusp_basis(config.weight, config.terms)) {
  if (config_.depth < 1) throw std::invalid_argument("iterint: depth must be >= 1");
  if (config_.nodes < 4) throw std::invalid_argument("iterint: need at least 4 nodes");
  for (const auto& form : basis_.forms) evaluators_.emplace_back(form);
  chebyshev_integration(config_.nodes, nodes_, integ_);
  // a first pass with unit weights fixes the letter weights; the memo is
  // then dropped so every value is computed under the final metric
  letter_weights_.assign(basis_.size(), 1.0);
  for (int pass = 0; pass < 2; ++pass) {
    const ComplexSeries a = reciprocity_integral(CoprimePair::make(0, 1));
    const ComplexSeries b = reciprocity_integral(CoprimePair::make(1, 0));
    if (pass == 0) {
      const WordIndex& ix = a.index();
      for (std::size_t j = 0; j < letter_weights_.size(); ++j) {
        const std::size_t i = ix.index_of({static_cast<int>(j)});
        const double w = std::max(std::abs(a[i]), std::abs(b[i]));
        letter_weights_[j] = w > 1e-300 ? w : 1.0;
      }
      ray_memo_.clear();
      f_memo_.clear();
    } else {
      reference_scale_ = std::max(1.0, group().magnitude(a));
    }
  }
}

std::vector<cplx> IteratedIntegrals::omega_eval(const CoprimePair& omega,
                                                cplx z) const {
  EvalOptions opts;
  opts.min_height = config_.min_height;
  const cplx factor = int_power(to_double(BigRat(omega.p())) * z -
                                    to_double(BigRat(omega.q())),
                                config_.weight - 2);
  std::vector<cplx> out;
  out.reserve(evaluators_.size());
  for (const auto& ev : evaluators_) out.push_back(ev(z, opts).value * factor);
  return out;
}

ComplexSeries IteratedIntegrals::compose(const ComplexSeries& first,
                                         const ComplexSeries& second) const {
  return config_.ordering == Ordering::LaterLeft ? series_mul(second, first)
                                                 : series_mul(first, second);
}

ComplexSeries IteratedIntegrals::integrate_piece(const CoprimePair& omega, cplx a,
                                                 cplx b) const {
  const int r = variables();
  const int d = config_.depth;
  const std::size_t count = nodes_.size();
  const cplx dz = b - a;

  std::vector<std::vector<cplx>> g(count);
  for (std::size_t m = 0; m < count; ++m)
    g[m] = omega_eval(omega, a + nodes_[m] * dz);

  std::vector<ComplexSeries> G(count, ComplexSeries(r, d));
  const WordIndex& ix = G.front().index();
  const bool later_left = config_.ordering == Ordering::LaterLeft;
  std::vector<cplx> h(count);
  for (int k = 1; k <= d; ++k) {
    const std::size_t rest_off = ix.offset(k - 1), rest_count = ix.count(k - 1);
    for (int j = 0; j < r; ++j)
      for (std::size_t u = 0; u < rest_count; ++u) {
        // later letter is prepended (LaterLeft) or appended (LaterRight)
        const std::size_t target =
            ix.offset(k) + (later_left ? j * rest_count + u : u * r + j);
        for (std::size_t m = 0; m < count; ++m)
          h[m] = g[m][j] * G[m][rest_off + u] * dz;
        for (std::size_t i = 0; i < count; ++i) {
          cplx acc = 0.0;
          for (std::size_t m = 0; m < count; ++m) acc += integ_[i][m] * h[m];
          G[i][target] = acc;
        }
      }
  }
  return G.back();
}

Transport IteratedIntegrals::segment(const CoprimePair& omega, cplx a,
                                     cplx b) const {
  const auto grp = group();
  if (a == b) return {grp.identity(), 0.0};

  struct Frame {
    cplx a, b;
    ComplexSeries whole;
    int level;
  };
  const double low = std::min(a.imag(), b.imag());
  const double h0 = std::clamp(low, config_.min_height, 1.0);
  const int initial = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / h0)));

  Transport out{grp.identity(), 0.0};
  // depth-first over pieces, left to right
  std::vector<Frame> stack;
  for (int s = initial; s-- > 0;) {
    const cplx pa = a + (b - a) * (static_cast<double>(s) / initial);
    const cplx pb = a + (b - a) * (static_cast<double>(s + 1) / initial);
    stack.push_back({pa, pb, integrate_piece(omega, pa, pb), 0});
  }
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const cplx mid = 0.5 * (f.a + f.b);
    ComplexSeries left = integrate_piece(omega, f.a, mid);
    ComplexSeries right = integrate_piece(omega, mid, f.b);
    ComplexSeries halves = compose(left, right);
    const double dev = grp.deviation(f.whole, halves, grp.magnitude(halves));
    if (dev <= config_.step_tol) {
      out.value = compose(out.value, halves);
      out.error_estimate += dev;
      continue;
    }
    if (f.level >= 40)
      throw NotConverged("transport: adaptive quadrature did not converge");
    stack.push_back({mid, f.b, std::move(right), f.level + 1});
    stack.push_back({f.a, mid, std::move(left), f.level + 1});
  }
  return out;
}

double IteratedIntegrals::tail_bound(const CoprimePair& omega, double x,
                                     double y) const {
  double envelope = 0.0;
  for (std::size_t j = 0; j < evaluators_.size(); ++j)
    envelope += evaluators_[j].envelope(y) / letter_weights_[j];
  const int w = config_.weight - 2;
  const double p = std::abs(to_double(BigRat(omega.p())));
  if (p == 0.0) return envelope * std::exp(-2.0 * kPi * y) / (2.0 * kPi);
  const double b = std::abs(p * x - to_double(BigRat(omega.q())));
  // (p y + b)^w e^{-2 pi y} decays at rate >= pi beyond this height
  if (y < w / kPi - b / p) return std::numeric_limits<double>::infinity();
  return envelope * std::exp(w * std::log(p * y + b) - 2.0 * kPi * y) / kPi;
}

Transport IteratedIntegrals::ray_up(const CoprimePair& omega, cplx start) const {
  const auto grp = group();
  const double x = start.real();
  double y = std::max(start.imag(), config_.y_max);
  Transport out = segment(omega, start, cplx(x, y));
  while (true) {
    const double bound = tail_bound(omega, x, y) / std::max(1.0, grp.magnitude(out.value));
    if (bound <= config_.step_tol) {
      out.error_estimate += bound;
      return out;
    }
    if (y >= 400.0)
      throw NotConverged("transport: vertical tail bound did not fall below tolerance");
    Transport more = segment(omega, cplx(x, y), cplx(x, y + 4.0));
    out.value = compose(out.value, more.value);
    out.error_estimate += more.error_estimate;
    y += 4.0;
  }
}

Transport IteratedIntegrals::transport(const CoprimePair& omega,
                                       const Path& path) const {
  const auto& pts = path.points;
  if (pts.empty()) throw BadPath("transport: empty path");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (std::holds_alternative<AtInfinity>(pts[i])) {
      if (i != 0 && i + 1 != pts.size())
        throw BadPath("transport: i inf may only be an endpoint");
    } else if (!(std::get<cplx>(pts[i]).imag() > 0.0)) {
      throw BadPath("transport: waypoint outside the upper half-plane");
    }
  }
  const auto grp = group();
  Transport out{grp.identity(), 0.0};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const bool from_inf = std::holds_alternative<AtInfinity>(pts[i]);
    const bool to_inf = std::holds_alternative<AtInfinity>(pts[i + 1]);
    Transport step{grp.identity(), 0.0};
    if (from_inf && to_inf) {
      // both ends at the cusp: the integrand vanishes there
    } else if (to_inf) {
      step = ray_up(omega, std::get<cplx>(pts[i]));
    } else if (from_inf) {
      step = ray_up(omega, std::get<cplx>(pts[i + 1]));
      step.value = series_inv(step.value);
    } else {
      step = segment(omega, std::get<cplx>(pts[i]), std::get<cplx>(pts[i + 1]));
    }
    out.value = compose(out.value, step.value);
    out.error_estimate += step.error_estimate;
  }
  return out;
}

Transport IteratedIntegrals::upper_ray(const CoprimePair& omega) const {
  const CoprimePair key = sign_normalized(omega);
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = ray_memo_.find(key); it != ray_memo_.end()) return it->second;
  }
  Transport value = ray_up(key, cplx(0.0, 1.0));
  std::lock_guard lock(memo_mutex_);
  return ray_memo_.emplace(key, std::move(value)).first->second;
}

Transport IteratedIntegrals::reciprocity_transport(const CoprimePair& pair) const {
  const CoprimePair key = sign_normalized(pair);
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = f_memo_.find(key); it != f_memo_.end()) return it->second;
  }
  // 0 -> i for Omega(p, q) is i inf -> i for Omega(-q, p) under z = -1/u
  const Transport upper = upper_ray(key);
  const Transport lower = upper_ray(pullback(key, {0, -1, 1, 0}));
  Transport value{compose(series_inv(lower.value), upper.value),
                  upper.error_estimate + lower.error_estimate};
  std::lock_guard lock(memo_mutex_);
  return f_memo_.emplace(key, std::move(value)).first->second;
}

ComplexSeries IteratedIntegrals::reciprocity_integral(const CoprimePair& pair) const {
  return reciprocity_transport(pair).value;
}

Transport IteratedIntegrals::symbol_direct_transport(const CoprimePair& pair) const {
  if (abs(pair.p()) > config_.p_bound)
    throw PTooLarge("symbol_direct: |p| = " + BigInt(abs(pair.p())).str() +
                    " exceeds the bound " + std::to_string(config_.p_bound));
  const CoprimePair pr = sign_normalized(pair);
  if (pr.p() == 0) return {group().identity(), 0.0};

  const double p = to_double(BigRat(pr.p()));
  const double q = to_double(BigRat(pr.q()));
  // gamma = [[q, b], [p, d]] with q d - p b = 1 sends i inf to q/p and
  // (-d + i)/p to q/p + i/p; it pulls Omega(p, q) back to Omega(0, 1).
  const Bezout e = extended_gcd(pr.q(), pr.p());
  const Mat2 gamma{pr.q(), -e.y, pr.p(), e.x};
  const CoprimePair base = pullback(pr, gamma);
  const double d = to_double(BigRat(gamma.d));

  const Transport upper = ray_up(pr, cplx(q / p, 1.0 / p));
  const Transport lower = ray_up(base, cplx(-d / p, 1.0 / p));
  return {compose(series_inv(lower.value), upper.value),
          upper.error_estimate + lower.error_estimate};
}

ComplexSeries IteratedIntegrals::symbol_direct(const CoprimePair& pair) const {
  return symbol_direct_transport(pair).value;
}

ComplexSeries IteratedIntegrals::symbol_reconstructed(const CoprimePair& pair) const {
  const auto grp = group();
  PairFunction<SeriesGroup<cplx>> f = [this](const CoprimePair& pr) {
    return reciprocity_integral(pr);
  };
  return reconstruct(grp, f, pair);
}

Transport IteratedIntegrals::symbol_reconstructed_transport(const CoprimePair& pair) const {
  Transport out{symbol_reconstructed(pair), 0.0};
  const std::vector<CoprimePair> tail = tails(expand(pair));
  for (std::size_t i = 1; i < tail.size(); ++i)
    out.error_estimate += reciprocity_transport(tail[i]).error_estimate;
  return out;
}

}  // namespace ncdedekind
