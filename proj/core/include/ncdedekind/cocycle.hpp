#pragma once

// PSL(2, Z) as the free product of <sigma> = Z/2 and <tau> = Z/3,
// non-commutative 1-cocycles with values in functions on P^1(Q), and the
// correspondence between Dedekind cocycles and reciprocity functions.
//
// Functions on cusps form a group under pointwise multiplication, with
// PSL(2, Z) acting by (gamma h)(x) = h(gamma^{-1} x). A cocycle u is
// determined by X = u(sigma) and Y = u(tau) through
// u(g1 g2) = u(g1) . g1 u(g2).

#include <functional>
#include <string>
#include <vector>

#include "ncdedekind/exact_arith.hpp"
#include "ncdedekind/group_values.hpp"
#include "ncdedekind/parallel.hpp"
#include "ncdedekind/report.hpp"
#include "ncdedekind/symbols.hpp"

namespace ncdedekind {

/// Element of PSL(2, Z): a determinant-one matrix up to sign, stored with
/// the first nonzero entry of its first column positive.
class PSL2Elt {
 public:
  /// Throws BadMatrix unless det = 1.
  static PSL2Elt make(const Mat2& m);
  static PSL2Elt identity() { return PSL2Elt(Mat2::identity()); }

  const Mat2& matrix() const noexcept { return m_; }
  PSL2Elt inverse() const { return PSL2Elt(canonical(m_.adjugate())); }
  Cusp apply(const Cusp& x) const { return moebius_apply(m_, x); }

  friend PSL2Elt operator*(const PSL2Elt& x, const PSL2Elt& y);
  friend bool operator==(const PSL2Elt&, const PSL2Elt&) = default;

 private:
  explicit PSL2Elt(Mat2 m) : m_(std::move(m)) {}
  static Mat2 canonical(Mat2 m);
  Mat2 m_;
};

std::ostream& operator<<(std::ostream& os, const PSL2Elt& g);

/// [[0, -1], [1, 0]], of order 2.
PSL2Elt sigma();
/// [[0, -1], [1, -1]], of order 3.
PSL2Elt tau();

enum class Gen { Sigma, Tau, TauInv };

/// Reduced word in the free product: sigma alternates with tau^{+-1}.
class GenWord {
 public:
  GenWord() = default;
  /// Reduces the given letters (sigma^2 = 1, tau^3 = 1).
  explicit GenWord(const std::vector<Gen>& letters);

  const std::vector<Gen>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  PSL2Elt evaluate() const;
  /// "s", "t", "T" for sigma, tau, tau^{-1}; "1" for the empty word.
  std::string to_string() const;

  friend GenWord operator*(const GenWord& x, const GenWord& y);
  friend bool operator==(const GenWord&, const GenWord&) = default;

 private:
  std::vector<Gen> letters_;
};

PSL2Elt evaluate(Gen g);

/// Normal form of g, found by Euclidean peeling with S = sigma and
/// T = [[1, 1], [0, 1]] = tau^{-1} sigma.
GenWord decompose(const PSL2Elt& g);

/// Generator of the stabiliser of a: gamma^{-1} (sigma tau) gamma for some
/// gamma with gamma(a) = infinity.
PSL2Elt stabilizer_generator(const Cusp& a);

/// All q/p with 1 <= p <= bound, |q| <= bound, gcd(p, q) = 1, then infinity.
std::vector<Cusp> default_cusp_samples(int bound = 12);

// --------------------------------------------------------------------------
// Functions on cusps.

template <ValueGroup G>
using CuspFunction = std::function<typename G::value_type(const Cusp&)>;

/// (gamma h)(x) = h(gamma^{-1} x).
template <ValueGroup G>
CuspFunction<G> act(const PSL2Elt& gamma, CuspFunction<G> h) {
  return [inv = gamma.inverse(), h = std::move(h)](const Cusp& x) {
    return h(inv.apply(x));
  };
}

template <ValueGroup G>
struct CocyclePair {
  CuspFunction<G> X;
  CuspFunction<G> Y;
};

/// A cocycle as a map from group elements to cusp functions.
template <ValueGroup G>
using Cocycle = std::function<CuspFunction<G>(const PSL2Elt&)>;

namespace relation_names {
inline constexpr const char* kSigma = "X.sX=1";
inline constexpr const char* kTau = "Y.tY.t2Y=1";
inline constexpr const char* kDedekind = "Y=tX";
inline constexpr const char* kRoundtrip = "roundtrip";
}  // namespace relation_names

namespace detail {

template <ValueGroup G>
CheckRecord cusp_record(const G& g, const char* name, const Cusp& at,
                        const typename G::value_type& lhs,
                        const typename G::value_type& rhs, double scale,
                        double tol) {
  CheckRecord r;
  r.identity = name;
  r.cusp = at;
  r.deviation = g.deviation(lhs, rhs, scale);
  r.pass = g.within(lhs, rhs, scale, tol);
  return r;
}

template <ValueGroup G>
CheckRecord sigma_relation_at(const G& g, const CocyclePair<G>& pair,
                              const Cusp& x, double tol) {
  static const PSL2Elt s = sigma();
  const auto a = pair.X(x);
  const auto b = pair.X(s.apply(x));
  return cusp_record(g, relation_names::kSigma, x, g.op(a, b), g.identity(),
                     factor_scale(g, a, b), tol);
}

template <ValueGroup G>
CheckRecord tau_relation_at(const G& g, const CocyclePair<G>& pair,
                            const Cusp& x, double tol) {
  static const PSL2Elt t_inv = tau().inverse();
  const Cusp y = t_inv.apply(x);
  const auto a = pair.Y(x);
  const auto b = pair.Y(y);
  const auto c = pair.Y(t_inv.apply(y));
  return cusp_record(g, relation_names::kTau, x, product(g, a, b, c),
                     g.identity(), factor_scale(g, a, b, c), tol);
}

}  // namespace detail

/// u(word) evaluated pointwise: the product over the letters l_i of
/// u(l_i)(P_{i-1}^{-1} x), P_i = l_1 ... l_i, with u(sigma) = X,
/// u(tau) = Y and u(tau^{-1}) = u(tau^2). When check is set, the relation
/// for each letter is verified at each probed cusp and RelationViolation
/// is thrown on failure.
template <ValueGroup G>
CuspFunction<G> cocycle_on_word(G g, CocyclePair<G> pair, GenWord word,
                                bool check = true, double tol = 0.0) {
  return [g = std::move(g), pair = std::move(pair), word = std::move(word),
          check, tol](const Cusp& x) {
    static const PSL2Elt t_inv = tau().inverse();
    auto acc = g.identity();
    PSL2Elt prefix_inv = PSL2Elt::identity();
    for (Gen letter : word.letters()) {
      const Cusp y = prefix_inv.apply(x);
      if (check) {
        const CheckRecord r = letter == Gen::Sigma
                                  ? detail::sigma_relation_at(g, pair, y, tol)
                                  : detail::tau_relation_at(g, pair, y, tol);
        if (!r.pass)
          throw RelationViolation("cocycle: relation " + r.identity +
                                  " fails at " + y.to_string());
      }
      switch (letter) {
        case Gen::Sigma:
          acc = g.op(acc, pair.X(y));
          break;
        case Gen::Tau:
          acc = g.op(acc, pair.Y(y));
          break;
        case Gen::TauInv:
          acc = g.op(acc, g.op(pair.Y(y), pair.Y(t_inv.apply(y))));
          break;
      }
      prefix_inv = evaluate(letter).inverse() * prefix_inv;
    }
    return acc;
  };
}

/// u(gamma) for the cocycle determined by the pair.
template <ValueGroup G>
CuspFunction<G> extend_cocycle(const G& g, const CocyclePair<G>& pair,
                               const PSL2Elt& gamma, bool check = true,
                               double tol = 0.0) {
  return cocycle_on_word(g, pair, decompose(gamma), check, tol);
}

template <ValueGroup G>
Cocycle<G> as_cocycle(G g, CocyclePair<G> pair, bool check = true,
                      double tol = 0.0) {
  return [g = std::move(g), pair = std::move(pair), check, tol](const PSL2Elt& gamma) {
    return extend_cocycle(g, pair, gamma, check, tol);
  };
}

/// X_f(q/p) = f(p, q) and Y_f = tau X_f.
template <ValueGroup G>
CocyclePair<G> from_reciprocity(PairFunction<G> f) {
  CuspFunction<G> X = [f = std::move(f)](const Cusp& x) {
    return f(CoprimePair::make(x.denominator(), x.numerator()));
  };
  CuspFunction<G> Y = act<G>(tau(), X);
  return {std::move(X), std::move(Y)};
}

/// f(p, q) = X(q/p).
template <ValueGroup G>
PairFunction<G> to_reciprocity(CuspFunction<G> X) {
  return [X = std::move(X)](const CoprimePair& pr) { return X(cusp_of_pair(pr)); };
}

/// X.sigma X = 1 and Y.tau Y.tau^2 Y = 1 at every sample; records are
/// ordered cusp by cusp.
template <ValueGroup G>
CheckReport check_relations(const G& g, const CocyclePair<G>& pair,
                            const std::vector<Cusp>& samples, double tol = 0.0) {
  CheckReport report;
  report.records.resize(2 * samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    report.records[2 * i] = detail::sigma_relation_at(g, pair, samples[i], tol);
    report.records[2 * i + 1] = detail::tau_relation_at(g, pair, samples[i], tol);
  });
  return report;
}

/// Y = tau X pointwise.
template <ValueGroup G>
CheckReport check_dedekind(const G& g, const CocyclePair<G>& pair,
                           const std::vector<Cusp>& samples, double tol = 0.0) {
  const CuspFunction<G> tx = act<G>(tau(), pair.X);
  CheckReport report;
  report.records.resize(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    auto a = pair.Y(samples[i]);
    auto b = tx(samples[i]);
    report.records[i] = detail::cusp_record(g, relation_names::kDedekind, samples[i],
                                            a, b, detail::factor_scale(g, a, b), tol);
  });
  return report;
}

template <ValueGroup G>
bool is_dedekind(const G& g, const CocyclePair<G>& pair,
                 const std::vector<Cusp>& samples, double tol = 0.0) {
  return check_dedekind(g, pair, samples, tol).all_pass();
}

/// gamma -> h^{-1} . gamma h, the trivial cocycle of h.
template <ValueGroup G>
Cocycle<G> coboundary(G g, CuspFunction<G> h) {
  return [g = std::move(g), h = std::move(h)](const PSL2Elt& gamma) -> CuspFunction<G> {
    CuspFunction<G> moved = act<G>(gamma, h);
    return [g, h, moved](const Cusp& x) { return g.op(g.inverse(h(x)), moved(x)); };
  };
}

/// u'(gamma) = h^{-1} u(gamma) . gamma h on every sampled gamma and cusp.
template <ValueGroup G>
bool equivalent_via(const G& g, const Cocycle<G>& u, const Cocycle<G>& u_prime,
                    const CuspFunction<G>& h, const std::vector<PSL2Elt>& gammas,
                    const std::vector<Cusp>& cusps, double tol = 0.0) {
  for (const auto& gamma : gammas) {
    const CuspFunction<G> lhs = u_prime(gamma);
    const CuspFunction<G> mid = u(gamma);
    const PSL2Elt inv = gamma.inverse();
    for (const auto& x : cusps) {
      auto a = lhs(x);
      auto hx = h(x), m = mid(x), hy = h(inv.apply(x));
      auto b = product(g, g.inverse(hx), m, hy);
      if (!g.within(a, b, detail::factor_scale(g, a, hx, m, hy), tol)) return false;
    }
  }
  return true;
}

/// X . sigma Y = h^{-1} . (sigma tau) h at every sample, for the supplied h.
template <ValueGroup G>
bool cuspidal_witness_check(const G& g, const CocyclePair<G>& pair,
                            const CuspFunction<G>& h,
                            const std::vector<Cusp>& samples, double tol = 0.0) {
  const PSL2Elt s = sigma();
  const PSL2Elt st_inv = (sigma() * tau()).inverse();
  for (const auto& x : samples) {
    auto a = pair.X(x), b = pair.Y(s.apply(x));
    auto hx = h(x), hy = h(st_inv.apply(x));
    if (!g.within(g.op(a, b), g.op(g.inverse(hx), hy),
                  detail::factor_scale(g, a, b, hx, hy), tol))
      return false;
  }
  return true;
}

}  // namespace ncdedekind
