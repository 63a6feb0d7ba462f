#pragma once

// Reciprocity functions and generalized Dedekind symbols over an arbitrary
// value group: axiom checkers, reconstruction of a symbol from its
// reciprocity function through continued-fraction tails, and the
// classical commutative example.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ncdedekind/contfrac.hpp"
#include "ncdedekind/group_values.hpp"
#include "ncdedekind/parallel.hpp"
#include "ncdedekind/report.hpp"

namespace ncdedekind {

template <ValueGroup G>
using PairFunction = std::function<typename G::value_type(const CoprimePair&)>;

namespace identity_names {
inline constexpr const char* kParity = "f(p,-q)=f(-p,q)";
inline constexpr const char* kInversion = "f(p,q)f(-q,p)=1";
inline constexpr const char* kThreeTerm = "f(p,p+q)f(p+q,q)=f(p,q)";
inline constexpr const char* kPeriodicity = "D(p,q)=D(p,q+p)";
inline constexpr const char* kSign = "D(p,-q)=D(-p,q)";
inline constexpr const char* kReciprocity = "D(p,q)D(q,-p)^-1=f(p,q)";
}  // namespace identity_names

namespace detail {

inline CoprimePair pair_of(const BigInt& p, const BigInt& q) {
  return CoprimePair::make(p, q);
}

/// Scale of a set of factors: the largest magnitude among them.
template <ValueGroup G, class... Xs>
double factor_scale(const G& g, const Xs&... xs) {
  double s = 0.0;
  ((s = std::max(s, g.magnitude(xs))), ...);
  return s;
}

template <ValueGroup G>
CheckRecord make_record(const G& g, const char* name, const CoprimePair& at,
                        const typename G::value_type& lhs,
                        const typename G::value_type& rhs, double scale,
                        double tol) {
  CheckRecord r;
  r.identity = name;
  r.pair = at;
  r.deviation = g.deviation(lhs, rhs, scale);
  r.pass = g.within(lhs, rhs, scale, tol);
  return r;
}

}  // namespace detail

/// Evaluates the three reciprocity identities at every sample, generating
/// the companion pairs (p, -q), (-p, q), (-q, p), (p, p+q), (p+q, q).
/// Records are ordered sample by sample. tol is ignored by exact carriers.
template <ValueGroup G>
CheckReport check_reciprocity(const G& g, const PairFunction<G>& f,
                              const std::vector<CoprimePair>& samples,
                              double tol = 0.0) {
  using detail::pair_of;
  CheckReport report;
  report.records.resize(3 * samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    const BigInt& p = samples[i].p();
    const BigInt& q = samples[i].q();
    {
      auto lhs = f(pair_of(p, -q));
      auto rhs = f(pair_of(-p, q));
      report.records[3 * i] = detail::make_record(
          g, identity_names::kParity, samples[i], lhs, rhs,
          detail::factor_scale(g, lhs, rhs), tol);
    }
    const auto fpq = f(samples[i]);
    {
      auto other = f(pair_of(-q, p));
      report.records[3 * i + 1] = detail::make_record(
          g, identity_names::kInversion, samples[i], g.op(fpq, other),
          g.identity(), detail::factor_scale(g, fpq, other), tol);
    }
    {
      auto a = f(pair_of(p, p + q));
      auto b = f(pair_of(p + q, q));
      report.records[3 * i + 2] = detail::make_record(
          g, identity_names::kThreeTerm, samples[i], g.op(a, b), fpq,
          detail::factor_scale(g, a, b, fpq), tol);
    }
  });
  return report;
}

/// Ordered product f(p_1,q_1)^{-1} ... f(p_n,q_n)^{-1} over the tails of
/// the given presentation (the identity when n = 0).
template <ValueGroup G>
typename G::value_type reconstruct_from_sequence(const G& g,
                                                 const PairFunction<G>& f,
                                                 const CFSequence& seq) {
  const std::vector<CoprimePair> tail = tails(seq);
  typename G::value_type acc = g.identity();
  for (std::size_t i = 1; i < tail.size(); ++i)
    acc = g.op(acc, g.inverse(f(tail[i])));
  return acc;
}

/// The symbol value D(p, q) built from f through the chosen expansion.
template <ValueGroup G>
typename G::value_type reconstruct(
    const G& g, const PairFunction<G>& f, const CoprimePair& pair,
    ExpansionStrategy strategy = ExpansionStrategy::Ceiling) {
  return reconstruct_from_sequence(g, f, expand(pair, strategy));
}

/// Reconstruction as a function object (Ceiling strategy by default).
template <ValueGroup G>
PairFunction<G> reconstructed_symbol(
    G g, PairFunction<G> f,
    ExpansionStrategy strategy = ExpansionStrategy::Ceiling) {
  return [g = std::move(g), f = std::move(f), strategy](const CoprimePair& pr) {
    return reconstruct(g, f, pr, strategy);
  };
}

/// f(p, q) = D(p, q) D(q, -p)^{-1}.
template <ValueGroup G>
PairFunction<G> derive_reciprocity(G g, PairFunction<G> symbol) {
  return [g = std::move(g), D = std::move(symbol)](const CoprimePair& pr) {
    return g.op(D(pr), g.inverse(D(CoprimePair::make(pr.q(), -pr.p()))));
  };
}

/// Periodicity, sign symmetry and the reciprocity law of D against f.
template <ValueGroup G>
CheckReport check_symbol(const G& g, const PairFunction<G>& D,
                         const PairFunction<G>& f,
                         const std::vector<CoprimePair>& samples,
                         double tol = 0.0) {
  using detail::pair_of;
  CheckReport report;
  report.records.resize(3 * samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    const BigInt& p = samples[i].p();
    const BigInt& q = samples[i].q();
    const auto dpq = D(samples[i]);
    {
      auto shifted = D(pair_of(p, q + p));
      report.records[3 * i] = detail::make_record(
          g, identity_names::kPeriodicity, samples[i], dpq, shifted,
          detail::factor_scale(g, dpq, shifted), tol);
    }
    {
      auto a = D(pair_of(p, -q));
      auto b = D(pair_of(-p, q));
      report.records[3 * i + 1] = detail::make_record(
          g, identity_names::kSign, samples[i], a, b,
          detail::factor_scale(g, a, b), tol);
    }
    {
      auto partner = D(pair_of(q, -p));
      auto rhs = f(samples[i]);
      report.records[3 * i + 2] = detail::make_record(
          g, identity_names::kReciprocity, samples[i],
          g.op(dpq, g.inverse(partner)), rhs,
          detail::factor_scale(g, dpq, partner, rhs), tol);
    }
  });
  return report;
}

// --------------------------------------------------------------------------
// Parity.

/// g(p, q) = f(-p, q).
template <ValueGroup G>
PairFunction<G> parity_transform(PairFunction<G> f) {
  return [f = std::move(f)](const CoprimePair& pr) {
    return f(CoprimePair::make(-pr.p(), pr.q()));
  };
}

/// True when f(-p, q) = f(p, q) on every sample.
template <ValueGroup G>
bool is_even(const G& g, const PairFunction<G>& f,
             const std::vector<CoprimePair>& samples, double tol = 0.0) {
  const auto parity = parity_transform<G>(f);
  for (const auto& s : samples) {
    auto a = f(s), b = parity(s);
    if (!g.within(a, b, detail::factor_scale(g, a, b), tol)) return false;
  }
  return true;
}

/// The two candidate oddness conditions, reported separately.
struct OddProbe {
  bool parity_is_inverse = true;  // f(-p, q) = f(p, q)^{-1}
  bool symmetric = true;          // f(p, q) = f(q, p)
};

template <ValueGroup G>
OddProbe odd_probe(const G& g, const PairFunction<G>& f,
                   const std::vector<CoprimePair>& samples, double tol = 0.0) {
  OddProbe out;
  const auto parity = parity_transform<G>(f);
  for (const auto& s : samples) {
    auto a = f(s), b = parity(s);
    if (!g.within(b, g.inverse(a), detail::factor_scale(g, a, b), tol))
      out.parity_is_inverse = false;
    auto swapped = f(CoprimePair::make(s.q(), s.p()));
    if (!g.within(a, swapped, detail::factor_scale(g, a, swapped), tol))
      out.symmetric = false;
  }
  return out;
}

// --------------------------------------------------------------------------
// The classical commutative case.

/// sign(pq) (p^2 + q^2 - 3|pq| + 1) / (12 |pq|): the classical reciprocity
/// function (p^2 + q^2 - 3pq + 1) / (12pq) on pq > 0, extended to all of
/// W \ {pq = 0} so that the three reciprocity identities hold. Throws
/// ZeroDenominator when pq = 0.
BigRat classical_reciprocity(const CoprimePair& pair);

/// Brute-force Dedekind sum s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)).
/// Throws BadModulus when p <= 0.
BigRat dedekind_sum_oracle(const BigInt& p, const BigInt& q);

/// The classical symbol d(p, q) = s(q, p), extended by d(-p, -q) = d(p, q).
/// Throws BadModulus when p = 0.
BigRat classical_symbol(const CoprimePair& pair);

// --------------------------------------------------------------------------
// Random symbols over a free group.

/// A symbol that is constant on the orbits of (p, q) -> (p, q + p) and
/// (p, q) -> (-p, -q), so it satisfies periodicity and sign symmetry by
/// construction. Orbit representatives with p <= bound get words drawn in
/// order from one seeded stream; any other orbit gets a word drawn from a
/// stream keyed by (seed, representative).
class RandomFreeSymbol {
 public:
  RandomFreeSymbol(std::uint64_t seed, std::uint32_t bound, FreeGroup group,
                   std::size_t max_length = 6);

  FreeWord operator()(const CoprimePair& pair) const;
  const FreeGroup& group() const noexcept { return group_; }
  std::size_t table_size() const noexcept { return table_->size(); }

 private:
  std::uint64_t seed_;
  FreeGroup group_;
  std::size_t max_length_;
  std::shared_ptr<const std::map<CoprimePair, FreeWord>> table_;
};

RandomFreeSymbol random_symbol(std::uint64_t seed, std::uint32_t bound,
                               const FreeGroup& group);

}  // namespace ncdedekind
