#pragma once

// Modified ("minus") continued fractions
//
//   <a_0, a_1, ..., a_n> = a_0 - 1/(a_1 - 1/(a_2 - ... - 1/a_n))
//
// evaluated projectively through the numerator/denominator recursion
//
//   Q(a_0)       = a_0,                       P(a_0)       = 1,
//   Q(a_0..a_m)  = a_0 Q(a_1..a_m) - P(a_1..a_m),
//   P(a_0..a_m)  = Q(a_1..a_m),
//
// so that infinite intermediate values (P = 0) are handled without special
// cases. The three length-increasing moves below preserve the value.

#include <random>
#include <variant>
#include <vector>

#include "ncdedekind/exact_arith.hpp"

namespace ncdedekind {

struct CFSequence {
  std::vector<BigInt> terms;

  std::size_t size() const noexcept { return terms.size(); }
  friend bool operator==(const CFSequence&, const CFSequence&) = default;
};

std::ostream& operator<<(std::ostream& os, const CFSequence& seq);

/// The pair (Q, P) of the recursion; coprime for every integer input.
struct CFValue {
  BigInt q;
  BigInt p;
  friend bool operator==(const CFValue&, const CFValue&) = default;
};

/// Throws EmptySequence on an empty sequence.
CFValue eval_cf(const CFSequence& seq);

/// Q/P as a cusp (infinity when P = 0).
Cusp eval_cf_fraction(const CFSequence& seq);

enum class ExpansionStrategy { Ceiling, Floor };

/// A presentation q/p = <a_0..a_n>. The pair is first normalised to p > 0;
/// p = 0 yields [0, 0]. Ceiling gives the Hirzebruch-Jung expansion
/// (a_i >= 2 for i >= 1), Floor the variant with non-positive tails.
CFSequence expand(const CoprimePair& pair,
                  ExpansionStrategy strategy = ExpansionStrategy::Ceiling);

/// Suffix values: entry i is (p_i, q_i) with q_i / p_i = <a_i..a_n>,
/// computed in one backward pass. Entry 0 is eval_cf(seq) in (P, Q) order.
std::vector<CoprimePair> tails(const CFSequence& seq);

/// (a_0.., a_i + eps, eps, a_{i+1} + eps, a_{i+2}..), 0 <= i <= n-1.
struct InsertEps {
  int eps;
  std::size_t index;
};
/// (a_0.., a_{i-1}, b, 0, c, a_{i+1}..) with b + c = a_i.
struct SplitZero {
  std::size_t index;
  BigInt b;
  BigInt c;
};
/// (a_0.., a_{n-1}, a_n + eps, eps).
struct AppendEps {
  int eps;
};

using Move = std::variant<InsertEps, SplitZero, AppendEps>;

/// Throws InvalidMove for an out-of-range position, eps not in {1, -1}
/// or b + c != a_i.
CFSequence apply_move(const CFSequence& seq, const Move& move);

/// A uniformly chosen valid move; split points b are drawn from
/// [-spread, spread] around a_i / 2.
Move random_move(const CFSequence& seq, std::mt19937_64& rng, int spread = 3);

}  // namespace ncdedekind
