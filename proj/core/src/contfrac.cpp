#include "ncdedekind/contfrac.hpp"

#include <ostream>

namespace ncdedekind {

std::ostream& operator<<(std::ostream& os, const CFSequence& seq) {
  os << '[';
  for (std::size_t i = 0; i < seq.terms.size(); ++i) {
    if (i) os << ", ";
    os << seq.terms[i];
  }
  return os << ']';
}

CFValue eval_cf(const CFSequence& seq) {
  if (seq.terms.empty()) throw EmptySequence("eval_cf: empty sequence");
  BigInt q = seq.terms.back();
  BigInt p = 1;
  for (auto it = seq.terms.rbegin() + 1; it != seq.terms.rend(); ++it) {
    BigInt next_q = *it * q - p;
    p = std::move(q);
    q = std::move(next_q);
  }
  return {std::move(q), std::move(p)};
}

Cusp eval_cf_fraction(const CFSequence& seq) {
  CFValue v = eval_cf(seq);
  return Cusp::make(std::move(v.q), std::move(v.p));
}

CFSequence expand(const CoprimePair& pair, ExpansionStrategy strategy) {
  if (pair.p() == 0) return CFSequence{{0, 0}};
  BigInt p = pair.p(), q = pair.q();
  if (p < 0) {
    p = -p;
    q = -q;
  }
  CFSequence out;
  // x = q/p = a - 1/x' with x' = p / (a p - q); |a p - q| < p.
  while (true) {
    BigInt a = strategy == ExpansionStrategy::Ceiling ? ceil_div(q, p)
                                                      : floor_div(q, p);
    BigInt rest = a * p - q;
    out.terms.push_back(std::move(a));
    if (rest == 0) break;
    q = p;
    p = std::move(rest);
    if (p < 0) {
      p = -p;
      q = -q;
    }
  }
  return out;
}

std::vector<CoprimePair> tails(const CFSequence& seq) {
  if (seq.terms.empty()) throw EmptySequence("tails: empty sequence");
  const std::size_t n = seq.terms.size();
  std::vector<BigInt> ps(n), qs(n);
  qs[n - 1] = seq.terms[n - 1];
  ps[n - 1] = 1;
  for (std::size_t k = n - 1; k-- > 0;) {
    qs[k] = seq.terms[k] * qs[k + 1] - ps[k + 1];
    ps[k] = qs[k + 1];
  }
  std::vector<CoprimePair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(CoprimePair::make(std::move(ps[i]), std::move(qs[i])));
  return out;
}

namespace {

void require_eps(int eps) {
  if (eps != 1 && eps != -1)
    throw InvalidMove("move parameter eps must be 1 or -1");
}

}  // namespace

CFSequence apply_move(const CFSequence& seq, const Move& move) {
  if (seq.terms.empty()) throw EmptySequence("apply_move: empty sequence");
  const auto& a = seq.terms;
  const std::size_t n = a.size() - 1;
  CFSequence out;
  out.terms.reserve(a.size() + 2);

  if (const auto* m = std::get_if<InsertEps>(&move)) {
    require_eps(m->eps);
    if (m->index + 1 > n)
      throw InvalidMove("InsertEps position must satisfy 0 <= i <= n-1");
    const std::size_t i = m->index;
    out.terms.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
    out.terms.push_back(a[i] + m->eps);
    out.terms.push_back(m->eps);
    out.terms.push_back(a[i + 1] + m->eps);
    out.terms.insert(out.terms.end(), a.begin() + static_cast<std::ptrdiff_t>(i + 2), a.end());
  } else if (const auto* m = std::get_if<SplitZero>(&move)) {
    if (m->index > n)
      throw InvalidMove("SplitZero position must satisfy 0 <= i <= n");
    if (m->b + m->c != a[m->index])
      throw InvalidMove("SplitZero requires b + c = a_i");
    const std::size_t i = m->index;
    out.terms.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
    out.terms.push_back(m->b);
    out.terms.push_back(0);
    out.terms.push_back(m->c);
    out.terms.insert(out.terms.end(), a.begin() + static_cast<std::ptrdiff_t>(i + 1), a.end());
  } else {
    const auto& append = std::get<AppendEps>(move);
    require_eps(append.eps);
    out.terms = a;
    out.terms.back() += append.eps;
    out.terms.push_back(append.eps);
  }
  return out;
}

Move random_move(const CFSequence& seq, std::mt19937_64& rng, int spread) {
  if (seq.terms.empty()) throw EmptySequence("random_move: empty sequence");
  const std::size_t n = seq.terms.size() - 1;
  std::uniform_int_distribution<int> kind(n >= 1 ? 0 : 1, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  const int eps = coin(rng) ? 1 : -1;
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<std::size_t> pos(0, n - 1);
      return InsertEps{eps, pos(rng)};
    }
    case 1: {
      std::uniform_int_distribution<std::size_t> pos(0, n);
      const std::size_t i = pos(rng);
      std::uniform_int_distribution<int> shift(-spread, spread);
      BigInt b = floor_div(seq.terms[i], 2) + shift(rng);
      BigInt c = seq.terms[i] - b;
      return SplitZero{i, std::move(b), std::move(c)};
    }
    default:
      return AppendEps{eps};
  }
}

}  // namespace ncdedekind
