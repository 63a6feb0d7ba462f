#include <doctest.h>

#include <random>

#include "ncdedekind/symbols.hpp"

using namespace ncdedekind;

namespace {

std::vector<CoprimePair> positive_pairs(int bound) {
  std::vector<CoprimePair> out;
  for (int p = 1; p <= bound; ++p)
    for (int q = 1; q <= bound; ++q)
      if (std::gcd(p, q) == 1) out.push_back(CoprimePair::make(p, q));
  return out;
}

std::vector<CoprimePair> signed_pairs(int bound) {
  std::vector<CoprimePair> out;
  for (int p = -bound; p <= bound; ++p)
    for (int q = -bound; q <= bound; ++q)
      if (std::gcd(p, q) == 1) out.push_back(CoprimePair::make(p, q));
  return out;
}

const AdditiveRatGroup rat;
const PairFunction<AdditiveRatGroup> F = classical_reciprocity;

}  // namespace

TEST_CASE("classical reciprocity function") {
  CHECK(classical_reciprocity(CoprimePair::make(1, 1)) == 0);
  CHECK(classical_reciprocity(CoprimePair::make(2, 1)) == 0);
  CHECK(classical_reciprocity(CoprimePair::make(3, 2)) == make_rat(-1, 18));
  CHECK_THROWS_AS(classical_reciprocity(CoprimePair::make(0, 1)), ZeroDenominator);
  CHECK(check_reciprocity(rat, F, positive_pairs(20)).all_pass());
}

TEST_CASE("checker catches violations") {
  const PairFunction<AdditiveRatGroup> zero = [](const CoprimePair&) { return BigRat(0); };
  CHECK(check_reciprocity(rat, zero, signed_pairs(5)).all_pass());

  const PairFunction<AdditiveRatGroup> bumped = [](const CoprimePair& pr) {
    BigRat v = classical_reciprocity(pr);
    if (pr == CoprimePair::make(3, 5)) v += 1;
    return v;
  };
  const CheckReport r = check_reciprocity(rat, bumped, {CoprimePair::make(3, 2)});
  CHECK_FALSE(r.all_pass());
  CHECK(r.records[2].identity == identity_names::kThreeTerm);
  CHECK_FALSE(r.records[2].pass);
}

TEST_CASE("Dedekind sum oracle") {
  CHECK(dedekind_sum_oracle(2, 1) == 0);
  CHECK(dedekind_sum_oracle(3, 1) == make_rat(1, 18));
  CHECK(dedekind_sum_oracle(5, 2) == 0);
  CHECK(dedekind_sum_oracle(7, 3) == make_rat(-1, 14));
  CHECK(dedekind_sum_oracle(1, 5) == 0);
  CHECK_THROWS_AS(dedekind_sum_oracle(0, 1), BadModulus);
}

TEST_CASE("classical reconstruction") {
  CHECK(reconstruct(rat, F, CoprimePair::make(1, 7)) == 0);
  CHECK(reconstruct(rat, F, CoprimePair::make(3, 1)) == make_rat(1, 18));
  for (int p = 2; p <= 30; ++p)
    for (int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1)
        CHECK(reconstruct(rat, F, CoprimePair::make(p, q)) == dedekind_sum_oracle(p, q));
}

TEST_CASE("classical symbol satisfies the symbol laws") {
  std::vector<CoprimePair> samples;
  for (int p = 2; p <= 30; ++p)
    for (int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) samples.push_back(CoprimePair::make(p, q));
  const PairFunction<AdditiveRatGroup> d = classical_symbol;
  CHECK(check_symbol(rat, d, F, samples).all_pass());
  CHECK(check_symbol(rat, reconstructed_symbol(rat, F), F, samples).all_pass());

  const PairFunction<AdditiveRatGroup> derived = derive_reciprocity(rat, d);
  for (const auto& pr : positive_pairs(20)) CHECK(derived(pr) == F(pr));

  const PairFunction<AdditiveRatGroup> zero = [](const CoprimePair&) { return BigRat(0); };
  CHECK_FALSE(check_symbol(rat, zero, F, samples).all_pass());
}

TEST_CASE("reconstruction at p = 0") {
  const FreeGroup free(2);
  const RandomFreeSymbol D = random_symbol(9, 10, free);
  const PairFunction<FreeGroup> f = derive_reciprocity<FreeGroup>(free, D);
  CHECK(reconstruct(free, f, CoprimePair::make(0, 1)) ==
        free.inverse(f(CoprimePair::make(1, 0))));
}

TEST_CASE("parity") {
  const auto g = parity_transform<AdditiveRatGroup>(F);
  const auto gg = parity_transform<AdditiveRatGroup>(g);
  const auto samples = positive_pairs(12);
  for (const auto& pr : samples) {
    CHECK(gg(pr) == F(pr));
    CHECK(g(pr) == -F(pr));
  }
  CHECK(check_reciprocity(rat, g, samples).all_pass());
  CHECK_FALSE(is_even(rat, F, samples));
  const OddProbe probe = odd_probe(rat, F, samples);
  CHECK(probe.parity_is_inverse);
  CHECK(probe.symmetric);
}

TEST_CASE("random free symbols") {
  const FreeGroup free(3);
  const RandomFreeSymbol D = random_symbol(42, 30, free);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> dist(-100, 100);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = dist(rng), q = dist(rng);
    if (std::gcd(p, q) != 1) continue;
    const auto pr = CoprimePair::make(p, q);
    CHECK(D(pr) == D(CoprimePair::make(p, q + p)));
    CHECK(D(pr) == D(pr.negated()));
  }
  CHECK(random_symbol(42, 30, free)(CoprimePair::make(7, 3)) == D(CoprimePair::make(7, 3)));

  const PairFunction<FreeGroup> f = derive_reciprocity<FreeGroup>(free, D);
  const auto samples = signed_pairs(12);
  CHECK(check_reciprocity(free, f, samples).all_pass());
  CHECK(free.equal(f(CoprimePair::make(1, 1)), free.identity()));
  CHECK(free.equal(f(CoprimePair::make(-1, 1)), free.identity()));

  // same f, so the reconstruction differs from D by the right constant D(1, 0)
  const FreeWord c = free.inverse(D(CoprimePair::make(1, 0)));
  for (const auto& pr : samples)
    CHECK(reconstruct(free, f, pr) == free.op(D(pr), c));
}

TEST_CASE("expansion independence over a free group") {
  const FreeGroup free(3);
  const RandomFreeSymbol D = random_symbol(5, 30, free);
  const PairFunction<FreeGroup> f = derive_reciprocity<FreeGroup>(free, D);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-200, 200);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = dist(rng), q = dist(rng);
    if (std::gcd(p, q) != 1) continue;
    const auto pr = CoprimePair::make(p, q);
    const FreeWord base = reconstruct(free, f, pr);
    CHECK(reconstruct(free, f, pr, ExpansionStrategy::Floor) == base);
    CFSequence seq = expand(pr);
    for (int k = 0; k < 10; ++k) seq = apply_move(seq, random_move(seq, rng));
    CHECK(reconstruct_from_sequence(free, f, seq) == base);
  }
}
