#include <doctest.h>

#include <random>

#include "ncdedekind/contfrac.hpp"

using namespace ncdedekind;

namespace {
CFSequence seq(std::initializer_list<int> xs) {
  CFSequence s;
  for (int x : xs) s.terms.emplace_back(x);
  return s;
}
}  // namespace

TEST_CASE("evaluation") {
  CHECK(eval_cf(seq({5})).q == 5);
  CHECK(eval_cf(seq({5})).p == 1);
  CHECK(eval_cf(seq({0, 0})).q == -1);
  CHECK(eval_cf(seq({0, 0})).p == 0);
  CHECK(eval_cf(seq({2, 2, 3})).q == 7);
  CHECK(eval_cf(seq({2, 2, 3})).p == 5);
  CHECK(eval_cf_fraction(seq({3})) == Cusp::integer(3));
  CHECK(eval_cf_fraction(seq({0, 0})).is_infinity());
  CHECK(eval_cf_fraction(seq({1, 2, 2})) == Cusp::make(1, 3));
  CHECK_THROWS_AS(eval_cf(CFSequence{}), EmptySequence);
}

TEST_CASE("expansion") {
  CHECK(expand(CoprimePair::make(5, 7)).terms == seq({2, 2, 3}).terms);
  CHECK(expand(CoprimePair::make(1, -4), ExpansionStrategy::Floor).terms == seq({-4}).terms);
  CHECK(expand(CoprimePair::make(1, 9)).terms == seq({9}).terms);
  CHECK(expand(CoprimePair::make(0, 1)).terms == seq({0, 0}).terms);
  CHECK(expand(CoprimePair::make(0, -1)).terms == seq({0, 0}).terms);
}

TEST_CASE("expansion round trip") {
  for (int p = -60; p <= 60; ++p)
    for (int q = -60; q <= 60; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto pr = CoprimePair::make(p, q);
      for (auto s : {ExpansionStrategy::Ceiling, ExpansionStrategy::Floor}) {
        const CFValue v = eval_cf(expand(pr, s));
        const bool same = v.q == q && v.p == p;
        const bool flipped = v.q == -q && v.p == -p;
        CHECK((same || flipped));
      }
    }
}

TEST_CASE("ceiling expansion of 0 < q < p has positive tails") {
  for (int p = 2; p <= 40; ++p)
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const CFSequence s = expand(CoprimePair::make(p, q));
      CHECK(s.terms.size() <= static_cast<std::size_t>(p));
      const auto t = tails(s);
      for (std::size_t i = 1; i < t.size(); ++i) {
        CHECK(t[i].p() >= 1);
        CHECK(t[i].q() >= 1);
      }
    }
}

TEST_CASE("tails") {
  auto t = tails(seq({1, 2, 2}));
  REQUIRE(t.size() == 3);
  CHECK(t[0] == CoprimePair::make(3, 1));
  CHECK(t[1] == CoprimePair::make(2, 3));
  CHECK(t[2] == CoprimePair::make(1, 2));
  t = tails(seq({2, 2, 3}));
  CHECK(t[0] == CoprimePair::make(5, 7));
  CHECK(t[1] == CoprimePair::make(3, 5));
  CHECK(t[2] == CoprimePair::make(1, 3));
  CHECK(tails(seq({4})).front() == CoprimePair::make(1, 4));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    CFSequence s;
    const std::size_t n = 1 + rng() % 7;
    for (std::size_t i = 0; i < n; ++i) s.terms.emplace_back(static_cast<int>(rng() % 11) - 5);
    const auto tt = tails(s);
    for (std::size_t i = 0; i < n; ++i) {
      CFSequence suffix;
      suffix.terms.assign(s.terms.begin() + static_cast<std::ptrdiff_t>(i), s.terms.end());
      const CFValue v = eval_cf(suffix);
      CHECK(tt[i].p() == v.p);
      CHECK(tt[i].q() == v.q);
    }
  }
}

TEST_CASE("basic moves") {
  CHECK(apply_move(seq({3}), AppendEps{1}).terms == seq({4, 1}).terms);
  CHECK(apply_move(seq({3}), SplitZero{0, 1, 2}).terms == seq({1, 0, 2}).terms);
  // (a_0 + eps, eps, a_1 + eps): [2, 3] -> [1, -1, 2], still 5/3
  const CFSequence moved = apply_move(seq({2, 3}), InsertEps{-1, 0});
  CHECK(moved.terms == seq({1, -1, 2}).terms);
  CHECK(eval_cf_fraction(moved) == Cusp::make(5, 3));
  CHECK_THROWS_AS(apply_move(seq({3}), InsertEps{1, 0}), InvalidMove);
  CHECK_THROWS_AS(apply_move(seq({3}), SplitZero{0, 1, 1}), InvalidMove);
  CHECK_THROWS_AS(apply_move(seq({3}), SplitZero{1, 1, 2}), InvalidMove);
}

TEST_CASE("moves preserve the value") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    CFSequence s;
    const std::size_t n = 1 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i) s.terms.emplace_back(static_cast<int>(rng() % 9) - 4);
    const Cusp before = eval_cf_fraction(s);
    const CFSequence after = apply_move(s, random_move(s, rng));
    CHECK(eval_cf_fraction(after) == before);
    CHECK(after.terms.size() > s.terms.size());
  }
}
