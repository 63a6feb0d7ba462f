#include <doctest.h>

#include <random>

#include "ncdedekind/cocycle.hpp"
#include "ncdedekind/iterint.hpp"

using namespace ncdedekind;

namespace {

PSL2Elt random_element(std::mt19937_64& rng, int length) {
  PSL2Elt g = PSL2Elt::identity();
  for (int k = 0; k < length; ++k) g = g * (rng() % 2 ? sigma() : tau());
  return g;
}

GenWord random_word(std::mt19937_64& rng, int length) {
  std::vector<Gen> letters;
  for (int k = 0; k < length; ++k) letters.push_back(static_cast<Gen>(rng() % 3));
  return GenWord(letters);
}

Cusp random_cusp(std::mt19937_64& rng) {
  const int den = static_cast<int>(rng() % 15);
  if (den == 0) return Cusp::infinity();
  int num = static_cast<int>(rng() % 41) - 20;
  while (std::gcd(num, den) != 1) ++num;
  return Cusp::make(num, den);
}

const FreeGroup free3(3);

PairFunction<FreeGroup> free_f(std::uint64_t seed) {
  return derive_reciprocity<FreeGroup>(free3, random_symbol(seed, 30, free3));
}

std::vector<Cusp> classical_cusps() {
  std::vector<Cusp> out;
  for (const auto& x : default_cusp_samples(12))
    if (!x.is_infinity() && x.numerator() != 0 && x.numerator() != x.denominator())
      out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("generators") {
  const PSL2Elt s = sigma(), t = tau();
  CHECK(s * s == PSL2Elt::identity());
  CHECK(t * t * t == PSL2Elt::identity());
  CHECK(t * t == t.inverse());
  CHECK((s * t).apply(Cusp::infinity()).is_infinity());
  CHECK((s * t).inverse() == PSL2Elt::make({1, 1, 0, 1}));
  CHECK(PSL2Elt::make({-1, 0, 0, -1}) == PSL2Elt::identity());
  CHECK_THROWS_AS(PSL2Elt::make({1, 1, 1, 1}), BadMatrix);
}

TEST_CASE("words") {
  CHECK(GenWord({Gen::Sigma, Gen::Sigma}).length() == 0);
  CHECK(GenWord({Gen::Tau, Gen::Tau}).letters() == std::vector<Gen>{Gen::TauInv});
  CHECK(GenWord({Gen::Tau, Gen::TauInv}).length() == 0);
  CHECK(GenWord({Gen::Sigma, Gen::Tau, Gen::TauInv, Gen::Sigma}).length() == 0);
  CHECK(GenWord({Gen::Sigma, Gen::Tau}).to_string() == "st");
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const GenWord w = random_word(rng, 12);
    for (std::size_t i = 0; i + 1 < w.length(); ++i) {
      const bool s0 = w.letters()[i] == Gen::Sigma, s1 = w.letters()[i + 1] == Gen::Sigma;
      CHECK(s0 != s1);
    }
  }
}

TEST_CASE("decomposition") {
  CHECK(decompose(PSL2Elt::identity()).length() == 0);
  CHECK(decompose(sigma()).letters() == std::vector<Gen>{Gen::Sigma});
  const PSL2Elt T = PSL2Elt::make({1, 1, 0, 1});
  const GenWord wt = decompose(T);
  CHECK(wt.length() == 2);
  CHECK(wt.evaluate() == T);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const PSL2Elt g = random_element(rng, 1 + static_cast<int>(rng() % 30));
    CHECK(decompose(g).evaluate() == g);
  }
  // normal forms are unique in the free product
  for (int trial = 0; trial < 200; ++trial) {
    const GenWord w = random_word(rng, 15);
    CHECK(decompose(w.evaluate()) == w);
  }
}

TEST_CASE("action on cusp functions") {
  const CuspFunction<FreeGroup> h = [](const Cusp& x) {
    const BigInt k = mod_floor(x.numerator() * 7 + x.denominator() * 3, 3);
    return FreeWord::generator(1 + k.convert_to<std::uint32_t>());
  };
  const Cusp zero = Cusp::integer(0);
  CHECK(act<FreeGroup>(PSL2Elt::identity(), h)(zero) == h(zero));
  CHECK(act<FreeGroup>(sigma(), h)(zero) == h(Cusp::infinity()));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const PSL2Elt a = random_element(rng, 6), b = random_element(rng, 6);
    const Cusp x = random_cusp(rng);
    CHECK(act<FreeGroup>(a * b, h)(x) == act<FreeGroup>(a, act<FreeGroup>(b, h))(x));
  }
}

TEST_CASE("cocycles from a free-group reciprocity function") {
  const auto f = free_f(11);
  const CocyclePair<FreeGroup> pair = from_reciprocity<FreeGroup>(f);
  const auto cusps = default_cusp_samples(12);
  CHECK(pair.X(Cusp::make(3, 2)) == f(CoprimePair::make(2, 3)));
  CHECK(pair.X(Cusp::infinity()) == f(CoprimePair::make(0, 1)));
  CHECK(check_relations(free3, pair, cusps).all_pass());
  CHECK(is_dedekind(free3, pair, cusps));
  CHECK_FALSE(is_dedekind(free3, CocyclePair<FreeGroup>{pair.X, pair.X}, cusps));

  const Cocycle<FreeGroup> u = as_cocycle(free3, pair);
  const Cusp x0 = Cusp::make(2, 5);
  CHECK(u(PSL2Elt::identity())(x0).is_identity());
  CHECK(cocycle_on_word(free3, pair, GenWord({Gen::Sigma}) * GenWord({Gen::Sigma}))(x0).is_identity());
  const CuspFunction<FreeGroup> u_ss = [&](const Cusp& x) {
    return free3.op(pair.X(x), act<FreeGroup>(sigma(), pair.X)(x));
  };
  const CuspFunction<FreeGroup> u_ttt = [&](const Cusp& x) {
    const auto& Y = pair.Y;
    return product(free3, Y(x), act<FreeGroup>(tau(), Y)(x),
                   act<FreeGroup>(tau() * tau(), Y)(x));
  };
  for (const auto& x : cusps) {
    CHECK(u_ss(x).is_identity());
    CHECK(u_ttt(x).is_identity());
  }

  // cocycle rule and independence of the spelling
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const GenWord w1 = random_word(rng, 6), w2 = random_word(rng, 6);
    const PSL2Elt g1 = w1.evaluate(), g2 = w2.evaluate();
    const Cusp x = random_cusp(rng);
    const FreeWord lhs = u(g1 * g2)(x);
    const FreeWord rhs = free3.op(u(g1)(x), act<FreeGroup>(g1, u(g2))(x));
    CHECK(lhs == rhs);
    // unreduced spelling: w1 s s w2
    std::vector<Gen> spelled = w1.letters();
    spelled.push_back(Gen::Sigma);
    spelled.push_back(Gen::Sigma);
    spelled.insert(spelled.end(), w2.letters().begin(), w2.letters().end());
    const auto folded = [&] {
      auto acc = free3.identity();
      PSL2Elt prefix = PSL2Elt::identity();
      for (Gen l : spelled) {
        const auto piece = cocycle_on_word(free3, pair, GenWord({l}));
        acc = free3.op(acc, act<FreeGroup>(prefix, piece)(x));
        prefix = prefix * evaluate(l);
      }
      return acc;
    }();
    CHECK(folded == lhs);
  }
}

TEST_CASE("relation violations are reported") {
  const auto f = free_f(12);
  CocyclePair<FreeGroup> pair = from_reciprocity<FreeGroup>(f);
  CocyclePair<FreeGroup> broken{[](const Cusp&) { return FreeWord::generator(1); }, pair.Y};
  CHECK_FALSE(check_relations(free3, broken, default_cusp_samples(4)).all_pass());
  CHECK_THROWS_AS(extend_cocycle(free3, broken, sigma())(Cusp::integer(2)), RelationViolation);
  CHECK_NOTHROW(extend_cocycle(free3, broken, sigma(), false)(Cusp::integer(2)));
}

TEST_CASE("bijection with reciprocity functions") {
  const auto f = free_f(13);
  const CocyclePair<FreeGroup> pair = from_reciprocity<FreeGroup>(f);
  const PairFunction<FreeGroup> back = to_reciprocity<FreeGroup>(pair.X);
  for (int p = -12; p <= 12; ++p)
    for (int q = -12; q <= 12; ++q)
      if (std::gcd(p, q) == 1) CHECK(back(CoprimePair::make(p, q)) == f(CoprimePair::make(p, q)));
  const CocyclePair<FreeGroup> again = from_reciprocity<FreeGroup>(back);
  for (const auto& x : default_cusp_samples(12)) CHECK(again.X(x) == pair.X(x));
  CHECK(check_reciprocity(free3, back, {CoprimePair::make(5, 3), CoprimePair::make(-2, 7)}).all_pass());

  const CuspFunction<FreeGroup> one = [](const Cusp&) { return FreeWord{}; };
  CHECK(to_reciprocity<FreeGroup>(one)(CoprimePair::make(3, 4)).is_identity());
}

TEST_CASE("classical cocycle") {
  const AdditiveRatGroup rat;
  const PairFunction<AdditiveRatGroup> F = classical_reciprocity;
  const CocyclePair<AdditiveRatGroup> pair = from_reciprocity<AdditiveRatGroup>(F);
  CHECK(pair.X(Cusp::integer(1)) == 0);
  const auto cusps = classical_cusps();
  CHECK(check_relations(rat, pair, cusps).all_pass());
  CHECK(is_dedekind(rat, pair, cusps));
  const auto back = to_reciprocity<AdditiveRatGroup>(pair.X);
  for (const auto& x : cusps) {
    const auto pr = CoprimePair::make(x.denominator(), x.numerator());
    CHECK(back(pr) == F(pr));
  }
}

TEST_CASE("coboundaries and equivalence") {
  const CuspFunction<FreeGroup> h = [](const Cusp& x) {
    const auto k = mod_floor(x.numerator() + 2 * x.denominator(), 3).convert_to<std::uint32_t>();
    return FreeWord::generator(1 + k, k == 1 ? -1 : 1);
  };
  const Cocycle<FreeGroup> ug = coboundary<FreeGroup>(free3, h);
  const auto cusps = default_cusp_samples(6);
  for (const auto& x : cusps) CHECK(ug(PSL2Elt::identity())(x).is_identity());
  std::mt19937_64 rng(8);
  std::vector<PSL2Elt> gammas;
  for (int trial = 0; trial < 30; ++trial) {
    const PSL2Elt a = random_element(rng, 5), b = random_element(rng, 5);
    gammas.push_back(a);
    const Cusp x = random_cusp(rng);
    CHECK(ug(a * b)(x) == free3.op(ug(a)(x), act<FreeGroup>(a, ug(b))(x)));
  }

  const auto f = free_f(14);
  const Cocycle<FreeGroup> u = as_cocycle(free3, from_reciprocity<FreeGroup>(f));
  const CuspFunction<FreeGroup> one = [](const Cusp&) { return FreeWord{}; };
  CHECK(equivalent_via(free3, u, u, one, gammas, cusps));
  // u' = h^{-1} u(gamma) gamma h is equivalent to u via h, but not via 1
  const Cocycle<FreeGroup> twisted = [&](const PSL2Elt& gamma) -> CuspFunction<FreeGroup> {
    return [&, gamma](const Cusp& x) {
      return product(free3, free3.inverse(h(x)), u(gamma)(x), h(gamma.inverse().apply(x)));
    };
  };
  CHECK(equivalent_via(free3, u, twisted, h, gammas, cusps));
  CHECK_FALSE(equivalent_via(free3, u, twisted, one, gammas, cusps));
}

TEST_CASE("cuspidal witness") {
  const auto f = free_f(15);
  const CocyclePair<FreeGroup> pair = from_reciprocity<FreeGroup>(f);
  // X = (sigma Y)^{-1} makes both sides trivial for the identity witness
  const CuspFunction<FreeGroup> X = [&](const Cusp& x) {
    return free3.inverse(pair.Y(sigma().apply(x)));
  };
  const CocyclePair<FreeGroup> trivial{X, pair.Y};
  const CuspFunction<FreeGroup> one = [](const Cusp&) { return FreeWord{}; };
  const auto cusps = default_cusp_samples(6);
  CHECK(cuspidal_witness_check(free3, trivial, one, cusps));
  const CuspFunction<FreeGroup> bumped = [](const Cusp& x) {
    return x == Cusp::integer(1) ? FreeWord::generator(2) : FreeWord{};
  };
  CHECK_FALSE(cuspidal_witness_check(free3, trivial, bumped, cusps));
}

TEST_CASE("cusp stabilisers") {
  CHECK(stabilizer_generator(Cusp::infinity()) == sigma() * tau());
  const PSL2Elt at_zero = stabilizer_generator(Cusp::integer(0));
  CHECK(at_zero.apply(Cusp::integer(0)) == Cusp::integer(0));
  CHECK(at_zero == sigma().inverse() * sigma() * tau() * sigma());
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Cusp a = random_cusp(rng);
    const PSL2Elt g = stabilizer_generator(a);
    CHECK(g.apply(a) == a);
    CHECK_FALSE(g == PSL2Elt::identity());
  }
}

TEST_CASE("iterated-integral cocycle") {
  IterintConfig c;
  const IteratedIntegrals ii(c);
  using G = SeriesGroup<std::complex<double>>;
  const G g = ii.group();
  const PairFunction<G> f = [&](const CoprimePair& pr) { return ii.reciprocity_integral(pr); };
  const CocyclePair<G> pair = from_reciprocity<G>(f);
  const auto cusps = default_cusp_samples(5);
  CHECK(check_relations(g, pair, cusps, 1e-8).all_pass());
  CHECK(is_dedekind(g, pair, cusps, 1e-8));
  const auto back = to_reciprocity<G>(pair.X);
  for (const auto& x : cusps) {
    const auto pr = CoprimePair::make(x.denominator(), x.numerator());
    CHECK(g.within(back(pr), f(pr), g.magnitude(f(pr)), 1e-8));
  }
}
