#include "ncdedekind/symbols.hpp"

#include <sstream>
#include <string>

namespace ncdedekind {

BigRat classical_reciprocity(const CoprimePair& pair) {
  const BigInt pq = pair.p() * pair.q();
  if (pq == 0)
    throw ZeroDenominator("classical reciprocity is undefined when pq = 0");
  const BigInt a = abs(pair.p()), b = abs(pair.q());
  const BigInt ab = a * b;
  BigRat value = make_rat(a * a + b * b - 3 * ab + 1, 12 * ab);
  return pq > 0 ? value : BigRat(-value);
}

BigRat dedekind_sum_oracle(const BigInt& p, const BigInt& q) {
  if (p <= 0) throw BadModulus("Dedekind sum needs a positive modulus");
  // ((k/p)) ((kq/p)) = (2k - p)(2r - p) / (4p^2) with r = kq mod p, r != 0
  BigInt total = 0;
  for (BigInt k = 1; k < p; ++k) {
    const BigInt r = mod_floor(k * q, p);
    if (r == 0) continue;
    total += (2 * k - p) * (2 * r - p);
  }
  return make_rat(total, 4 * p * p);
}

BigRat classical_symbol(const CoprimePair& pair) {
  if (pair.p() == 0) throw BadModulus("classical symbol needs p != 0");
  if (pair.p() < 0) return dedekind_sum_oracle(-pair.p(), -pair.q());
  return dedekind_sum_oracle(pair.p(), pair.q());
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

RandomFreeSymbol::RandomFreeSymbol(std::uint64_t seed, std::uint32_t bound,
                                   FreeGroup group, std::size_t max_length)
    : seed_(seed), group_(group), max_length_(max_length) {
  auto table = std::make_shared<std::map<CoprimePair, FreeWord>>();
  std::mt19937_64 rng(splitmix64(seed));
  table->emplace(CoprimePair::make(0, 1), group_.random_word(rng, max_length_));
  for (std::uint32_t p = 1; p <= bound; ++p)
    for (std::uint32_t q = 0; q < p; ++q)
      if (gcd(BigInt(p), BigInt(q)) == 1)
        table->emplace(CoprimePair::make(p, q),
                       group_.random_word(rng, max_length_));
  table_ = std::move(table);
}

FreeWord RandomFreeSymbol::operator()(const CoprimePair& pair) const {
  const CoprimePair rep = canonical_orbit_rep(pair);
  if (auto it = table_->find(rep); it != table_->end()) return it->second;
  std::ostringstream key;
  key << rep;
  std::mt19937_64 rng(splitmix64(seed_ ^ fnv1a(key.str())));
  return group_.random_word(rng, max_length_);
}

RandomFreeSymbol random_symbol(std::uint64_t seed, std::uint32_t bound,
                               const FreeGroup& group) {
  return RandomFreeSymbol(seed, bound, group);
}

}  // namespace ncdedekind
