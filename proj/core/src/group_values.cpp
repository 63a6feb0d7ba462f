#include "ncdedekind/group_values.hpp"

#include <sstream>

namespace ncdedekind {

FreeWord::FreeWord(const std::vector<FreeLetter>& letters) {
  letters_.reserve(letters.size());
  for (const FreeLetter& l : letters) {
    if (!letters_.empty() && letters_.back().generator == l.generator &&
        letters_.back().exponent == -l.exponent)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::generator(std::uint32_t index, int exponent) {
  return FreeWord({FreeLetter{index, exponent}});
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "e";
  std::ostringstream os;
  for (const FreeLetter& l : letters_) {
    os << 'g' << l.generator;
    if (l.exponent < 0) os << "^-1";
  }
  return os.str();
}

FreeWord word_mul(const FreeWord& x, const FreeWord& y) {
  std::vector<FreeLetter> all = x.letters();
  all.insert(all.end(), y.letters().begin(), y.letters().end());
  return FreeWord(all);
}

FreeWord word_inv(const FreeWord& x) {
  std::vector<FreeLetter> out(x.letters().rbegin(), x.letters().rend());
  for (FreeLetter& l : out) l.exponent = -l.exponent;
  return FreeWord(out);
}

FreeWord FreeGroup::random_word(std::mt19937_64& rng,
                                std::size_t max_length) const {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<std::uint32_t> gen(1, rank_);
  std::uniform_int_distribution<int> coin(0, 1);
  const std::size_t target = len(rng);
  std::vector<FreeLetter> letters;
  while (letters.size() < target) {
    FreeLetter l{gen(rng), coin(rng) ? 1 : -1};
    if (!letters.empty() && letters.back().generator == l.generator &&
        letters.back().exponent == -l.exponent)
      continue;
    letters.push_back(l);
  }
  return FreeWord(letters);
}

WordIndex::WordIndex(int variables, int depth) : r_(variables), d_(depth) {
  if (variables < 1 || depth < 0)
    throw ShapeMismatch("series needs at least one variable and depth >= 0");
  powers_.resize(static_cast<std::size_t>(d_) + 1);
  offsets_.resize(static_cast<std::size_t>(d_) + 2);
  powers_[0] = 1;
  offsets_[0] = 0;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(d_); ++k) {
    if (k) powers_[k] = powers_[k - 1] * static_cast<std::size_t>(r_);
    offsets_[k + 1] = offsets_[k] + powers_[k];
  }
}

int WordIndex::length_of(std::size_t index) const {
  int k = 0;
  while (offsets_[static_cast<std::size_t>(k) + 1] <= index) ++k;
  return k;
}

std::vector<int> WordIndex::word(std::size_t index) const {
  const int k = length_of(index);
  std::size_t v = index - offset(k);
  std::vector<int> letters(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    letters[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::size_t>(r_));
    v /= static_cast<std::size_t>(r_);
  }
  return letters;
}

std::size_t WordIndex::index_of(const std::vector<int>& letters) const {
  const int k = static_cast<int>(letters.size());
  if (k > d_) throw ShapeMismatch("word longer than truncation depth");
  std::size_t v = 0;
  for (int l : letters) {
    if (l < 0 || l >= r_) throw ShapeMismatch("letter out of range");
    v = v * static_cast<std::size_t>(r_) + static_cast<std::size_t>(l);
  }
  return offset(k) + v;
}

std::string WordIndex::label(std::size_t index) const {
  std::string s;
  for (int l : word(index)) s += std::to_string(l + 1);
  return s;
}

std::vector<SeriesTerm> serialize(const ComplexSeries& s) {
  std::vector<SeriesTerm> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    out.push_back({s.index().label(i), s[i].real(), s[i].imag()});
  return out;
}

}  // namespace ncdedekind
