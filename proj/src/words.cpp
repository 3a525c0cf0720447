#include "leavitt/words.hpp"

#include <algorithm>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

void check_alphabet(const Word &a, const Word &b) {
  if (a.alphabet() != b.alphabet())
    throw MismatchError("alphabet mismatch: " + std::to_string(a.alphabet()) +
                        " vs " + std::to_string(b.alphabet()));
}

} // namespace

Word::Word(std::uint32_t n) : n_(n) {
  if (n < 2)
    throw DomainError("alphabet size must be at least 2");
}

Word::Word(std::uint32_t n, std::vector<Letter> letters)
    : Word(n) {
  for (Letter l : letters) {
    if (l < 1 || l > n)
      throw DomainError("letter " + std::to_string(l) + " outside [1, " +
                        std::to_string(n) + "]");
  }
  letters_ = std::move(letters);
}

Word Word::slice(std::size_t pos, std::size_t count) const {
  Word w(n_);
  pos = std::min(pos, letters_.size());
  count = std::min(count, letters_.size() - pos);
  w.letters_.assign(letters_.begin() + pos, letters_.begin() + pos + count);
  return w;
}

std::string Word::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(letters_[i]);
  }
  return s + "]";
}

std::strong_ordering operator<=>(const Word &a, const Word &b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0)
    return c;
  return a.letters_ <=> b.letters_;
}

Word concat(const Word &a, const Word &b) {
  check_alphabet(a, b);
  std::vector<Letter> out(a.letters().begin(), a.letters().end());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(a.alphabet(), std::move(out));
}

Word rev(const Word &w) {
  return Word(w.alphabet(),
              std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
}

WordRelation compare(const Word &i, const Word &j) {
  check_alphabet(i, j);
  using Kind = WordRelation::Kind;
  std::size_t common = std::min(i.size(), j.size());
  if (!std::equal(i.letters().begin(), i.letters().begin() + common,
                  j.letters().begin()))
    return {Kind::Incomparable, Word(i.alphabet())};
  if (i.size() == j.size())
    return {Kind::Equal, Word(i.alphabet())};
  if (i.size() < j.size())
    return {Kind::IPrefixOfJ, j.slice(common)};
  return {Kind::JPrefixOfI, i.slice(common)};
}

std::size_t WordHash::operator()(const Word &w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ w.size();
  for (Letter l : w.letters()) {
    h ^= l;
    h *= 0x100000001b3ull;
  }
  return h;
}

} // namespace leavitt
