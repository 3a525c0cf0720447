#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace leavitt {

using Letter = std::uint32_t;

/// An element of the free monoid on {1, ..., n}. The empty word is phi.
class Word {
public:
  /// phi over an alphabet of size \p n (n >= 2).
  explicit Word(std::uint32_t n);
  /// Throws DomainError if a letter falls outside [1, n].
  Word(std::uint32_t n, std::vector<Letter> letters);
  Word(std::uint32_t n, std::initializer_list<Letter> letters)
      : Word(n, std::vector<Letter>(letters)) {}

  std::uint32_t alphabet() const noexcept { return n_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  /// Letters [pos, pos + count).
  Word slice(std::size_t pos, std::size_t count = SIZE_MAX) const;

  /// "[1,2,3]", or "[]" for phi.
  std::string to_string() const;

  friend bool operator==(const Word &, const Word &) = default;

  /// Length first, then lexicographic.
  friend std::strong_ordering operator<=>(const Word &a, const Word &b);

private:
  std::uint32_t n_;
  std::vector<Letter> letters_;
};

Word concat(const Word &a, const Word &b);
Word rev(const Word &w);

/// Result of comparing two words in the prefix order.
struct WordRelation {
  enum class Kind { Equal, IPrefixOfJ, JPrefixOfI, Incomparable };
  Kind kind;
  /// The K with J = IK (or I = JK); phi when Equal or Incomparable.
  Word remainder;

  bool comparable() const noexcept { return kind != Kind::Incomparable; }
};

/// Classifies I against J in the prefix order.
WordRelation compare(const Word &i, const Word &j);

struct WordHash {
  std::size_t operator()(const Word &w) const noexcept;
};

} // namespace leavitt
