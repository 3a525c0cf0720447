#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "leavitt/coeffs.hpp"
#include "leavitt/words.hpp"

namespace leavitt {

/// The basis monomial x_I y_J of the Cohn algebra. (phi, phi) is the unit.
struct Monomial {
  Word xs;
  Word ys;

  /// Throws MismatchError when the words use different alphabets.
  Monomial(Word x, Word y);
  static Monomial unit(std::uint32_t n) { return {Word(n), Word(n)}; }

  std::uint32_t alphabet() const noexcept { return xs.alphabet(); }
  /// Z-grading: |I| - |J|.
  std::int64_t degree() const noexcept {
    return static_cast<std::int64_t>(xs.size()) -
           static_cast<std::int64_t>(ys.size());
  }
  bool is_unit() const noexcept { return xs.empty() && ys.empty(); }

  /// "x[1,2]*y[2,1]", "x[1]", "y[2]" or "1".
  std::string to_string() const;

  friend bool operator==(const Monomial &, const Monomial &) = default;
};

/// Canonical term order: degree, then xs and ys length-lexicographically.
bool canonical_less(const Monomial &a, const Monomial &b);

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const noexcept;
};

/// Product of two basis monomials; nullopt when it vanishes.
std::optional<Monomial> multiply(const Monomial &a, const Monomial &b);

/// A finite K-linear combination of basis monomials x_I y_J. Zero
/// coefficients are never stored, so equality is equality of term maps.
class CohnElement {
public:
  using TermMap = std::unordered_map<Monomial, Scalar, MonomialHash>;

  /// The zero element of C_K(n).
  CohnElement(FieldSpec spec, std::uint32_t n);

  static CohnElement one(FieldSpec spec, std::uint32_t n);
  static CohnElement scalar(const Scalar &c, std::uint32_t n);
  static CohnElement from_int(std::int64_t m, FieldSpec spec, std::uint32_t n);
  static CohnElement term(const Scalar &c, Monomial m);
  /// x_i (or y_i for \p is_y). Throws DomainError for i outside [1, n].
  static CohnElement generator(FieldSpec spec, std::uint32_t n, bool is_y,
                               Letter i);

  const FieldSpec &spec() const noexcept { return spec_; }
  std::uint32_t alphabet() const noexcept { return n_; }
  const TermMap &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of \p m, zero when absent.
  Scalar coefficient(const Monomial &m) const;
  /// Adds c*m in place, pruning a cancelled term.
  void add_term(const Monomial &m, const Scalar &c);

  /// Terms in canonical order.
  std::vector<std::pair<Monomial, Scalar>> sorted_terms() const;

  CohnElement operator-() const;
  CohnElement &operator+=(const CohnElement &b);
  CohnElement &operator-=(const CohnElement &b);
  CohnElement &operator*=(const Scalar &s);

  friend CohnElement operator+(CohnElement a, const CohnElement &b) {
    return a += b;
  }
  friend CohnElement operator-(CohnElement a, const CohnElement &b) {
    return a -= b;
  }
  friend CohnElement operator*(const Scalar &s, CohnElement a) {
    return a *= s;
  }
  friend CohnElement operator*(const CohnElement &a, const CohnElement &b);

  friend bool operator==(const CohnElement &a, const CohnElement &b);

  /// Canonical text, e.g. "x[1]*y[1] - 1"; "0" for zero.
  std::string to_string() const;

  /// Throws MismatchError unless \p b lives in the same algebra.
  void check_compatible(const CohnElement &b) const;

private:
  FieldSpec spec_;
  std::uint32_t n_;
  TermMap terms_;
};

CohnElement cohn_add(const CohnElement &a, const CohnElement &b);
CohnElement cohn_scale(const Scalar &s, const CohnElement &a);
CohnElement cohn_mul(const CohnElement &a, const CohnElement &b);

/// ab - ba.
CohnElement bracket(const CohnElement &a, const CohnElement &b);

/// a^e for e >= 0.
CohnElement power(const CohnElement &a, std::uint32_t e);

/// The trace T: sums the coefficients of x_I y_J with I = rev(J).
Scalar trace_T(const CohnElement &a);

/// 1 - sum_i x_i y_i, the generator of the ideal M.
CohnElement ideal_generator(std::uint32_t n, FieldSpec spec);

/// Homogeneous components keyed by degree; zero maps to an empty split.
std::map<std::int64_t, CohnElement> degree_split(const CohnElement &a);

/// Reproducible pseudo-random element: up to \p max_terms terms whose
/// words have length at most \p max_word_len.
CohnElement random_element(std::uint32_t n, FieldSpec spec,
                           std::size_t max_word_len, std::size_t max_terms,
                           std::uint64_t seed);
CohnElement random_element(std::uint32_t n, FieldSpec spec,
                           std::size_t max_word_len, std::size_t max_terms,
                           std::mt19937_64 &rng);

} // namespace leavitt
