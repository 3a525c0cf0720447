#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "leavitt/cohn.hpp"

namespace leavitt {

/// An element of L_K(n) = C_K(n)/M, held as its unique representative
/// with no x_n y_n junction in any monomial.
class LeavittElement {
public:
  /// The zero element of L_K(n).
  LeavittElement(FieldSpec spec, std::uint32_t n);
  /// The class of \p c; reduces to normal form.
  explicit LeavittElement(const CohnElement &c);

  static LeavittElement one(FieldSpec spec, std::uint32_t n);
  static LeavittElement from_int(std::int64_t m, FieldSpec spec,
                                 std::uint32_t n);
  static LeavittElement generator(FieldSpec spec, std::uint32_t n, bool is_y,
                                  Letter i);

  const CohnElement &rep() const noexcept { return rep_; }
  const FieldSpec &spec() const noexcept { return rep_.spec(); }
  std::uint32_t alphabet() const noexcept { return rep_.alphabet(); }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  LeavittElement operator-() const;
  LeavittElement &operator+=(const LeavittElement &b);
  LeavittElement &operator-=(const LeavittElement &b);
  LeavittElement &operator*=(const Scalar &s);

  friend LeavittElement operator+(LeavittElement a, const LeavittElement &b) {
    return a += b;
  }
  friend LeavittElement operator-(LeavittElement a, const LeavittElement &b) {
    return a -= b;
  }
  friend LeavittElement operator*(const Scalar &s, LeavittElement a) {
    return a *= s;
  }
  friend LeavittElement operator*(const LeavittElement &a,
                                  const LeavittElement &b);

  friend bool operator==(const LeavittElement &, const LeavittElement &) =
      default;

  std::string to_string() const { return rep_.to_string(); }

private:
  struct Normalized {};
  LeavittElement(CohnElement nf, Normalized) : rep_(std::move(nf)) {}

  CohnElement rep_;
};

/// True when x_I y_J has I ending in n and J starting with n.
bool has_junction(const Monomial &m);

/// One application of x_{I n} y_{n J} -> x_I y_J - sum_{i<n} x_{I i} y_{i J}
/// to a term with coefficient \p coeff. The change it makes to the element
/// is exactly coeff * x_I * (1 - sum_i x_i y_i) * y_J.
struct RewriteStep {
  Scalar coeff;
  Word left;
  Word right;
};

struct NormalFormTrace {
  CohnElement result;
  std::vector<RewriteStep> steps;
};

/// Reduces \p c and records every rewrite applied. With \p order set, the
/// pending junction to rewrite next is drawn at random from it.
NormalFormTrace normal_form_traced(const CohnElement &c,
                                   std::mt19937_64 *order = nullptr);

/// sum_k coeff_k * x_{left_k} * m0 * y_{right_k}, evaluated in C_K(n).
CohnElement expand_trace(const NormalFormTrace &trace, FieldSpec spec,
                         std::uint32_t n);

LeavittElement normal_form(const CohnElement &c);

LeavittElement leavitt_add(const LeavittElement &a, const LeavittElement &b);
LeavittElement leavitt_mul(const LeavittElement &a, const LeavittElement &b);
LeavittElement leavitt_bracket(const LeavittElement &a,
                               const LeavittElement &b);
LeavittElement power(const LeavittElement &a, std::uint32_t e);

/// Whether tau is defined on L_K(n), i.e. char(K) | n - 1.
bool tau_defined(const FieldSpec &spec, std::uint32_t n);

/// tau(c + M) = T(c). Throws DomainError unless char(K) | n - 1.
Scalar tau(const LeavittElement &a);

/// Rank test by incremental row reduction over the monomial support.
bool linearly_independent(std::span<const LeavittElement> elems);

/// Whether the classes of x_I, I in \p words, are linearly independent.
/// Throws DomainError on duplicate words.
bool independence_check(std::span<const Word> words, FieldSpec spec);

/// Whether [x_1, x_2^j], 1 <= j <= J, are linearly independent in L_K(n).
bool dim_probe(std::uint32_t J, std::uint32_t n, FieldSpec spec);

} // namespace leavitt
