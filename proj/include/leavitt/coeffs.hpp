#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace leavitt {

/// The coefficient field: Q when characteristic is 0, otherwise F_p.
class FieldSpec {
public:
  /// Throws DomainError unless \p characteristic is 0 or a prime.
  explicit FieldSpec(std::uint64_t characteristic = 0);

  static FieldSpec rationals() { return FieldSpec(0); }

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  /// "QQ" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec &, const FieldSpec &) = default;

private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t m);

/// An element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p).
class Scalar {
public:
  /// Zero of \p spec.
  explicit Scalar(FieldSpec spec);

  static Scalar zero(FieldSpec spec) { return Scalar(spec); }
  static Scalar one(FieldSpec spec) { return from_int(1, spec); }

  /// Image of \p m under the ring map Z -> K.
  static Scalar from_int(std::int64_t m, FieldSpec spec);
  static Scalar from_int(const mpz_class &m, FieldSpec spec);
  /// Exact num/den in K. Throws DomainError if den maps to zero.
  static Scalar from_fraction(const mpz_class &num, const mpz_class &den,
                              FieldSpec spec);

  /// Parses "a/b", "a", "r mod p" or a bare residue. A "mod p" suffix
  /// must agree with \p spec.
  static Scalar parse(std::string_view text, FieldSpec spec);

  const FieldSpec &spec() const noexcept { return spec_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Only meaningful over Q.
  const mpq_class &rational() const;
  /// Only meaningful over F_p.
  std::uint64_t residue() const;

  /// True for rationals < 0; residues are never negative.
  bool is_negative() const noexcept;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar &operator+=(const Scalar &b);
  Scalar &operator-=(const Scalar &b);
  Scalar &operator*=(const Scalar &b);
  Scalar &operator/=(const Scalar &b);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  friend bool operator==(const Scalar &a, const Scalar &b);

  /// The bare value: "a/b" or "a" over Q, the residue over F_p.
  std::string value_string() const;
  /// value_string() plus " mod p" over F_p.
  std::string to_string() const;

private:
  void check_same(const Scalar &b) const;

  FieldSpec spec_;
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

enum class FieldOp { Add, Sub, Mul, Div };

/// Dispatching form of the four field operations.
Scalar field_arith(const Scalar &a, const Scalar &b, FieldOp op);

/// True iff m * 1_K == 0: m == 0 over Q, p | m over F_p.
bool char_divides(const FieldSpec &spec, std::int64_t m);

} // namespace leavitt
