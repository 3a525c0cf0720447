#include "leavitt/coeffs.hpp"

#include <cctype>
#include <ostream>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1)
      r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class &m, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), m.get_mpz_t(), p);
  return r.get_ui();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+')
    digits.erase(0, 1);
  mpz_class z;
  if (digits.empty() || z.set_str(digits, 10) != 0)
    throw ParseError("invalid scalar '" + std::string(whole) + "'", 0);
  return z;
}

} // namespace

// Deterministic Miller-Rabin; these bases cover all 64-bit inputs.
bool is_prime(std::uint64_t m) {
  if (m < 2)
    return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (m % q == 0)
      return m == q;
  }
  std::uint64_t d = m - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, m);
    if (x == 1 || x == m - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic) : p_(characteristic) {
  if (p_ != 0 && !is_prime(p_))
    throw DomainError("characteristic must be 0 or a prime, got " +
                      std::to_string(p_));
}

std::string FieldSpec::name() const {
  return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(FieldSpec spec) : spec_(spec) {
  if (spec_.is_rational())
    value_ = mpq_class(0);
  else
    value_ = std::uint64_t{0};
}

Scalar Scalar::from_int(std::int64_t m, FieldSpec spec) {
  return from_int(mpz_class(static_cast<long>(m)), spec);
}

Scalar Scalar::from_int(const mpz_class &m, FieldSpec spec) {
  Scalar s(spec);
  if (spec.is_rational())
    s.value_ = mpq_class(m);
  else
    s.value_ = reduce(m, spec.characteristic());
  return s;
}

Scalar Scalar::from_fraction(const mpz_class &num, const mpz_class &den,
                             FieldSpec spec) {
  return from_int(num, spec) / from_int(den, spec);
}

Scalar Scalar::parse(std::string_view text, FieldSpec spec) {
  std::string_view s = trim(text);
  if (auto pos = s.find("mod"); pos != std::string_view::npos) {
    mpz_class p = parse_integer(s.substr(pos + 3), text);
    if (p != static_cast<unsigned long>(spec.characteristic()) ||
        spec.is_rational())
      throw MismatchError("scalar '" + std::string(text) +
                          "' does not belong to " + spec.name());
    s = trim(s.substr(0, pos));
  }
  if (auto slash = s.find('/'); slash != std::string_view::npos)
    return from_fraction(parse_integer(s.substr(0, slash), text),
                         parse_integer(s.substr(slash + 1), text), spec);
  return from_int(parse_integer(s, text), spec);
}

bool Scalar::is_zero() const noexcept {
  if (auto *q = std::get_if<mpq_class>(&value_))
    return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto *q = std::get_if<mpq_class>(&value_))
    return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class &Scalar::rational() const {
  if (auto *q = std::get_if<mpq_class>(&value_))
    return *q;
  throw DomainError("scalar over " + spec_.name() + " is not rational");
}

std::uint64_t Scalar::residue() const {
  if (auto *r = std::get_if<std::uint64_t>(&value_))
    return *r;
  throw DomainError("rational scalar has no residue");
}

bool Scalar::is_negative() const noexcept {
  if (auto *q = std::get_if<mpq_class>(&value_))
    return sgn(*q) < 0;
  return false;
}

void Scalar::check_same(const Scalar &b) const {
  if (spec_ != b.spec_)
    throw MismatchError("field mismatch: " + spec_.name() + " vs " +
                        b.spec_.name());
}

Scalar Scalar::operator-() const {
  Scalar r(spec_);
  if (auto *q = std::get_if<mpq_class>(&value_)) {
    r.value_ = mpq_class(-*q);
  } else {
    std::uint64_t v = std::get<std::uint64_t>(value_);
    r.value_ = v == 0 ? 0 : spec_.characteristic() - v;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw DomainError("division by zero");
  Scalar r(spec_);
  if (auto *q = std::get_if<mpq_class>(&value_)) {
    r.value_ = mpq_class(1 / *q);
  } else {
    std::uint64_t p = spec_.characteristic();
    r.value_ = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
  }
  return r;
}

Scalar &Scalar::operator+=(const Scalar &b) {
  check_same(b);
  if (auto *q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(b.value_);
  } else {
    std::uint64_t p = spec_.characteristic();
    auto &v = std::get<std::uint64_t>(value_);
    std::uint64_t w = std::get<std::uint64_t>(b.value_);
    v = v >= p - w ? v - (p - w) : v + w;
  }
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &b) { return *this += -b; }

Scalar &Scalar::operator*=(const Scalar &b) {
  check_same(b);
  if (auto *q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(b.value_);
  } else {
    auto &v = std::get<std::uint64_t>(value_);
    v = mul_mod(v, std::get<std::uint64_t>(b.value_), spec_.characteristic());
  }
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &b) {
  check_same(b);
  return *this *= b.inverse();
}

bool operator==(const Scalar &a, const Scalar &b) {
  return a.spec_ == b.spec_ && a.value_ == b.value_;
}

std::string Scalar::value_string() const {
  if (auto *q = std::get_if<mpq_class>(&value_))
    return q->get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

std::string Scalar::to_string() const {
  if (spec_.is_rational())
    return value_string();
  return value_string() + " mod " + std::to_string(spec_.characteristic());
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) {
  return os << s.to_string();
}

Scalar field_arith(const Scalar &a, const Scalar &b, FieldOp op) {
  switch (op) {
  case FieldOp::Add:
    return a + b;
  case FieldOp::Sub:
    return a - b;
  case FieldOp::Mul:
    return a * b;
  case FieldOp::Div:
    return a / b;
  }
  throw DomainError("unknown field operation");
}

bool char_divides(const FieldSpec &spec, std::int64_t m) {
  return Scalar::from_int(m, spec).is_zero();
}

} // namespace leavitt
