#include "leavitt/cohn.hpp"

#include <algorithm>

#include "leavitt/error.hpp"

namespace leavitt {

Monomial::Monomial(Word x, Word y) : xs(std::move(x)), ys(std::move(y)) {
  if (xs.alphabet() != ys.alphabet())
    throw MismatchError("monomial words use different alphabets");
}

std::string Monomial::to_string() const {
  if (is_unit())
    return "1";
  std::string s;
  if (!xs.empty())
    s = "x" + xs.to_string();
  if (!ys.empty())
    s += (s.empty() ? "y" : "*y") + ys.to_string();
  return s;
}

bool canonical_less(const Monomial &a, const Monomial &b) {
  if (a.degree() != b.degree())
    return a.degree() < b.degree();
  if (auto c = a.xs <=> b.xs; c != 0)
    return c < 0;
  return a.ys < b.ys;
}

std::size_t MonomialHash::operator()(const Monomial &m) const noexcept {
  WordHash h;
  return h(m.xs) * 0x9e3779b97f4a7c15ull ^ h(m.ys);
}

// (x_I y_J)(x_K y_L) depends only on how rev(J) sits against K in the
// prefix order.
std::optional<Monomial> multiply(const Monomial &a, const Monomial &b) {
  if (a.alphabet() != b.alphabet())
    throw MismatchError("monomials over different alphabets");
  WordRelation rel = compare(rev(a.ys), b.xs);
  switch (rel.kind) {
  case WordRelation::Kind::Incomparable:
    return std::nullopt;
  case WordRelation::Kind::Equal:
  case WordRelation::Kind::IPrefixOfJ:
    // K = rev(J) M
    return Monomial(concat(a.xs, rel.remainder), b.ys);
  case WordRelation::Kind::JPrefixOfI:
    // rev(J) = K N
    return Monomial(a.xs, concat(rev(rel.remainder), b.ys));
  }
  return std::nullopt;
}

CohnElement::CohnElement(FieldSpec spec, std::uint32_t n)
    : spec_(spec), n_(n) {
  if (n < 2)
    throw DomainError("alphabet size must be at least 2");
}

CohnElement CohnElement::one(FieldSpec spec, std::uint32_t n) {
  return from_int(1, spec, n);
}

CohnElement CohnElement::scalar(const Scalar &c, std::uint32_t n) {
  return term(c, Monomial::unit(n));
}

CohnElement CohnElement::from_int(std::int64_t m, FieldSpec spec,
                                  std::uint32_t n) {
  return scalar(Scalar::from_int(m, spec), n);
}

CohnElement CohnElement::term(const Scalar &c, Monomial m) {
  CohnElement e(c.spec(), m.alphabet());
  e.add_term(m, c);
  return e;
}

CohnElement CohnElement::generator(FieldSpec spec, std::uint32_t n, bool is_y,
                                   Letter i) {
  if (i < 1 || i > n)
    throw DomainError("generator index " + std::to_string(i) +
                      " outside [1, " + std::to_string(n) + "]");
  Word w(n, {i});
  Monomial m = is_y ? Monomial(Word(n), w) : Monomial(w, Word(n));
  return term(Scalar::one(spec), std::move(m));
}

Scalar CohnElement::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(spec_) : it->second;
}

void CohnElement::add_term(const Monomial &m, const Scalar &c) {
  if (c.spec() != spec_)
    throw MismatchError("field mismatch: " + spec_.name() + " vs " +
                        c.spec().name());
  if (m.alphabet() != n_)
    throw MismatchError("monomial alphabet does not match algebra");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

std::vector<std::pair<Monomial, Scalar>> CohnElement::sorted_terms() const {
  std::vector<std::pair<Monomial, Scalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return canonical_less(a.first, b.first);
  });
  return out;
}

void CohnElement::check_compatible(const CohnElement &b) const {
  if (spec_ != b.spec_)
    throw MismatchError("field mismatch: " + spec_.name() + " vs " +
                        b.spec_.name());
  if (n_ != b.n_)
    throw MismatchError("alphabet mismatch: " + std::to_string(n_) + " vs " +
                        std::to_string(b.n_));
}

CohnElement CohnElement::operator-() const {
  CohnElement r = *this;
  for (auto &[m, c] : r.terms_)
    c = -c;
  return r;
}

CohnElement &CohnElement::operator+=(const CohnElement &b) {
  check_compatible(b);
  for (const auto &[m, c] : b.terms_)
    add_term(m, c);
  return *this;
}

CohnElement &CohnElement::operator-=(const CohnElement &b) {
  check_compatible(b);
  for (const auto &[m, c] : b.terms_)
    add_term(m, -c);
  return *this;
}

CohnElement &CohnElement::operator*=(const Scalar &s) {
  if (s.spec() != spec_)
    throw MismatchError("field mismatch: " + spec_.name() + " vs " +
                        s.spec().name());
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, c] : terms_)
    c *= s;
  return *this;
}

CohnElement operator*(const CohnElement &a, const CohnElement &b) {
  a.check_compatible(b);
  CohnElement r(a.spec_, a.n_);
  for (const auto &[ma, ca] : a.terms_) {
    for (const auto &[mb, cb] : b.terms_) {
      if (auto m = multiply(ma, mb))
        r.add_term(*m, ca * cb);
    }
  }
  return r;
}

bool operator==(const CohnElement &a, const CohnElement &b) {
  return a.spec_ == b.spec_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::string CohnElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::string s;
  bool first = true;
  for (const auto &[m, c] : sorted_terms()) {
    bool negative = c.is_negative();
    Scalar mag = negative ? -c : c;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (m.is_unit())
      s += mag.value_string();
    else if (mag.is_one())
      s += m.to_string();
    else
      s += mag.value_string() + "*" + m.to_string();
  }
  return s;
}

CohnElement cohn_add(const CohnElement &a, const CohnElement &b) {
  return a + b;
}

CohnElement cohn_scale(const Scalar &s, const CohnElement &a) { return s * a; }

CohnElement cohn_mul(const CohnElement &a, const CohnElement &b) {
  return a * b;
}

CohnElement bracket(const CohnElement &a, const CohnElement &b) {
  return a * b - b * a;
}

CohnElement power(const CohnElement &a, std::uint32_t e) {
  CohnElement r = CohnElement::one(a.spec(), a.alphabet());
  for (std::uint32_t k = 0; k < e; ++k)
    r = r * a;
  return r;
}

Scalar trace_T(const CohnElement &a) {
  Scalar t = Scalar::zero(a.spec());
  for (const auto &[m, c] : a.terms()) {
    if (m.xs == rev(m.ys))
      t += c;
  }
  return t;
}

CohnElement ideal_generator(std::uint32_t n, FieldSpec spec) {
  CohnElement g = CohnElement::one(spec, n);
  Scalar minus_one = -Scalar::one(spec);
  for (Letter i = 1; i <= n; ++i) {
    Word w(n, {i});
    g.add_term(Monomial(w, w), minus_one);
  }
  return g;
}

std::map<std::int64_t, CohnElement> degree_split(const CohnElement &a) {
  std::map<std::int64_t, CohnElement> parts;
  for (const auto &[m, c] : a.terms()) {
    auto it = parts.try_emplace(m.degree(), a.spec(), a.alphabet()).first;
    it->second.add_term(m, c);
  }
  return parts;
}

namespace {

Word random_word(std::uint32_t n, std::size_t max_len, std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Letter> letter(1, n);
  std::vector<Letter> letters(len(rng));
  for (auto &l : letters)
    l = letter(rng);
  return Word(n, std::move(letters));
}

// Never zero, so every drawn term survives unless two draws cancel.
Scalar random_coefficient(FieldSpec spec, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> num(1, 9), sign(0, 1);
  int v = sign(rng) ? num(rng) : -num(rng);
  if (!spec.is_rational()) {
    Scalar s = Scalar::from_int(v, spec);
    return s.is_zero() ? Scalar::one(spec) : s;
  }
  std::uniform_int_distribution<int> den(1, 4);
  return Scalar::from_fraction(v, den(rng), spec);
}

} // namespace

CohnElement random_element(std::uint32_t n, FieldSpec spec,
                           std::size_t max_word_len, std::size_t max_terms,
                           std::mt19937_64 &rng) {
  CohnElement e(spec, n);
  if (max_terms == 0)
    return e;
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  for (std::size_t k = count(rng); k > 0; --k) {
    Word x = random_word(n, max_word_len, rng);
    Word y = random_word(n, max_word_len, rng);
    e.add_term(Monomial(std::move(x), std::move(y)),
               random_coefficient(spec, rng));
  }
  return e;
}

CohnElement random_element(std::uint32_t n, FieldSpec spec,
                           std::size_t max_word_len, std::size_t max_terms,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_element(n, spec, max_word_len, max_terms, rng);
}

} // namespace leavitt
