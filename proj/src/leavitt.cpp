#include "leavitt/leavitt.hpp"

#include <algorithm>
#include <unordered_set>

#include "leavitt/error.hpp"

namespace leavitt {

bool has_junction(const Monomial &m) {
  std::uint32_t n = m.alphabet();
  return !m.xs.empty() && !m.ys.empty() && m.xs.back() == n &&
         m.ys.front() == n;
}

NormalFormTrace normal_form_traced(const CohnElement &c,
                                   std::mt19937_64 *order) {
  const std::uint32_t n = c.alphabet();
  NormalFormTrace out{c, {}};
  CohnElement &r = out.result;

  std::vector<Monomial> pending;
  for (const auto &[m, coeff] : c.terms()) {
    if (has_junction(m))
      pending.push_back(m);
  }
  if (order)
    std::sort(pending.begin(), pending.end(), canonical_less);

  while (!pending.empty()) {
    if (order) {
      std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
      std::swap(pending[pick(*order)], pending.back());
    }
    Monomial m = std::move(pending.back());
    pending.pop_back();
    Scalar k = r.coefficient(m);
    if (k.is_zero())
      continue;

    Word left = m.xs.slice(0, m.xs.size() - 1);
    Word right = m.ys.slice(1);
    r.add_term(m, -k);
    auto emit = [&](Monomial t, const Scalar &coeff) {
      bool fresh = r.coefficient(t).is_zero();
      r.add_term(t, coeff);
      if (fresh && has_junction(t))
        pending.push_back(std::move(t));
    };
    emit(Monomial(left, right), k);
    for (Letter i = 1; i < n; ++i) {
      Word li = concat(left, Word(n, {i}));
      Word ir = concat(Word(n, {i}), right);
      emit(Monomial(std::move(li), std::move(ir)), -k);
    }
    out.steps.push_back({k, std::move(left), std::move(right)});
  }
  return out;
}

CohnElement expand_trace(const NormalFormTrace &trace, FieldSpec spec,
                         std::uint32_t n) {
  CohnElement sum(spec, n);
  const CohnElement m0 = ideal_generator(n, spec);
  const Scalar one = Scalar::one(spec);
  for (const auto &step : trace.steps) {
    CohnElement a = CohnElement::term(step.coeff, Monomial(step.left, Word(n)));
    CohnElement b = CohnElement::term(one, Monomial(Word(n), step.right));
    sum += a * m0 * b;
  }
  return sum;
}

LeavittElement normal_form(const CohnElement &c) { return LeavittElement(c); }

LeavittElement::LeavittElement(FieldSpec spec, std::uint32_t n)
    : rep_(spec, n) {}

LeavittElement::LeavittElement(const CohnElement &c)
    : rep_(normal_form_traced(c).result) {}

LeavittElement LeavittElement::one(FieldSpec spec, std::uint32_t n) {
  return {CohnElement::one(spec, n), Normalized{}};
}

LeavittElement LeavittElement::from_int(std::int64_t m, FieldSpec spec,
                                        std::uint32_t n) {
  return {CohnElement::from_int(m, spec, n), Normalized{}};
}

LeavittElement LeavittElement::generator(FieldSpec spec, std::uint32_t n,
                                         bool is_y, Letter i) {
  return {CohnElement::generator(spec, n, is_y, i), Normalized{}};
}

LeavittElement LeavittElement::operator-() const { return {-rep_, Normalized{}}; }

// Sums and scalings of junction-free elements stay junction-free.
LeavittElement &LeavittElement::operator+=(const LeavittElement &b) {
  rep_ += b.rep_;
  return *this;
}

LeavittElement &LeavittElement::operator-=(const LeavittElement &b) {
  rep_ -= b.rep_;
  return *this;
}

LeavittElement &LeavittElement::operator*=(const Scalar &s) {
  rep_ *= s;
  return *this;
}

LeavittElement operator*(const LeavittElement &a, const LeavittElement &b) {
  return LeavittElement(a.rep_ * b.rep_);
}

LeavittElement leavitt_add(const LeavittElement &a, const LeavittElement &b) {
  return a + b;
}

LeavittElement leavitt_mul(const LeavittElement &a, const LeavittElement &b) {
  return a * b;
}

LeavittElement leavitt_bracket(const LeavittElement &a,
                               const LeavittElement &b) {
  return LeavittElement(bracket(a.rep(), b.rep()));
}

LeavittElement power(const LeavittElement &a, std::uint32_t e) {
  LeavittElement r = LeavittElement::one(a.spec(), a.alphabet());
  for (std::uint32_t k = 0; k < e; ++k)
    r = r * a;
  return r;
}

bool tau_defined(const FieldSpec &spec, std::uint32_t n) {
  return char_divides(spec, static_cast<std::int64_t>(n) - 1);
}

Scalar tau(const LeavittElement &a) {
  if (!tau_defined(a.spec(), a.alphabet()))
    throw DomainError("tau is undefined on L_K(" +
                      std::to_string(a.alphabet()) + ") over " +
                      a.spec().name() + ": char(K) does not divide n-1");
  return trace_T(a.rep());
}

bool linearly_independent(std::span<const LeavittElement> elems) {
  // Echelon rows, each normalised to coefficient 1 at its pivot and zero at
  // the pivots of every earlier row.
  std::vector<std::pair<Monomial, CohnElement>> rows;
  for (const auto &e : elems) {
    CohnElement v = e.rep();
    for (const auto &[pivot, row] : rows) {
      Scalar k = v.coefficient(pivot);
      if (!k.is_zero())
        v -= k * row;
    }
    if (v.is_zero())
      return false;
    auto terms = v.sorted_terms();
    const auto &[pivot, lead] = terms.front();
    v *= lead.inverse();
    rows.emplace_back(pivot, std::move(v));
  }
  return true;
}

bool independence_check(std::span<const Word> words, FieldSpec spec) {
  std::unordered_set<Word, WordHash> seen;
  std::vector<LeavittElement> elems;
  for (const auto &w : words) {
    if (!seen.insert(w).second)
      throw DomainError("duplicate word " + w.to_string());
    Monomial m(w, Word(w.alphabet()));
    elems.push_back(normal_form(CohnElement::term(Scalar::one(spec), m)));
  }
  return linearly_independent(elems);
}

bool dim_probe(std::uint32_t J, std::uint32_t n, FieldSpec spec) {
  if (J < 1)
    throw DomainError("dim_probe needs J >= 1");
  LeavittElement x1 = LeavittElement::generator(spec, n, false, 1);
  LeavittElement x2 = LeavittElement::generator(spec, n, false, 2);
  std::vector<LeavittElement> elems;
  LeavittElement x2j = LeavittElement::one(spec, n);
  for (std::uint32_t j = 1; j <= J; ++j) {
    x2j = x2j * x2;
    elems.push_back(leavitt_bracket(x1, x2j));
  }
  return linearly_independent(elems);
}

} // namespace leavitt
