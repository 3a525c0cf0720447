#include "leavitt/simplicity.hpp"

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

void check_shape(std::uint32_t n, std::size_t d) {
  if (n < 2)
    throw DomainError("n must be at least 2, got " + std::to_string(n));
  if (d < 1)
    throw DomainError("d must be at least 1");
}

} // namespace

std::string_view reason_name(SimplicityReason r) {
  switch (r) {
  case SimplicityReason::CharDividesN1AndNotD:
    return "CharDividesN1AndNotD";
  case SimplicityReason::CharNotDividesN1:
    return "CharNotDividesN1";
  case SimplicityReason::CharDividesD:
    return "CharDividesD";
  }
  return "";
}

std::string_view case_name(WitnessCase c) {
  switch (c) {
  case WitnessCase::InvertibleNMinus1:
    return "InvertibleNMinus1";
  case WitnessCase::CharDividesD:
    return "CharDividesD";
  }
  return "";
}

SimplicityVerdict is_simple(FieldSpec spec, std::uint32_t n, std::size_t d) {
  check_shape(n, d);
  SimplicityVerdict v{false, SimplicityReason::CharNotDividesN1, spec, n, d};
  if (!char_divides(spec, static_cast<std::int64_t>(n) - 1))
    return v;
  if (char_divides(spec, static_cast<std::int64_t>(d))) {
    v.reason = SimplicityReason::CharDividesD;
    return v;
  }
  v.simple = true;
  v.reason = SimplicityReason::CharDividesN1AndNotD;
  return v;
}

BracketWitness build_witness(FieldSpec spec, std::uint32_t n, std::size_t d) {
  SimplicityVerdict v = is_simple(spec, n, d);
  if (v.simple)
    throw DomainError("the Lie algebra is simple over " + spec.name() +
                      " for n = " + std::to_string(n) + ", d = " +
                      std::to_string(d) + "; no identity witness exists");

  BracketWitness w{spec, n, d, WitnessCase::InvertibleNMinus1, {}};
  if (v.reason == SimplicityReason::CharNotDividesN1) {
    // sum_i [y_i, x_i] = (n-1) * 1, so scaling by (n-1)^{-1} and placing a
    // copy on each diagonal slot sums to I_d.
    Scalar inv = Scalar::from_int(static_cast<std::int64_t>(n) - 1, spec).inverse();
    for (Letter i = 1; i <= n; ++i) {
      LeavittElement yi = inv * LeavittElement::generator(spec, n, true, i);
      LeavittElement xi = LeavittElement::generator(spec, n, false, i);
      for (std::size_t j = 1; j <= d; ++j)
        w.pairs.emplace_back(LeavittMatrix::unit(yi, j, j, d),
                             LeavittMatrix::unit(xi, j, j, d));
    }
    return w;
  }

  // [e_{j,j+1}, e_{j+1,j}] = e_jj - e_{j+1,j+1}; weighting by j telescopes
  // to I_d - d * e_dd, and d * 1_K = 0 here.
  if (d < 2)
    throw DomainError("matrix-unit witness needs d >= 2");
  w.kind = WitnessCase::CharDividesD;
  const LeavittElement one = LeavittElement::one(spec, n);
  for (std::size_t j = 1; j < d; ++j) {
    LeavittElement coeff = LeavittElement::from_int(static_cast<std::int64_t>(j), spec, n);
    w.pairs.emplace_back(LeavittMatrix::unit(coeff, j, j + 1, d),
                         LeavittMatrix::unit(one, j + 1, j, d));
  }
  return w;
}

LeavittMatrix bracket_sum(const BracketWitness &w) {
  LeavittMatrix sum(w.d, w.spec, w.n);
  for (const auto &[a, b] : w.pairs) {
    sum.check_compatible(a);
    sum.check_compatible(b);
    sum += mat_bracket(a, b);
  }
  return sum;
}

bool verify_witness(const BracketWitness &w) {
  return bracket_sum(w) == LeavittMatrix::identity(w.d, w.spec, w.n);
}

LeavittElement commutator_probe_element(FieldSpec spec, std::uint32_t n) {
  LeavittElement x1 = LeavittElement::generator(spec, n, false, 1);
  LeavittElement x2 = LeavittElement::generator(spec, n, false, 2);
  return leavitt_bracket(leavitt_bracket(x1, x2),
                         leavitt_bracket(x1, power(x2, 2)));
}

bool nontriviality_probe(FieldSpec spec, std::uint32_t n, std::size_t d) {
  check_shape(n, d);
  LeavittMatrix m =
      LeavittMatrix::unit(commutator_probe_element(spec, n), 1, 1, d);
  return !m.is_zero();
}

} // namespace leavitt
