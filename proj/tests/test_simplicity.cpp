#include <doctest.h>

#include "leavitt/error.hpp"
#include "leavitt/simplicity.hpp"

using namespace leavitt;

TEST_CASE("is_simple examples") {
  auto v = is_simple(FieldSpec(2), 3, 1);
  CHECK(v.simple);
  CHECK(v.reason == SimplicityReason::CharDividesN1AndNotD);

  v = is_simple(FieldSpec(3), 3, 1);
  CHECK_FALSE(v.simple);
  CHECK(v.reason == SimplicityReason::CharNotDividesN1);

  v = is_simple(FieldSpec(2), 3, 2);
  CHECK_FALSE(v.simple);
  CHECK(v.reason == SimplicityReason::CharDividesD);

  for (std::uint32_t n = 2; n <= 9; ++n)
    for (std::size_t d = 1; d <= 4; ++d)
      CHECK_FALSE(is_simple(FieldSpec(0), n, d).simple);

  CHECK_THROWS_AS(is_simple(FieldSpec(2), 1, 1), DomainError);
  CHECK_THROWS_AS(is_simple(FieldSpec(2), 3, 0), DomainError);
}

TEST_CASE("case-1 witness over GF(5), n = 3") {
  FieldSpec f5(5);
  BracketWitness w = build_witness(f5, 3, 1);
  CHECK(w.kind == WitnessCase::InvertibleNMinus1);
  REQUIRE(w.pairs.size() == 3);
  for (Letter i = 1; i <= 3; ++i) {
    const auto &[a, b] = w.pairs[i - 1];
    CHECK(a.at(0, 0) ==
          Scalar::from_int(3, f5) * LeavittElement::generator(f5, 3, true, i));
    CHECK(b.at(0, 0) == LeavittElement::generator(f5, 3, false, i));
  }
  CHECK(verify_witness(w));
}

TEST_CASE("case-2 witness over GF(2), n = 3, d = 2") {
  FieldSpec f2(2);
  BracketWitness w = build_witness(f2, 3, 2);
  CHECK(w.kind == WitnessCase::CharDividesD);
  REQUIRE(w.pairs.size() == 1);
  auto one = LeavittElement::one(f2, 3);
  CHECK(w.pairs[0].first == LeavittMatrix::unit(one, 1, 2, 2));
  CHECK(w.pairs[0].second == LeavittMatrix::unit(one, 2, 1, 2));
  CHECK(bracket_sum(w) ==
        LeavittMatrix::unit(one, 1, 1, 2) - LeavittMatrix::unit(one, 2, 2, 2));
  CHECK(verify_witness(w));
}

TEST_CASE("no witness for simple configurations") {
  CHECK_THROWS_AS(build_witness(FieldSpec(2), 3, 1), DomainError);
  CHECK_THROWS_AS(build_witness(FieldSpec(3), 7, 4), DomainError);
}

TEST_CASE("case 1 is preferred when both cases apply") {
  // 3 does not divide 4 and 3 divides 3.
  BracketWitness w = build_witness(FieldSpec(3), 5, 3);
  CHECK(w.kind == WitnessCase::InvertibleNMinus1);
  CHECK(w.pairs.size() == 15);
  CHECK(verify_witness(w));
}

TEST_CASE("verify_witness rejects bad witnesses") {
  FieldSpec f5(5);
  BracketWitness w = build_witness(f5, 3, 2);
  BracketWitness empty{f5, 3, 2, w.kind, {}};
  CHECK_FALSE(verify_witness(empty));
  BracketWitness dropped = w;
  dropped.pairs.pop_back();
  CHECK_FALSE(verify_witness(dropped));
  BracketWitness swapped = w;
  std::swap(swapped.pairs[0].first, swapped.pairs[0].second);
  CHECK_FALSE(verify_witness(swapped));

  BracketWitness mixed = w;
  mixed.pairs.emplace_back(LeavittMatrix(3, f5, 3), LeavittMatrix(3, f5, 3));
  CHECK_THROWS_AS(verify_witness(mixed), MismatchError);
  BracketWitness other_field = w;
  other_field.pairs.emplace_back(LeavittMatrix(2, FieldSpec(7), 3),
                                 LeavittMatrix(2, FieldSpec(7), 3));
  CHECK_THROWS_AS(verify_witness(other_field), MismatchError);
}

TEST_CASE("case-1 witness at d = 1 is the scaled generator sum") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    FieldSpec q(0);
    BracketWitness w = build_witness(q, n, 1);
    LeavittElement sum(q, n);
    for (Letter i = 1; i <= n; ++i)
      sum += leavitt_bracket(LeavittElement::generator(q, n, true, i),
                             LeavittElement::generator(q, n, false, i));
    CHECK(sum == LeavittElement::from_int(n - 1, q, n));
    CHECK(bracket_sum(w).at(0, 0) == LeavittElement::one(q, n));
  }
}

TEST_CASE("nontriviality_probe") {
  CHECK(nontriviality_probe(FieldSpec(2), 2, 1));
  CHECK(nontriviality_probe(FieldSpec(7), 5, 3));
  CHECK(nontriviality_probe(FieldSpec(0), 2, 2));
  CHECK_THROWS_AS(nontriviality_probe(FieldSpec(0), 2, 0), DomainError);
}
