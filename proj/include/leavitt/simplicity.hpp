#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "leavitt/matrix.hpp"

namespace leavitt {

/// Which side of the characterisation decided the verdict.
enum class SimplicityReason {
  CharDividesN1AndNotD, // simple
  CharNotDividesN1,     // not simple: (n-1) is invertible in K
  CharDividesD,         // not simple: d * 1_K = 0
};

std::string_view reason_name(SimplicityReason r);

struct SimplicityVerdict {
  bool simple;
  SimplicityReason reason;
  FieldSpec spec;
  std::uint32_t n;
  std::size_t d;
};

/// Whether [M_d(L_K(n))^-, M_d(L_K(n))^-] is a simple Lie algebra: exactly
/// when char(K) | n - 1 and char(K) does not divide d.
SimplicityVerdict is_simple(FieldSpec spec, std::uint32_t n, std::size_t d);

enum class WitnessCase {
  /// sum_{i,j} [(n-1)^{-1} y_i e_jj, x_i e_jj]
  InvertibleNMinus1,
  /// sum_j [j e_{j,j+1}, e_{j+1,j}]
  CharDividesD,
};

std::string_view case_name(WitnessCase c);

/// Pairs (A_i, A'_i) with sum_i [A_i, A'_i] claimed to equal I_d.
struct BracketWitness {
  FieldSpec spec;
  std::uint32_t n;
  std::size_t d;
  WitnessCase kind;
  std::vector<std::pair<LeavittMatrix, LeavittMatrix>> pairs;
};

/// Builds an identity witness for a non-simple configuration. Throws
/// DomainError when the Lie algebra is simple, since none can exist.
BracketWitness build_witness(FieldSpec spec, std::uint32_t n, std::size_t d);

/// sum_i [A_i, A'_i]. Throws MismatchError on pairs from another algebra.
LeavittMatrix bracket_sum(const BracketWitness &w);

/// Exact check of sum_i [A_i, A'_i] == I_d.
bool verify_witness(const BracketWitness &w);

/// [[x_1, x_2], [x_1, x_2^2]] in L_K(n).
LeavittElement commutator_probe_element(FieldSpec spec, std::uint32_t n);

/// Whether the probe element placed in entry (1,1) of M_d(L_K(n)) is nonzero.
bool nontriviality_probe(FieldSpec spec, std::uint32_t n, std::size_t d);

} // namespace leavitt
