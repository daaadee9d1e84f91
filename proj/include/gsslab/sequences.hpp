#pragma once

#include <cstdint>
#include <vector>

#include "gsslab/bitvector.hpp"
#include "gsslab/gf2x.hpp"

namespace gsslab {

/// One full period of the m-sequence generated by p(x) from the pinned
/// initial state (a_0, ..., a_{L-1}) = (0, ..., 0, 1).
struct MSequence {
  PrimitivePolynomial poly;
  BitVector bits;                            // length 2^L - 1
  std::vector<std::uint32_t> one_positions;  // ascending n with a_n = 1

  std::uint32_t period() const noexcept { return poly.period(); }
  bool operator[](std::size_t n) const noexcept { return bits[n]; }
};

/// Runs the recurrence a_{n+L} = sum_{i<L} p_i a_{n+i}.
MSequence generate_msequence(const PrimitivePolynomial& poly);

/// Tr(x) = x + x^2 + ... + x^(2^(L-1)).
bool trace(const Field& field, const FieldElement& x);

/// The A with Tr(A alpha^n) = a_n, from the L x L system over GF(2) given by
/// n = 0..L-1. Throws SingularSystem (cannot happen for a primitive p(x)).
FieldElement solve_trace_coefficient(const Field& field, const MSequence& seq);

/// v_n = a_{(n+s) mod (2^L-1)} for one period. Throws ShiftOutOfRange.
BitVector sliding_sequence(const MSequence& seq, std::uint32_t s);

/// ASCII export: one '0'/'1' line per sequence.
std::string export_sequences(const std::vector<BitVector>& sequences);

}  // namespace gsslab
