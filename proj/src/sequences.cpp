#include "gsslab/sequences.hpp"

#include <bit>
#include <utility>

#include "gsslab/error.hpp"

namespace gsslab {

MSequence generate_msequence(const PrimitivePolynomial& poly) {
  const int degree = poly.degree();
  const std::uint32_t period = poly.period();
  const auto taps = static_cast<std::uint32_t>(poly.mask() & ((PolyMask{1} << degree) - 1));

  MSequence seq{poly, BitVector(period), {}};
  seq.one_positions.reserve(std::size_t{1} << (degree - 1));
  // Window bit i holds a_{n+i}; the pinned start puts the single 1 at i = L-1.
  std::uint32_t window = std::uint32_t{1} << (degree - 1);
  for (std::uint32_t n = 0; n < period; ++n) {
    const bool bit = window & 1u;
    seq.bits.set(n, bit);
    if (bit) seq.one_positions.push_back(n);
    const bool next = std::popcount(window & taps) & 1;
    window = (window >> 1) | (static_cast<std::uint32_t>(next) << (degree - 1));
  }
  return seq;
}

bool trace(const Field& field, const FieldElement& x) {
  FieldElement sum = field.zero();
  FieldElement power = x;
  for (int i = 0; i < field.degree(); ++i) {
    sum = field.add(sum, power);
    power = field.mul(power, power);
  }
  if (sum.coords > 1) {
    throw Error(ErrorKind::InvalidArgument, "trace left GF(2): internal arithmetic error");
  }
  return sum.coords == 1;
}

FieldElement solve_trace_coefficient(const Field& field, const MSequence& seq) {
  const int L = field.degree();
  // Row n: sum_j A_j Tr(alpha^(n+j)) = a_n. Augmented column stored at bit L.
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(L));
  for (int n = 0; n < L; ++n) {
    std::uint64_t row = 0;
    for (int j = 0; j < L; ++j) {
      if (trace(field, field.alpha_power(n + j))) row |= std::uint64_t{1} << j;
    }
    if (seq[static_cast<std::size_t>(n)]) row |= std::uint64_t{1} << L;
    rows[static_cast<std::size_t>(n)] = row;
  }
  for (int col = 0; col < L; ++col) {
    auto pivot = static_cast<std::size_t>(col);
    while (pivot < rows.size() && !((rows[pivot] >> col) & 1u)) ++pivot;
    if (pivot == rows.size()) {
      throw Error(ErrorKind::SingularSystem, "trace system has no pivot in column " + std::to_string(col));
    }
    std::swap(rows[pivot], rows[static_cast<std::size_t>(col)]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != static_cast<std::size_t>(col) && ((rows[r] >> col) & 1u)) rows[r] ^= rows[static_cast<std::size_t>(col)];
    }
  }
  std::uint32_t coords = 0;
  for (int j = 0; j < L; ++j) {
    if ((rows[static_cast<std::size_t>(j)] >> L) & 1u) coords |= std::uint32_t{1} << j;
  }
  return field.element(coords);
}

BitVector sliding_sequence(const MSequence& seq, std::uint32_t s) {
  const std::uint32_t period = seq.period();
  if (s >= period) {
    throw Error(ErrorKind::ShiftOutOfRange,
                "shift " + std::to_string(s) + " not in [0, " + std::to_string(period - 1) + "]");
  }
  BitVector v(period);
  for (std::uint32_t n = 0; n < period; ++n) {
    const std::uint32_t src = n + s < period ? n + s : n + s - period;
    v.set(n, seq.bits[src]);
  }
  return v;
}

std::string export_sequences(const std::vector<BitVector>& sequences) {
  std::string out;
  for (const auto& s : sequences) {
    out += s.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace gsslab
