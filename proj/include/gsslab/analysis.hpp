#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gsslab/bitvector.hpp"

namespace gsslab {

struct BalanceCounts {
  std::size_t ones = 0;
  std::size_t zeros = 0;

  bool balanced() const noexcept { return ones == zeros; }
  bool operator==(const BalanceCounts&) const = default;
};

struct ParityBalance {
  BalanceCounts even;
  BalanceCounts odd;

  bool operator==(const ParityBalance&) const = default;
};

struct RunCount {
  std::size_t blocks = 0;  // runs of 1's
  std::size_t gaps = 0;    // runs of 0's

  bool operator==(const RunCount&) const = default;
};

/// Run length -> counts, read cyclically.
using RunHistogram = std::map<std::size_t, RunCount>;

/// Smallest T dividing the length with bits[i] = bits[(i+T) mod len].
/// Throws InvalidArgument on empty input.
std::size_t least_period(const BitVector& bits);

/// Berlekamp-Massey over two copies of the first `period` bits: the degree of
/// the minimal polynomial of the periodic extension. All-zero gives 0.
std::size_t linear_complexity(const BitVector& bits, std::size_t period);
std::size_t linear_complexity(const BitVector& bits);

/// Berlekamp-Massey on a finite prefix; returns the shortest LFSR length.
std::size_t berlekamp_massey(const std::vector<std::uint8_t>& s);

BalanceCounts balance(const BitVector& bits);

/// Throws OddLength.
ParityBalance subsequence_balance(const BitVector& bits);

/// Cyclic run decomposition; nullopt for constant (or empty) input.
std::optional<RunHistogram> run_distribution(const BitVector& bits);

/// Sorted run lengths with their bit value dropped.
std::vector<std::size_t> run_lengths(const RunHistogram& histogram);

/// (agreements - disagreements) / length between x_i and y_{(i+shift) mod len}.
struct Correlation {
  std::int64_t numerator = 0;
  std::size_t length = 0;

  double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(length); }
  bool is_minus_one() const noexcept { return numerator == -static_cast<std::int64_t>(length); }
  bool is_plus_one() const noexcept { return numerator == static_cast<std::int64_t>(length); }
};

/// Throws LengthMismatch, or InvalidArgument on empty input.
Correlation periodic_correlation(const BitVector& x, const BitVector& y, std::size_t shift = 0);

struct SequenceReport {
  std::size_t length = 0;
  std::size_t least_period = 0;
  std::size_t linear_complexity = 0;
  BalanceCounts counts;
  std::optional<RunHistogram> runs;           // nullopt: constant
  std::optional<ParityBalance> parity;        // nullopt: odd length
};

SequenceReport analyze(const BitVector& bits);

}  // namespace gsslab
