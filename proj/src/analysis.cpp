#include "gsslab/analysis.hpp"

#include <algorithm>
#include <bit>

#include "gsslab/error.hpp"

namespace gsslab {
namespace {

// 64 bits of v starting at bit `offset`; bits past the end read as 0.
std::uint64_t window64(std::span<const std::uint64_t> words, std::size_t offset) {
  const std::size_t w = offset >> 6;
  const unsigned r = offset & 63;
  if (w >= words.size()) return 0;
  std::uint64_t lo = words[w] >> r;
  if (r != 0 && w + 1 < words.size()) lo |= words[w + 1] << (64 - r);
  return lo;
}

// dst ^= src << shift, truncated to dst's word count.
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, std::size_t shift) {
  const std::size_t ws = shift >> 6;
  const unsigned r = shift & 63;
  for (std::size_t i = 0; i + ws < dst.size() && i < src.size(); ++i) {
    dst[i + ws] ^= src[i] << r;
    if (r != 0 && i + ws + 1 < dst.size()) dst[i + ws + 1] ^= src[i] >> (64 - r);
  }
}

// Berlekamp-Massey with the connection polynomials packed 64 coefficients
// per word. The discrepancy at step i is parity(C & reversed-s window).
std::size_t berlekamp_massey_packed(const BitVector& s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  BitVector reversed(n);
  for (std::size_t k = 0; k < n; ++k) reversed.set(k, s[n - 1 - k]);
  const auto rev = reversed.words();

  const std::size_t words = (n + 1 + 63) / 64;
  std::vector<std::uint64_t> c(words, 0), b(words, 0), t;
  c[0] = b[0] = 1;
  std::size_t lfsr = 0;
  std::size_t m = 0;  // step index of the last length change, plus one
  bool have_m = false;
  for (std::size_t i = 0; i < n; ++i) {
    // d = sum_{j=0..lfsr} c_j s_{i-j} = sum_j c_j rev_{(n-1-i)+j}
    const std::size_t base = n - 1 - i;
    std::uint64_t acc = 0;
    const std::size_t used = lfsr / 64 + 1;
    for (std::size_t w = 0; w < used && w < words; ++w) acc ^= c[w] & window64(rev, base + 64 * w);
    if (!(std::popcount(acc) & 1)) continue;
    const std::size_t shift = have_m ? i - m : i + 1;
    if (2 * lfsr <= i) {
      t = c;
      xor_shifted(c, b, shift);
      lfsr = i + 1 - lfsr;
      b = std::move(t);
      m = i;
      have_m = true;
    } else {
      xor_shifted(c, b, shift);
    }
  }
  return lfsr;
}

}  // namespace

std::size_t least_period(const BitVector& bits) {
  const std::size_t n = bits.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "least period of an empty sequence");
  for (std::size_t t = 1; t < n; ++t) {
    if (n % t != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i + t < n && ok; ++i) ok = bits[i] == bits[i + t];
    if (ok) return t;
  }
  return n;
}

std::size_t berlekamp_massey(const std::vector<std::uint8_t>& s) {
  BitVector packed(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) packed.set(i, s[i] != 0);
  return berlekamp_massey_packed(packed);
}

namespace {

// Games-Chan for period 2^k: linear in the period.
std::size_t games_chan_packed(const BitVector& bits, std::size_t period) {
  const auto src = bits.words();
  std::size_t n = period;
  std::size_t lc = 0;
  std::vector<std::uint64_t> a(src.begin(), src.begin() + static_cast<std::ptrdiff_t>((n + 63) / 64));
  while (n > 64) {
    const std::size_t hw = n / 128;
    std::uint64_t any = 0;
    for (std::size_t i = 0; i < hw; ++i) any |= a[i] ^ a[i + hw];
    if (any) {
      for (std::size_t i = 0; i < hw; ++i) a[i] ^= a[i + hw];
      lc += n / 2;
    }
    a.resize(hw);
    n /= 2;
  }
  std::uint64_t x = n == 64 ? a[0] : a[0] & ((std::uint64_t{1} << n) - 1);
  while (n > 1) {
    const std::size_t half = n / 2;
    const std::uint64_t mask = (std::uint64_t{1} << half) - 1;
    const std::uint64_t lo = x & mask;
    const std::uint64_t diff = lo ^ ((x >> half) & mask);
    if (diff) {
      lc += half;
      x = diff;
    } else {
      x = lo;
    }
    n = half;
  }
  return lc + (x & 1u);
}

}  // namespace

std::size_t linear_complexity(const BitVector& bits, std::size_t period) {
  if (period == 0 || period > bits.size()) {
    throw Error(ErrorKind::InvalidArgument, "period " + std::to_string(period) + " out of range");
  }
  if (std::has_single_bit(period)) return games_chan_packed(bits, period);
  BitVector twice(2 * period);
  for (std::size_t i = 0; i < period; ++i) {
    twice.set(i, bits[i]);
    twice.set(i + period, bits[i]);
  }
  return berlekamp_massey_packed(twice);
}

std::size_t linear_complexity(const BitVector& bits) { return linear_complexity(bits, least_period(bits)); }

BalanceCounts balance(const BitVector& bits) {
  const std::size_t ones = bits.count();
  return {ones, bits.size() - ones};
}

ParityBalance subsequence_balance(const BitVector& bits) {
  if (bits.size() % 2 != 0) {
    throw Error(ErrorKind::OddLength, "parity balance needs even length, got " + std::to_string(bits.size()));
  }
  ParityBalance out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    auto& side = (i % 2 == 0) ? out.even : out.odd;
    ++(bits[i] ? side.ones : side.zeros);
  }
  return out;
}

std::optional<RunHistogram> run_distribution(const BitVector& bits) {
  const std::size_t n = bits.size();
  std::size_t start = 0;
  while (start < n && bits[start] == bits[(start + n - 1) % n]) ++start;
  if (start == n) return std::nullopt;  // constant

  RunHistogram hist;
  std::size_t i = 0;
  while (i < n) {
    const bool value = bits[(start + i) % n];
    std::size_t j = i;
    while (j < n && bits[(start + j) % n] == value) ++j;
    auto& entry = hist[j - i];
    ++(value ? entry.blocks : entry.gaps);
    i = j;
  }
  return hist;
}

std::vector<std::size_t> run_lengths(const RunHistogram& histogram) {
  std::vector<std::size_t> out;
  for (const auto& [length, count] : histogram) out.insert(out.end(), count.blocks + count.gaps, length);
  return out;
}

Correlation periodic_correlation(const BitVector& x, const BitVector& y, std::size_t shift) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "correlation of lengths " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  const std::size_t n = x.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "correlation of empty sequences");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += x[i] == y[(i + shift) % n] ? 1 : -1;
  return {sum, n};
}

SequenceReport analyze(const BitVector& bits) {
  SequenceReport r;
  r.length = bits.size();
  r.least_period = least_period(bits);
  r.linear_complexity = linear_complexity(bits, r.least_period);
  r.counts = balance(bits);
  r.runs = run_distribution(bits);
  if (bits.size() % 2 == 0) r.parity = subsequence_balance(bits);
  return r;
}

}  // namespace gsslab
