#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsslab/bitvector.hpp"
#include "gsslab/gf2x.hpp"
#include "gsslab/sequences.hpp"

namespace gsslab {

/// Family index: the zero mapping 1 -> 0, or the shift mapping 1 -> alpha^s.
class GssIndex {
 public:
  enum class Kind { Zero, Shift };

  static constexpr GssIndex zero() noexcept { return GssIndex(Kind::Zero, 0); }
  static constexpr GssIndex shift(std::uint32_t s) noexcept { return GssIndex(Kind::Shift, s); }

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::Zero; }
  /// Meaningful only for Kind::Shift.
  std::uint32_t s() const noexcept { return s_; }

  /// "zero" or the decimal shift.
  std::string to_string() const;

  /// Zero sorts first, then shifts ascending.
  auto operator<=>(const GssIndex&) const = default;

 private:
  constexpr GssIndex(Kind kind, std::uint32_t s) noexcept : kind_(kind), s_(s) {}
  Kind kind_;
  std::uint32_t s_;
};

/// Maps G = (g_0, ..., g_{L-1}) to its index: zero for G = 0, otherwise the s
/// with sum g_i a_{n+i} = a_{n+s}. Throws LengthMismatch if |G| != L.
GssIndex shift_of_G(const Field& field, const BitVector& g);

struct GssSequence {
  GssIndex index;
  BitVector bits;  // length 2^(L-1)
};

/// All 2^L members: zero first, then shifts 0 .. 2^L - 2.
struct GssFamily {
  PrimitivePolynomial poly;
  std::vector<GssSequence> members;

  int degree() const noexcept { return poly.degree(); }
  std::uint32_t period() const noexcept { return poly.period(); }
  std::size_t sequence_length() const noexcept { return std::size_t{1} << (poly.degree() - 1); }

  /// Throws ShiftOutOfRange for shifts >= 2^L - 1.
  const GssSequence& at(GssIndex index) const;
};

/// Decimates the sliding sequence at the one-positions of {a_n}.
/// Throws ShiftOutOfRange.
GssSequence gss_generate(const MSequence& seq, GssIndex index);

GssFamily gss_family(const MSequence& seq);

/// Shift 2^(L-1).
GssIndex self_shrinking_index(const PrimitivePolynomial& poly);

/// Classic self-shrinking of one period z of length 2^L - 1: for n over a full
/// period, emit z_{2n+1} when z_{2n} = 1, indices mod the length.
/// Throws BadPeriodLength unless the length is 2^L - 1 with L >= 2.
BitVector self_shrink_direct(const BitVector& z);

/// Shift dlog(alpha^s + 1). Throws NoPartner for zero and shift 0.
GssIndex complement_partner(const Field& field, GssIndex index);

/// d = (partner - s) mod (2^L - 1). Throws NoPartner as above.
std::uint32_t partner_offset(const Field& field, GssIndex index);

/// Row of the generation trace: how v_n was obtained and whether it was kept.
struct TraceRow {
  std::uint32_t n;
  bool a;
  std::uint32_t source;  // v_n = a_source
  bool v;
  std::optional<std::uint32_t> output_position;  // k with b_k = v_n
};

std::vector<TraceRow> gss_trace(const MSequence& seq, GssIndex index);

/// "zero", "<s>", "s=<s>", "G=<bits>" or "ss". Throws ParseError /
/// ShiftOutOfRange / LengthMismatch.
GssIndex parse_index(const Field& field, std::string_view text);

/// Header "poly=<hex> L=<int>", then "<index>\t<bits>" per member.
std::string export_family(const GssFamily& family);

}  // namespace gsslab
