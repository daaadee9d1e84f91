#include "gsslab/gss.hpp"

#include <bit>
#include <charconv>

#include "gsslab/error.hpp"

namespace gsslab {
namespace {

void check_shift(std::uint32_t s, std::uint32_t period) {
  if (s >= period) {
    throw Error(ErrorKind::ShiftOutOfRange,
                "shift " + std::to_string(s) + " not in [0, " + std::to_string(period - 1) + "]");
  }
}

std::uint32_t parse_shift(std::string_view digits, std::uint32_t period) {
  std::uint64_t value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::ParseError, "bad shift '" + std::string(digits) + "'");
  }
  if (value >= period) {
    throw Error(ErrorKind::ShiftOutOfRange,
                "shift " + std::to_string(value) + " not in [0, " + std::to_string(period - 1) + "]");
  }
  return static_cast<std::uint32_t>(value);
}

}  // namespace

std::string GssIndex::to_string() const { return is_zero() ? "zero" : std::to_string(s_); }

GssIndex shift_of_G(const Field& field, const BitVector& g) {
  if (g.size() != static_cast<std::size_t>(field.degree())) {
    throw Error(ErrorKind::LengthMismatch,
                "G has " + std::to_string(g.size()) + " entries, expected L = " + std::to_string(field.degree()));
  }
  std::uint32_t coords = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i]) coords |= std::uint32_t{1} << i;
  }
  if (coords == 0) return GssIndex::zero();
  return GssIndex::shift(field.dlog(field.element(coords)));
}

const GssSequence& GssFamily::at(GssIndex index) const {
  if (index.is_zero()) return members.at(0);
  check_shift(index.s(), period());
  return members.at(std::size_t{index.s()} + 1);
}

GssSequence gss_generate(const MSequence& seq, GssIndex index) {
  const std::size_t length = seq.one_positions.size();
  GssSequence out{index, BitVector(length)};
  if (index.is_zero()) return out;
  const std::uint32_t period = seq.period();
  const std::uint32_t s = index.s();
  check_shift(s, period);
  for (std::size_t k = 0; k < length; ++k) {
    const std::uint32_t n = seq.one_positions[k] + s;
    out.bits.set(k, seq.bits[n < period ? n : n - period]);
  }
  return out;
}

GssFamily gss_family(const MSequence& seq) {
  GssFamily family{seq.poly, {}};
  family.members.reserve(std::size_t{seq.period()} + 1);
  family.members.push_back(gss_generate(seq, GssIndex::zero()));
  for (std::uint32_t s = 0; s < seq.period(); ++s) family.members.push_back(gss_generate(seq, GssIndex::shift(s)));
  return family;
}

GssIndex self_shrinking_index(const PrimitivePolynomial& poly) {
  return GssIndex::shift(std::uint32_t{1} << (poly.degree() - 1));
}

BitVector self_shrink_direct(const BitVector& z) {
  const std::size_t period = z.size();
  if (period < 3 || !std::has_single_bit(period + 1)) {
    throw Error(ErrorKind::BadPeriodLength, "length " + std::to_string(period) + " is not 2^L - 1 with L >= 2");
  }
  BitVector out;
  for (std::size_t n = 0; n < period; ++n) {
    if (z[(2 * n) % period]) out.push_back(z[(2 * n + 1) % period]);
  }
  return out;
}

GssIndex complement_partner(const Field& field, GssIndex index) {
  if (index.is_zero() || index.s() == 0) {
    throw Error(ErrorKind::NoPartner, "index " + index.to_string() + " has no complement pair (alpha^s + 1 is 0 or 1)");
  }
  check_shift(index.s(), field.order());
  return GssIndex::shift(field.dlog(field.add(field.alpha_power(index.s()), field.one())));
}

std::uint32_t partner_offset(const Field& field, GssIndex index) {
  const auto partner = complement_partner(field, index);
  return (partner.s() + field.order() - index.s()) % field.order();
}

std::vector<TraceRow> gss_trace(const MSequence& seq, GssIndex index) {
  const std::uint32_t period = seq.period();
  if (!index.is_zero()) check_shift(index.s(), period);
  std::vector<TraceRow> rows;
  rows.reserve(period);
  std::uint32_t k = 0;
  for (std::uint32_t n = 0; n < period; ++n) {
    TraceRow row{n, seq.bits[n], 0, false, std::nullopt};
    if (!index.is_zero()) {
      row.source = (n + index.s()) % period;
      row.v = seq.bits[row.source];
    }
    if (row.a) row.output_position = k++;
    rows.push_back(row);
  }
  return rows;
}

GssIndex parse_index(const Field& field, std::string_view text) {
  if (text == "zero") return GssIndex::zero();
  if (text == "ss") return self_shrinking_index(field.polynomial());
  if (text.starts_with("G=")) return shift_of_G(field, BitVector::from_string(text.substr(2)));
  if (text.starts_with("s=")) text.remove_prefix(2);
  return GssIndex::shift(parse_shift(text, field.order()));
}

std::string export_family(const GssFamily& family) {
  std::string out = "poly=" + family.poly.to_hex() + " L=" + std::to_string(family.degree()) + "\n";
  for (const auto& m : family.members) {
    out += m.index.to_string();
    out += '\t';
    out += m.bits.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace gsslab
