#include "gsslab/gf2x.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "gsslab/error.hpp"

namespace gsslab {
namespace {

PolyMask poly_mod(PolyMask a, PolyMask m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

// a * b mod m, with deg a, deg b < deg m.
PolyMask poly_mulmod(PolyMask a, PolyMask b, PolyMask m) {
  const int dm = poly_degree(m);
  const PolyMask top = PolyMask{1} << dm;
  PolyMask r = 0;
  for (int i = poly_degree(b); i >= 0; --i) {
    r <<= 1;
    if (r & top) r ^= m;
    if ((b >> i) & 1u) r ^= a;
  }
  return r;
}

PolyMask poly_powmod(PolyMask base, std::uint64_t e, PolyMask m) {
  PolyMask result = 1;
  for (; e != 0; e >>= 1) {
    if (e & 1u) result = poly_mulmod(result, base, m);
    base = poly_mulmod(base, base, m);
  }
  return result;
}

std::uint64_t parse_uint(std::string_view digits, int base, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value, base);
  if (digits.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::ParseError, "bad " + std::string(what) + " '" + std::string(digits) + "'");
  }
  return value;
}

}  // namespace

int poly_degree(PolyMask mask) noexcept { return mask == 0 ? -1 : 63 - std::countl_zero(mask); }

PolyMask parse_polynomial(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");

  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    const auto mask = parse_uint(std::string_view(s).substr(2), 16, "hex mask");
    if (mask == 0) throw Error(ErrorKind::ParseError, "zero polynomial");
    return mask;
  }

  PolyMask mask = 0;
  std::string_view rest = s;
  while (true) {
    const auto plus = rest.find('+');
    const auto term = rest.substr(0, plus);
    int exponent = 0;
    if (term == "1") {
      exponent = 0;
    } else if (term == "x") {
      exponent = 1;
    } else if (term.size() > 2 && term.substr(0, 2) == "x^") {
      const auto e = parse_uint(term.substr(2), 10, "exponent");
      if (e > 63) throw Error(ErrorKind::ParseError, "exponent " + std::to_string(e) + " exceeds 63");
      exponent = static_cast<int>(e);
    } else {
      throw Error(ErrorKind::ParseError, "bad term '" + std::string(term) + "' in '" + s + "'");
    }
    const PolyMask bit = PolyMask{1} << exponent;
    if (mask & bit) throw Error(ErrorKind::ParseError, "repeated term '" + std::string(term) + "'");
    mask |= bit;
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  return mask;
}

std::string format_polynomial(PolyMask mask) {
  if (mask == 0) return "0";
  std::string out;
  for (int i = poly_degree(mask); i >= 0; --i) {
    if (!((mask >> i) & 1u)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

std::string format_hex(PolyMask mask) {
  std::ostringstream os;
  os << "0x" << std::hex << mask;
  return os.str();
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimitivePolynomial validate_primitive(PolyMask poly, int max_degree) {
  const int degree = poly_degree(poly);
  const int cap = std::min(max_degree, kHardMaxDegree);
  if (degree < kMinDegree || degree > cap) {
    throw Error(ErrorKind::DegreeOutOfRange, format_polynomial(poly) + " has degree " + std::to_string(degree) +
                                                 ", supported range is " + std::to_string(kMinDegree) + ".." +
                                                 std::to_string(cap));
  }
  if (!(poly & 1u)) {
    throw Error(ErrorKind::NotIrreducible, format_polynomial(poly) + " has factor x (p_0 = 0)");
  }
  // Trial division by every polynomial of degree 1 .. L/2.
  for (int d = 1; d <= degree / 2; ++d) {
    for (PolyMask f = PolyMask{1} << d; f < (PolyMask{2} << d); ++f) {
      if (poly_mod(poly, f) == 0) {
        throw Error(ErrorKind::NotIrreducible, format_polynomial(poly) + " has factor " + format_polynomial(f));
      }
    }
  }
  const std::uint64_t order = (std::uint64_t{1} << degree) - 1;
  if (poly_powmod(0b10, order, poly) != 1) {
    throw Error(ErrorKind::NotPrimitive, format_polynomial(poly) + ": x^" + std::to_string(order) + " != 1");
  }
  for (auto r : prime_factors(order)) {
    if (poly_powmod(0b10, order / r, poly) == 1) {
      throw Error(ErrorKind::NotPrimitive, format_polynomial(poly) + ": x^" + std::to_string(order / r) +
                                               " = 1 (prime divisor " + std::to_string(r) + " of " +
                                               std::to_string(order) + ")");
    }
  }
  return PrimitivePolynomial(poly, degree);
}

PrimitivePolynomial validate_primitive(std::string_view text, int max_degree) {
  return validate_primitive(parse_polynomial(text), max_degree);
}

std::vector<PrimitivePolynomial> enumerate_primitive(int degree) {
  std::vector<PrimitivePolynomial> out;
  const PolyMask top = PolyMask{1} << degree;
  for (PolyMask middle = 0; middle < top / 2; ++middle) {
    const PolyMask mask = top | (middle << 1) | 1u;
    try {
      out.push_back(validate_primitive(mask, std::max(degree, kDefaultMaxDegree)));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegreeOutOfRange) throw;
    }
  }
  return out;
}

Field::Field(const PrimitivePolynomial& poly)
    : poly_(poly), power_(poly.period()), log_(std::size_t{1} << poly.degree(), 0) {
  const std::uint32_t top = std::uint32_t{1} << poly.degree();
  const auto reduce = static_cast<std::uint32_t>(poly.mask() ^ top);
  std::uint32_t x = 1;
  for (std::uint32_t n = 0; n < order(); ++n) {
    power_[n] = x;
    log_[x] = n;
    x <<= 1;
    if (x & top) x = (x ^ top) ^ reduce;
  }
}

void Field::check(const FieldElement& a) const {
  if (a.modulus != poly_.mask()) {
    throw Error(ErrorKind::FieldMismatch, "element of " + format_polynomial(a.modulus) + " used in field of " +
                                              poly_.to_string());
  }
}

FieldElement Field::element(std::uint32_t coords) const {
  if (coords >> degree()) {
    throw Error(ErrorKind::InvalidArgument,
                "coordinates " + format_hex(coords) + " exceed degree " + std::to_string(degree()));
  }
  return {coords, poly_.mask()};
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return {a.coords ^ b.coords, poly_.mask()};
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  if (a.is_zero() || b.is_zero()) return zero();
  const std::uint64_t e = std::uint64_t{log_[a.coords]} + log_[b.coords];
  return {power_[e % order()], poly_.mask()};
}

FieldElement Field::mul_direct(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return {static_cast<std::uint32_t>(poly_mulmod(a.coords, b.coords, poly_.mask())), poly_.mask()};
}

FieldElement Field::inv(const FieldElement& a) const {
  check(a);
  if (a.is_zero()) throw Error(ErrorKind::ZeroInverse, "0 has no multiplicative inverse");
  const std::uint32_t e = log_[a.coords];
  return {power_[e == 0 ? 0 : order() - e], poly_.mask()};
}

FieldElement Field::alpha_power(std::int64_t n) const noexcept {
  const auto mod = static_cast<std::int64_t>(order());
  auto r = n % mod;
  if (r < 0) r += mod;
  return {power_[static_cast<std::size_t>(r)], poly_.mask()};
}

std::uint32_t Field::dlog(const FieldElement& a) const {
  check(a);
  if (a.is_zero()) throw Error(ErrorKind::ZeroLog, "log of 0 is undefined");
  return log_[a.coords];
}

}  // namespace gsslab
