#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gsslab {

/// Binary polynomial as a coefficient mask: bit i is the coefficient of x^i.
using PolyMask = std::uint64_t;

inline constexpr int kMinDegree = 2;
inline constexpr int kDefaultMaxDegree = 24;
/// Above this the power/log tables stop being desk-scale.
inline constexpr int kHardMaxDegree = 26;

/// Accepts "x^5+x^2+1" (terms in any order, "x" and "1" allowed, spaces ignored)
/// or a hex mask "0x25". Throws ParseError.
PolyMask parse_polynomial(std::string_view text);
std::string format_polynomial(PolyMask mask);
std::string format_hex(PolyMask mask);
int poly_degree(PolyMask mask) noexcept;

class PrimitivePolynomial;

/// Throws DegreeOutOfRange, NotIrreducible (naming a factor) or NotPrimitive
/// (naming the prime r with x^((2^L-1)/r) = 1).
PrimitivePolynomial validate_primitive(PolyMask poly, int max_degree = kDefaultMaxDegree);

/// Degree-L polynomial with p_0 = p_L = 1 whose root generates GF(2^L)^*.
class PrimitivePolynomial {
 public:
  PolyMask mask() const noexcept { return mask_; }
  int degree() const noexcept { return degree_; }
  /// 2^L - 1, the m-sequence period.
  std::uint32_t period() const noexcept { return (std::uint32_t{1} << degree_) - 1; }
  bool coefficient(int i) const noexcept { return (mask_ >> i) & 1u; }

  std::string to_string() const { return format_polynomial(mask_); }
  std::string to_hex() const { return format_hex(mask_); }

  bool operator==(const PrimitivePolynomial&) const = default;

 private:
  friend PrimitivePolynomial validate_primitive(PolyMask, int);
  PrimitivePolynomial(PolyMask mask, int degree) : mask_(mask), degree_(degree) {}

  PolyMask mask_ = 0;
  int degree_ = 0;
};

PrimitivePolynomial validate_primitive(std::string_view text, int max_degree = kDefaultMaxDegree);

/// Every primitive polynomial of the given degree, ascending by mask.
std::vector<PrimitivePolynomial> enumerate_primitive(int degree);

/// Distinct prime divisors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Element of GF(2^L): bit i is the coordinate on alpha^i. Tagged with the
/// modulus so mixing fields is caught.
struct FieldElement {
  std::uint32_t coords = 0;
  PolyMask modulus = 0;

  bool is_zero() const noexcept { return coords == 0; }
  bool coordinate(int i) const noexcept { return (coords >> i) & 1u; }
  bool operator==(const FieldElement&) const = default;
};

/// GF(2^L) built from a primitive polynomial, with full power and log tables.
/// Immutable after construction.
class Field {
 public:
  explicit Field(const PrimitivePolynomial& poly);

  const PrimitivePolynomial& polynomial() const noexcept { return poly_; }
  int degree() const noexcept { return poly_.degree(); }
  std::uint32_t order() const noexcept { return poly_.period(); }

  FieldElement zero() const noexcept { return {0, poly_.mask()}; }
  FieldElement one() const noexcept { return {1, poly_.mask()}; }
  /// Throws InvalidArgument if coords has bits at or above L.
  FieldElement element(std::uint32_t coords) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  /// alpha^n with n reduced mod 2^L - 1 (negative n allowed).
  FieldElement alpha_power(std::int64_t n) const noexcept;
  /// The unique n in [0, 2^L - 2] with alpha^n = a. Throws ZeroLog.
  std::uint32_t dlog(const FieldElement& a) const;

  /// Shift-and-reduce product, independent of the tables.
  FieldElement mul_direct(const FieldElement& a, const FieldElement& b) const;

 private:
  void check(const FieldElement& a) const;

  PrimitivePolynomial poly_;
  std::vector<std::uint32_t> power_;  // power_[n] = alpha^n
  std::vector<std::uint32_t> log_;    // log_[element], log_[0] unused
};

}  // namespace gsslab
