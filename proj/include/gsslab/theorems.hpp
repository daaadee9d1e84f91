#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsslab/gf2x.hpp"
#include "gsslab/gss.hpp"
#include "gsslab/sequences.hpp"

namespace gsslab {

/// m = dlog(alpha + 1); p = (2^L - 1) - m satisfies alpha^(p+1) = alpha^p + 1;
/// q = 2p mod (2^L - 1) satisfies alpha^q + alpha^(q+1) = alpha^p.
struct SpecialExponents {
  std::uint32_t m = 0;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  /// L - 1 <= p < 2^L - 2. Recorded only, never a failure.
  bool p_in_stated_range = false;
};

/// Computes p, q, m and re-checks both identities by field arithmetic.
/// Throws InvalidArgument if an identity fails (internal bug).
SpecialExponents find_special_exponents(const Field& field);

enum class VerdictStatus { Confirmed, Counterexample };

struct Witness {
  std::optional<GssIndex> index;
  std::optional<std::size_t> position;
  std::string details;
};

struct VerdictReport {
  std::string name;
  VerdictStatus status = VerdictStatus::Confirmed;
  std::optional<Witness> witness;
  std::string scope;               // "L=<L> poly=<hex>"
  bool vacuous = false;            // the checked range was empty
  std::vector<std::string> notes;  // slack values, bound records

  bool confirmed() const noexcept { return status == VerdictStatus::Confirmed; }
};

std::string_view to_string(VerdictStatus status);

/// Everything the verifiers need, built once per polynomial.
struct Workbench {
  explicit Workbench(const PrimitivePolynomial& poly);

  Field field;
  MSequence seq;
  GssFamily family;
  SpecialExponents exps;
};

/// T = 1 at {zero, 0}, T = 2 at {p, p+1}, T = 2^(L-1) elsewhere.
VerdictReport verify_period_classification(const GssFamily& family, const SpecialExponents& exps);
/// Shift p is 1010...10 and shift p+1 is 0101...01.
VerdictReport verify_alternating_members(const GssFamily& family, const SpecialExponents& exps);
/// Both parity subsequences balanced for every member with T > 2.
VerdictReport verify_parity_balance(const GssFamily& family);
/// a_n = 1 => v_n != v_{n+d}; a_n = 0 => v_n = v_{n+d}. Throws NoPartner.
VerdictReport verify_complement_slide(const Field& field, const MSequence& seq, std::uint32_t s);
/// verify_complement_slide over every shift that has a partner.
VerdictReport verify_complement_slide_all(const Field& field, const MSequence& seq);
/// No least period in {4, 8, ..., 2^(L-2)}; vacuous for L <= 3.
VerdictReport verify_no_intermediate_periods(const GssFamily& family);
/// XOR-closure, zero member, self-inverse members, balance of non-constant members.
VerdictReport verify_group_and_balance(const GssFamily& family);
/// Direct self-shrinking equals shift 2^(L-1); its period; the 2^floor(L/2) bound.
VerdictReport verify_self_shrinking(const Field& field, const MSequence& seq, const GssFamily& family,
                                    const SpecialExponents& exps);
/// 2^(L-2) < LC < 2^(L-1) for T = 2^(L-1) members; LC_ss < 2^(L-1) - (L-2).
VerdictReport verify_lc_bounds(const GssFamily& family);
/// Runs of shifts q+1 (all even) and q (only 1 and 2), complements, alternation, field identity.
VerdictReport verify_nonpseudorandom(const Field& field, const GssFamily& family, const SpecialExponents& exps);

/// Registered verifier names in run order.
const std::vector<std::string>& verifier_names();

/// Runs the named verifiers (in registry order). Throws InvalidArgument on an unknown name.
std::vector<VerdictReport> verify_selected(const Workbench& bench, const std::vector<std::string>& names);
std::vector<VerdictReport> verify_all(const PrimitivePolynomial& poly);

}  // namespace gsslab
