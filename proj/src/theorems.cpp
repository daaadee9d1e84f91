#include "gsslab/theorems.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <future>
#include <set>
#include <sstream>
#include <unordered_set>

#include "gsslab/analysis.hpp"
#include "gsslab/error.hpp"

namespace gsslab {
namespace {

std::string scope_of(const PrimitivePolynomial& poly) {
  return "L=" + std::to_string(poly.degree()) + " poly=" + poly.to_hex();
}

VerdictReport confirmed(std::string name, const PrimitivePolynomial& poly) {
  VerdictReport r;
  r.name = std::move(name);
  r.scope = scope_of(poly);
  return r;
}

void fail(VerdictReport& r, std::optional<GssIndex> index, std::optional<std::size_t> position, std::string details) {
  if (r.status == VerdictStatus::Counterexample) return;  // keep the first witness
  r.status = VerdictStatus::Counterexample;
  r.witness = Witness{index, position, std::move(details)};
}

std::string join(const std::set<std::size_t>& values) {
  std::string out = "{";
  for (auto v : values) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

BitVector alternating(std::size_t length, bool first) {
  BitVector v(length);
  for (std::size_t i = 0; i < length; ++i) v.set(i, (i % 2 == 0) == first);
  return v;
}

std::optional<std::size_t> first_difference(const BitVector& x, const BitVector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return i;
  }
  return std::nullopt;
}

// Row-echelon basis over GF(2), pivots at the lowest set bit.
class Gf2Basis {
 public:
  /// Returns true if v was independent and added.
  bool insert(BitVector v) {
    reduce(v);
    const auto pivot = lowest_bit(v);
    if (!pivot) return false;
    rows_.push_back({*pivot, std::move(v)});
    return true;
  }
  bool contains(BitVector v) const {
    reduce(v);
    return v.none();
  }
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    BitVector bits;
  };
  static std::optional<std::size_t> lowest_bit(const BitVector& v) {
    const auto words = v.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words[w]));
    }
    return std::nullopt;
  }
  void reduce(BitVector& v) const {
    for (const auto& row : rows_) {
      if (v[row.pivot]) v ^= row.bits;
    }
  }
  std::vector<Row> rows_;
};

}  // namespace

std::string_view to_string(VerdictStatus status) {
  return status == VerdictStatus::Confirmed ? "CONFIRMED" : "COUNTEREXAMPLE";
}

SpecialExponents find_special_exponents(const Field& field) {
  const std::uint32_t order = field.order();
  SpecialExponents e;
  e.m = field.dlog(field.add(field.alpha_power(1), field.one()));
  e.p = (order - e.m) % order;
  e.q = static_cast<std::uint32_t>((2 * std::uint64_t{e.p}) % order);
  const int L = field.degree();
  e.p_in_stated_range = e.p >= static_cast<std::uint32_t>(L - 1) && e.p < order - 1;

  const auto ap = field.alpha_power(e.p);
  if (field.alpha_power(std::int64_t{e.p} + 1) != field.add(ap, field.one())) {
    throw Error(ErrorKind::InvalidArgument, "alpha^(p+1) != alpha^p + 1 for p = " + std::to_string(e.p));
  }
  if (field.add(field.alpha_power(e.q), field.alpha_power(std::int64_t{e.q} + 1)) != ap) {
    throw Error(ErrorKind::InvalidArgument, "alpha^q + alpha^(q+1) != alpha^p for q = " + std::to_string(e.q));
  }
  return e;
}

Workbench::Workbench(const PrimitivePolynomial& poly)
    : field(poly), seq(generate_msequence(poly)), family(gss_family(seq)), exps(find_special_exponents(field)) {}

VerdictReport verify_period_classification(const GssFamily& family, const SpecialExponents& exps) {
  auto r = confirmed("periods", family.poly);
  const std::uint32_t order = family.period();
  const std::size_t full = family.sequence_length();
  const std::uint32_t p1 = (exps.p + 1) % order;
  std::set<std::size_t> seen;
  std::size_t n1 = 0, n2 = 0, nfull = 0;
  for (const auto& m : family.members) {
    const std::size_t t = least_period(m.bits);
    seen.insert(t);
    std::size_t expected = full;
    if (m.index.is_zero() || m.index.s() == 0) {
      expected = 1;
    } else if (m.index.s() == exps.p || m.index.s() == p1) {
      expected = 2;
    }
    if (t != expected) {
      fail(r, m.index, std::nullopt,
           "least period " + std::to_string(t) + ", expected " + std::to_string(expected));
    }
    if (t == full) {
      ++nfull;
    } else if (t == 1) {
      ++n1;
    } else if (t == 2) {
      ++n2;
    }
  }
  r.notes.push_back("periods=" + join(seen));
  r.notes.push_back("T=1:" + std::to_string(n1) + " T=2:" + std::to_string(n2) + " T=" + std::to_string(full) + ":" +
                    std::to_string(nfull));
  r.notes.push_back("p=" + std::to_string(exps.p));
  return r;
}

VerdictReport verify_alternating_members(const GssFamily& family, const SpecialExponents& exps) {
  auto r = confirmed("alternating", family.poly);
  const std::size_t length = family.sequence_length();
  const std::uint32_t order = family.period();
  const std::pair<GssIndex, BitVector> cases[] = {
      {GssIndex::shift(exps.p), alternating(length, true)},
      {GssIndex::shift((exps.p + 1) % order), alternating(length, false)},
  };
  for (const auto& [index, expected] : cases) {
    const auto& bits = family.at(index).bits;
    if (auto pos = first_difference(bits, expected)) {
      fail(r, index, pos, "got " + bits.to_string() + ", expected " + expected.to_string());
    }
  }
  r.notes.push_back("p=" + std::to_string(exps.p));
  return r;
}

VerdictReport verify_parity_balance(const GssFamily& family) {
  auto r = confirmed("parity-balance", family.poly);
  std::size_t checked = 0;
  for (const auto& m : family.members) {
    if (least_period(m.bits) <= 2) continue;
    ++checked;
    if (m.bits.size() % 2 != 0) {
      fail(r, m.index, std::nullopt, "odd length " + std::to_string(m.bits.size()));
      continue;
    }
    const auto pb = subsequence_balance(m.bits);
    if (!pb.even.balanced() || !pb.odd.balanced()) {
      fail(r, m.index, std::nullopt,
           "even " + std::to_string(pb.even.ones) + "/" + std::to_string(pb.even.zeros) + ", odd " +
               std::to_string(pb.odd.ones) + "/" + std::to_string(pb.odd.zeros) + " (ones/zeros)");
    }
  }
  if (checked == 0) r.vacuous = true;
  r.notes.push_back("members with T>2: " + std::to_string(checked));
  return r;
}

VerdictReport verify_complement_slide(const Field& field, const MSequence& seq, std::uint32_t s) {
  const std::uint32_t d = partner_offset(field, GssIndex::shift(s));
  auto r = confirmed("complement-slide", seq.poly);
  const auto v = sliding_sequence(seq, s);
  const std::uint32_t order = seq.period();
  for (std::uint32_t n = 0; n < order; ++n) {
    const bool same = v[n] == v[(n + d) % order];
    if (seq.bits[n] == same) {
      fail(r, GssIndex::shift(s), n,
           "d=" + std::to_string(d) + ": a_n=" + std::to_string(int{seq.bits[n]}) + " but v_n " +
               (same ? "==" : "!=") + " v_{n+d}");
      break;
    }
  }
  r.notes.push_back("s=" + std::to_string(s) + " d=" + std::to_string(d));
  return r;
}

VerdictReport verify_complement_slide_all(const Field& field, const MSequence& seq) {
  auto r = confirmed("complement-slide", seq.poly);
  const std::uint32_t order = seq.period();
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t s = 1; s < order; ++s) {
    const auto one = verify_complement_slide(field, seq, s);
    if (!one.confirmed()) {
      fail(r, one.witness->index, one.witness->position, one.witness->details);
    }
    const auto t = complement_partner(field, GssIndex::shift(s)).s();
    if (complement_partner(field, GssIndex::shift(t)).s() != s) {
      fail(r, GssIndex::shift(s), std::nullopt, "partner of partner " + std::to_string(t) + " is not " + std::to_string(s));
    }
    pairs.insert({std::min(s, t), std::max(s, t)});
  }
  const std::size_t expected_pairs = (std::size_t{1} << (field.degree() - 1)) - 1;
  if (pairs.size() != expected_pairs) {
    fail(r, std::nullopt, std::nullopt,
         std::to_string(pairs.size()) + " complement pairs, expected " + std::to_string(expected_pairs));
  }
  r.notes.push_back("shifts checked=" + std::to_string(order - 1) + " pairs=" + std::to_string(pairs.size()));
  return r;
}

VerdictReport verify_no_intermediate_periods(const GssFamily& family) {
  auto r = confirmed("no-intermediate-periods", family.poly);
  const int L = family.degree();
  if (L <= 3) {
    r.vacuous = true;
    r.notes.push_back("range 2^2..2^(L-2) is empty for L=" + std::to_string(L));
    return r;
  }
  const std::size_t high = std::size_t{1} << (L - 2);
  for (const auto& m : family.members) {
    const std::size_t t = least_period(m.bits);
    if (t >= 4 && t <= high && std::has_single_bit(t)) {
      fail(r, m.index, std::nullopt, "least period " + std::to_string(t) + " in {4.." + std::to_string(high) + "}");
    }
  }
  r.notes.push_back("excluded periods {4.." + std::to_string(high) + "}");
  return r;
}

VerdictReport verify_group_and_balance(const GssFamily& family) {
  auto r = confirmed("group", family.poly);
  const std::size_t length = family.sequence_length();

  std::unordered_set<BitVector, BitVectorHash> distinct;
  Gf2Basis basis;
  bool has_zero = false;
  std::size_t zeros_members = 0, ones_members = 0;
  for (const auto& m : family.members) {
    distinct.insert(m.bits);
    basis.insert(m.bits);
    if (m.bits.none()) {
      has_zero = true;
      ++zeros_members;
    } else if (m.bits.all()) {
      ++ones_members;
    } else if (const auto c = balance(m.bits); !c.balanced()) {
      fail(r, m.index, std::nullopt,
           "unbalanced: " + std::to_string(c.ones) + " ones, " + std::to_string(c.zeros) + " zeros");
    }
    if (!(m.bits ^ m.bits).none()) fail(r, m.index, std::nullopt, "member is not its own inverse");
  }
  if (!has_zero) fail(r, std::nullopt, std::nullopt, "no all-zero member");
  if (zeros_members != 1 || ones_members != 1) {
    fail(r, std::nullopt, std::nullopt,
         std::to_string(zeros_members) + " all-zero and " + std::to_string(ones_members) + " all-one members, expected 1 and 1");
  }

  // Closed under XOR iff the distinct members are exactly the span of a basis
  // drawn from them.
  const std::size_t rank = basis.rank();
  const bool spans = rank < 63 && distinct.size() == (std::size_t{1} << rank);
  if (!spans) {
    for (std::size_t i = 0; i < family.members.size() && r.confirmed(); ++i) {
      for (std::size_t j = i + 1; j < family.members.size(); ++j) {
        const auto x = family.members[i].bits ^ family.members[j].bits;
        if (!distinct.contains(x)) {
          fail(r, family.members[i].index, std::nullopt,
               "member " + family.members[i].index.to_string() + " xor member " + family.members[j].index.to_string() +
                   " = " + x.to_string() + " is not in the family");
          break;
        }
      }
    }
    fail(r, std::nullopt, std::nullopt,
         "rank " + std::to_string(rank) + " but " + std::to_string(distinct.size()) + " distinct members");
  }
  r.notes.push_back("rank=" + std::to_string(rank) + " distinct=" + std::to_string(distinct.size()) +
                    " length=" + std::to_string(length));
  return r;
}

VerdictReport verify_self_shrinking(const Field& field, const MSequence& seq, const GssFamily& family,
                                    const SpecialExponents& exps) {
  auto r = confirmed("self-shrinking", family.poly);
  const int L = field.degree();
  const std::uint32_t order = seq.period();
  const auto half = std::uint64_t{1} << (L - 1);

  BitVector z(order);
  for (std::uint32_t n = 0; n < order; ++n) z.set(n, seq.bits[(half * n) % order]);
  const auto direct = self_shrink_direct(z);
  const auto index = self_shrinking_index(family.poly);
  const auto& member = family.at(index).bits;
  if (direct.size() != member.size()) {
    fail(r, index, std::nullopt,
         "direct output length " + std::to_string(direct.size()) + " != " + std::to_string(member.size()));
  } else if (auto pos = first_difference(direct, member)) {
    fail(r, index, pos, "direct self-shrinking output differs from member " + index.to_string());
  }

  const std::size_t t_ss = least_period(member);
  const std::size_t expected = exps.p == half ? 2 : half;
  if (t_ss != expected) {
    fail(r, index, std::nullopt, "T_ss=" + std::to_string(t_ss) + ", expected " + std::to_string(expected));
  }
  const std::size_t bound = std::size_t{1} << (L / 2);
  if (t_ss < bound) {
    fail(r, index, std::nullopt, "T_ss=" + std::to_string(t_ss) + " below 2^floor(L/2)=" + std::to_string(bound));
  }
  r.notes.push_back("T_ss=" + std::to_string(t_ss));
  if (exps.p == half) r.notes.push_back("p=2^(L-1): short-period exception");
  r.notes.push_back("period bound 2^floor(L/2)=" + std::to_string(bound) + " slack=" +
                    std::to_string(static_cast<long long>(t_ss) - static_cast<long long>(bound)));
  return r;
}

VerdictReport verify_lc_bounds(const GssFamily& family) {
  auto r = confirmed("lc-bounds", family.poly);
  const int L = family.degree();
  const std::size_t full = family.sequence_length();
  const std::size_t low = full / 2;
  const auto ss_index = self_shrinking_index(family.poly);

  std::size_t checked = 0, inside = 0;
  std::size_t min_lc = full, max_lc = 0;
  for (const auto& m : family.members) {
    if (least_period(m.bits) != full) continue;
    ++checked;
    const std::size_t lc = linear_complexity(m.bits, full);
    min_lc = std::min(min_lc, lc);
    max_lc = std::max(max_lc, lc);
    if (lc > low && lc < full) {
      ++inside;
    } else {
      fail(r, m.index, std::nullopt,
           "LC=" + std::to_string(lc) + " outside (" + std::to_string(low) + ", " + std::to_string(full) + ")");
    }
  }
  r.notes.push_back("full-period members=" + std::to_string(checked) + " inside=" + std::to_string(inside) +
                    (checked ? " LC range=[" + std::to_string(min_lc) + "," + std::to_string(max_lc) + "]" : ""));

  const auto& ss = family.at(ss_index).bits;
  const std::size_t t_ss = least_period(ss);
  const std::size_t lc_ss = linear_complexity(ss, t_ss);
  if (t_ss == full) {
    const auto upper = static_cast<long long>(full) - (L - 2);
    if (!(lc_ss > low && static_cast<long long>(lc_ss) < upper)) {
      fail(r, ss_index, std::nullopt,
           "self-shrinking LC=" + std::to_string(lc_ss) + " not in (" + std::to_string(low) + ", " +
               std::to_string(upper) + ")");
    }
    r.notes.push_back("LC_ss=" + std::to_string(lc_ss) + " upper bound 2^(L-1)-(L-2)=" + std::to_string(upper));
  } else {
    r.notes.push_back("LC_ss=" + std::to_string(lc_ss) + " (T_ss=" + std::to_string(t_ss) + ", refined bound not applicable)");
  }
  const std::size_t ss_floor = std::size_t{1} << (L / 2 - 1);
  if (lc_ss < ss_floor) {
    fail(r, ss_index, std::nullopt,
         "self-shrinking LC=" + std::to_string(lc_ss) + " below 2^(floor(L/2)-1)=" + std::to_string(ss_floor));
  }
  r.notes.push_back("LC_ss floor 2^(floor(L/2)-1)=" + std::to_string(ss_floor) + " slack=" +
                    std::to_string(static_cast<long long>(lc_ss) - static_cast<long long>(ss_floor)));
  return r;
}

VerdictReport verify_nonpseudorandom(const Field& field, const GssFamily& family, const SpecialExponents& exps) {
  auto r = confirmed("runs", family.poly);
  const int L = field.degree();
  const std::uint32_t order = field.order();
  const auto aq = field.alpha_power(exps.q);
  const auto aq1 = field.alpha_power(std::int64_t{exps.q} + 1);

  if (field.add(aq, aq1) != field.alpha_power(exps.p)) {
    fail(r, std::nullopt, std::nullopt, "alpha^q + alpha^(q+1) != alpha^p");
  }
  if (aq.coordinate(L - 1) == aq1.coordinate(L - 1)) {
    fail(r, std::nullopt, std::nullopt, "alpha^q and alpha^(q+1) agree on the alpha^(L-1) coordinate");
  }

  const auto even_index = GssIndex::shift((exps.q + 1) % order);
  const auto short_index = GssIndex::shift(exps.q);
  struct Case {
    GssIndex index;
    const char* rule;
    bool (*allowed)(std::size_t);
  };
  const Case cases[] = {
      {even_index, "all runs even", [](std::size_t len) { return len % 2 == 0; }},
      {short_index, "runs of length 1 or 2", [](std::size_t len) { return len == 1 || len == 2; }},
  };
  for (const auto& c : cases) {
    const auto& bits = family.at(c.index).bits;
    const auto hist = run_distribution(bits);
    if (hist) {
      for (const auto& [len, count] : *hist) {
        if (!c.allowed(len)) {
          fail(r, c.index, std::nullopt, std::string(c.rule) + " violated by a run of length " + std::to_string(len));
        }
      }
    } else {
      r.notes.push_back("member " + c.index.to_string() + " is constant");
    }
    if (c.index.s() == 0) continue;
    const auto partner = complement_partner(field, c.index);
    const auto& pbits = family.at(partner).bits;
    if (auto pos = first_difference(pbits, ~bits)) {
      fail(r, partner, pos, "member " + partner.to_string() + " is not the complement of member " + c.index.to_string());
    }
    const auto phist = run_distribution(pbits);
    if (hist.has_value() != phist.has_value() || (hist && run_lengths(*hist) != run_lengths(*phist))) {
      fail(r, partner, std::nullopt, "run lengths differ from member " + c.index.to_string());
    }
    r.notes.push_back(c.index.to_string() + "<->" + partner.to_string());
  }
  r.notes.push_back("q=" + std::to_string(exps.q));
  return r;
}

const std::vector<std::string>& verifier_names() {
  static const std::vector<std::string> names = {
      "periods", "alternating", "parity-balance", "complement-slide", "no-intermediate-periods",
      "group",   "self-shrinking", "lc-bounds",   "runs",
  };
  return names;
}

std::vector<VerdictReport> verify_selected(const Workbench& bench, const std::vector<std::string>& names) {
  using Runner = std::function<VerdictReport()>;
  const auto& b = bench;
  const std::vector<std::pair<std::string, Runner>> registry = {
      {"periods", [&] { return verify_period_classification(b.family, b.exps); }},
      {"alternating", [&] { return verify_alternating_members(b.family, b.exps); }},
      {"parity-balance", [&] { return verify_parity_balance(b.family); }},
      {"complement-slide", [&] { return verify_complement_slide_all(b.field, b.seq); }},
      {"no-intermediate-periods", [&] { return verify_no_intermediate_periods(b.family); }},
      {"group", [&] { return verify_group_and_balance(b.family); }},
      {"self-shrinking", [&] { return verify_self_shrinking(b.field, b.seq, b.family, b.exps); }},
      {"lc-bounds", [&] { return verify_lc_bounds(b.family); }},
      {"runs", [&] { return verify_nonpseudorandom(b.field, b.family, b.exps); }},
  };
  for (const auto& name : names) {
    const bool known = std::any_of(registry.begin(), registry.end(), [&](const auto& e) { return e.first == name; });
    if (!known) throw Error(ErrorKind::InvalidArgument, "unknown verifier '" + name + "'");
  }
  std::vector<std::future<VerdictReport>> pending;
  for (const auto& [name, run] : registry) {
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      pending.push_back(std::async(std::launch::async, run));
    }
  }
  std::vector<VerdictReport> out;
  out.reserve(pending.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::vector<VerdictReport> verify_all(const PrimitivePolynomial& poly) {
  const Workbench bench(poly);
  return verify_selected(bench, verifier_names());
}

}  // namespace gsslab
