// Acceptance gate: one PASS/FAIL line per criterion.
//   gsslab_acceptance              run all criteria
//   gsslab_acceptance --criterion N

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "gsslab/analysis.hpp"
#include "gsslab/cli.hpp"
#include "gsslab/gf2x.hpp"
#include "gsslab/gss.hpp"
#include "gsslab/sequences.hpp"
#include "gsslab/theorems.hpp"
#include "oracles.hpp"

using namespace gsslab;

namespace {

// Time limits per criterion, in seconds.
constexpr double kSmallCaseLimit = 1.0;
constexpr double kSweepLimit = 300.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit;  // 0: untimed
  std::function<Outcome()> body;
};

std::pair<int, std::string> cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gsslab");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + "\x1f" + err.str()};
}

// p from its definition alpha^p (1 + alpha) = 1, found by scanning powers.
std::uint32_t p_by_scan(const PrimitivePolynomial& poly) {
  const auto m = oracle::dlog_scan(poly.mask(), oracle::alpha_power_naive(poly.mask(), 1) ^ 1u);
  return static_cast<std::uint32_t>((poly.period() - m) % poly.period());
}

PrimitivePolynomial designated(int L) { return enumerate_primitive(L).front(); }

Outcome c1() {
  Outcome o;
  const auto [code, text] = cli({"generate", "--poly", "x^3+x+1", "--shift", "4", "--trace"});
  const auto out = text.substr(0, text.find('\x1f'));
  if (code != 0 || out != "1010\n") o.fail("generate printed '" + out + "'");
  const auto seq = generate_msequence(validate_primitive("x^3+x+1"));
  const auto rows = gss_trace(seq, GssIndex::shift(4));
  // v_n = a_{n+4}, kept where a_n = 1.
  const std::string v_column = "1110010";
  for (const auto& row : rows) {
    if (row.source != (row.n + 4) % 7 || row.v != (v_column[row.n] == '1')) {
      o.fail("trace row " + std::to_string(row.n) + " disagrees with the expected v column");
    }
  }
  if (rows.empty() || rows[0].source != 4) o.fail("v_0 is not a_4");
  if (text.find("a_4=1") == std::string::npos) o.fail("debug trace lacks v_0 = a_4");
  return o;
}

Outcome c2() {
  Outcome o;
  const auto poly = validate_primitive("x^4+x+1");
  const Field f(poly);
  const auto seq = generate_msequence(poly);
  const std::map<std::uint32_t, std::uint32_t> expected = {{3, 11}, {7, 2}, {9, 13}, {14, 4}};
  for (const auto& [s, d] : expected) {
    const auto got = partner_offset(f, GssIndex::shift(s));
    if (got != d) o.fail("s=" + std::to_string(s) + " d=" + std::to_string(got));
    if (!verify_complement_slide(f, seq, s).confirmed()) o.fail("complement slide fails at s=" + std::to_string(s));
  }
  return o;
}

Outcome c3() {
  Outcome o;
  const Workbench b(validate_primitive("x^5+x^2+1"));
  if (b.exps.q != 26) o.fail("q=" + std::to_string(b.exps.q));
  const std::pair<std::uint32_t, std::string> rows[] = {{27, "0000110011001111"}, {26, "1010011001100101"}};
  const std::string complements[] = {"1111001100110000", "0101100110011010"};
  for (int i = 0; i < 2; ++i) {
    const auto idx = GssIndex::shift(rows[i].first);
    if (b.family.at(idx).bits.to_string() != rows[i].second) o.fail("shift " + idx.to_string() + " differs");
    const auto partner = complement_partner(b.field, idx);
    if (b.family.at(partner).bits.to_string() != complements[i]) o.fail("partner " + partner.to_string() + " differs");
  }
  return o;
}

Outcome c4_c5(bool periods) {
  Outcome o;
  std::size_t polys = 0;
  for (int L = 2; L <= 12; ++L) {
    const std::size_t full = std::size_t{1} << (L - 1);
    for (const auto& poly : enumerate_primitive(L)) {
      ++polys;
      const auto family = gss_family(generate_msequence(poly));
      const auto p = p_by_scan(poly);
      const std::uint32_t N = poly.period();
      const std::set<GssIndex> t1 = {GssIndex::zero(), GssIndex::shift(0)};
      const std::set<GssIndex> t2 = {GssIndex::shift(p), GssIndex::shift((p + 1) % N)};
      for (const auto& m : family.members) {
        const auto T = least_period(m.bits);
        const std::string where = poly.to_hex() + " index " + m.index.to_string() + " T=" + std::to_string(T);
        if (periods) {
          if (T != 1 && T != 2 && T != full) o.fail(where);
          if ((T == 1) != (t1.count(m.index) == 1)) o.fail(where + " (T=1 set)");
          if ((T == 2) != (t2.count(m.index) == 1)) o.fail(where + " (T=2 set)");
        } else if (T >= 4 && T <= full / 2) {
          o.fail(where + " intermediate period");
        }
      }
    }
  }
  o.detail = o.pass ? std::to_string(polys) + " polynomials, L=2..12" : o.detail;
  return o;
}

Outcome c6() {
  Outcome o;
  std::ostringstream slack;
  for (int L = 4; L <= 12; ++L) {
    const auto poly = designated(L);
    const auto family = gss_family(generate_msequence(poly));
    const std::size_t full = family.sequence_length();
    for (const auto& m : family.members) {
      if (least_period(m.bits) != full) continue;
      const auto lc = linear_complexity(m.bits, full);
      if (!(lc > full / 2 && lc < full)) o.fail(poly.to_hex() + " member " + m.index.to_string() + " LC=" + std::to_string(lc));
    }
    const auto& ss = family.at(self_shrinking_index(poly)).bits;
    const auto lc_ss = linear_complexity(ss);
    const auto bound = static_cast<long long>(full) - (L - 2);
    slack << ' ' << L << ':' << lc_ss << '/' << bound;
    if (!(static_cast<long long>(lc_ss) < bound)) {
      o.fail(poly.to_hex() + " self-shrinking LC=" + std::to_string(lc_ss) + " not < " + std::to_string(bound));
    }
  }
  // Berlekamp-Massey against brute force: every family member of length <= 32,
  // and every binary string of length <= 12.
  for (int L = 2; L <= 6; ++L) {
    for (const auto& poly : enumerate_primitive(L)) {
      for (const auto& m : gss_family(generate_msequence(poly)).members) {
        if (linear_complexity(m.bits) != oracle::min_lfsr_linear_algebra(oracle::bits_of(m.bits.to_string()))) {
          o.fail("BM disagrees on " + poly.to_hex() + " member " + m.index.to_string());
        }
      }
    }
  }
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint32_t word = 0; word < (1u << n); ++word) {
      BitVector v(n);
      for (std::size_t i = 0; i < n; ++i) v.set(i, (word >> i) & 1u);
      const auto b = oracle::bits_of(v.to_string());
      const oracle::Bits period(b.begin(), b.begin() + static_cast<long>(least_period(v)));
      if (linear_complexity(v) != oracle::min_lfsr_enumerate(period)) o.fail("BM disagrees on " + v.to_string());
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("LC_ss/bound") + slack.str();
  return o;
}

Outcome c7() {
  Outcome o;
  for (int L = 3; L <= 12; ++L) {
    for (const auto& poly : enumerate_primitive(L)) {
      const auto seq = generate_msequence(poly);
      const std::uint32_t N = poly.period();
      const std::uint32_t half = N / 2 + 1;
      BitVector z(N);
      for (std::uint32_t n = 0; n < N; ++n) z.set(n, seq[static_cast<std::size_t>(std::uint64_t{half} * n % N)]);
      const auto direct = self_shrink_direct(z);
      const auto member = gss_generate(seq, self_shrinking_index(poly)).bits;
      if (direct != member) o.fail(poly.to_hex() + " direct self-shrinking differs from shift 2^(L-1)");
      const auto t_ss = least_period(member);
      const auto p = p_by_scan(poly);
      if (p != half && t_ss != half) o.fail(poly.to_hex() + " T_ss=" + std::to_string(t_ss));
      if (p == half && t_ss != 2) o.fail(poly.to_hex() + " p=2^(L-1) but T_ss=" + std::to_string(t_ss));
    }
  }
  const auto t3 = least_period(gss_generate(generate_msequence(designated(3)), GssIndex::shift(4)).bits);
  if (t3 != 2) o.fail("L=3 T_ss=" + std::to_string(t3));
  return o;
}

Outcome c8() {
  Outcome o;
  for (int L = 4; L <= 12; ++L) {
    for (const auto& poly : enumerate_primitive(L)) {
      const auto family = gss_family(generate_msequence(poly));
      const Field f(poly);
      const auto p = p_by_scan(poly);
      const std::uint32_t N = poly.period();
      const std::uint32_t q = static_cast<std::uint32_t>(2ull * p % N);
      const auto multiset = [](const BitVector& bits) {
        std::multiset<std::size_t> lengths;
        for (const auto& [len, bit] : oracle::cyclic_runs(oracle::bits_of(bits.to_string()))) lengths.insert(len);
        return lengths;
      };
      for (const auto [s, even_only] : {std::pair{(q + 1) % N, true}, std::pair{q, false}}) {
        const auto idx = GssIndex::shift(s);
        const auto& bits = family.at(idx).bits;
        const auto lengths = multiset(bits);
        for (const auto len : lengths) {
          if (even_only ? len % 2 != 0 : (len != 1 && len != 2)) {
            o.fail(poly.to_hex() + " shift " + idx.to_string() + " run " + std::to_string(len));
          }
        }
        const auto& partner = family.at(complement_partner(f, idx)).bits;
        if (partner != ~bits || multiset(partner) != lengths) o.fail(poly.to_hex() + " complement of " + idx.to_string());
      }
    }
  }
  return o;
}

Outcome c9() {
  Outcome o;
  for (int L = 2; L <= 10; ++L) {
    for (const auto& poly : enumerate_primitive(L)) {
      const Workbench b(poly);
      for (const auto& name : {"group", "parity-balance"}) {
        const auto r = verify_selected(b, {name});
        if (!r.front().confirmed()) o.fail(poly.to_hex() + ' ' + name + ": " + r.front().witness->details);
      }
      if (L <= 6) {
        std::vector<std::string> members;
        for (const auto& m : b.family.members) members.push_back(m.bits.to_string());
        if (!oracle::pairwise_closed(members)) o.fail(poly.to_hex() + " pairwise closure");
      }
      for (std::uint32_t s = 1; s < poly.period(); ++s) {
        const auto idx = GssIndex::shift(s);
        const auto c = periodic_correlation(b.family.at(idx).bits, b.family.at(complement_partner(b.field, idx)).bits);
        if (!c.is_minus_one()) o.fail(poly.to_hex() + " correlation at shift " + idx.to_string());
      }
    }
  }
  return o;
}

Outcome c10() {
  Outcome o;
  for (int L = 2; L <= 16; ++L) {
    const auto poly = designated(L);
    const Field f(poly);
    const std::uint32_t N = poly.period();
    std::vector<bool> seen(N + 1, false);
    for (std::uint32_t n = 0; n < N; ++n) {
      const auto x = f.alpha_power(n);
      if (seen[x.coords] || x.coords == 0 || f.dlog(x) != n) o.fail(poly.to_hex() + " power/dlog at " + std::to_string(n));
      seen[x.coords] = true;
    }
    std::size_t pairs = 0;
    for (std::uint32_t s = 1; s < N; ++s) {
      const auto t = complement_partner(f, GssIndex::shift(s));
      if (complement_partner(f, t) != GssIndex::shift(s) || t == GssIndex::shift(s)) o.fail(poly.to_hex() + " involution");
      if (s < t.s()) ++pairs;
    }
    if (pairs != (std::size_t{1} << (L - 1)) - 1) o.fail(poly.to_hex() + " pairs=" + std::to_string(pairs));
    for (std::uint32_t x = 0; x < std::min<std::uint32_t>(N + 1, 256); ++x) {
      for (std::uint32_t y = 0; y < std::min<std::uint32_t>(N + 1, 256); y += 7) {
        if ((trace(f, f.element(x)) ^ trace(f, f.element(y))) != trace(f, f.add(f.element(x), f.element(y)))) {
          o.fail(poly.to_hex() + " trace linearity");
        }
      }
    }
  }
  const std::vector<std::vector<std::string>> commands = {
      {"generate", "--poly", "x^6+x+1", "--family"},
      {"analyze", "--poly", "x^6+x+1", "--family", "--format", "stext"},
      {"verify", "--poly", "x^6+x+1", "--all", "--format", "csv"},
      {"scan", "--degrees", "2..6"},
  };
  for (const auto& c : commands) {
    if (cli(c) != cli(c)) o.fail("non-deterministic: " + c.front());
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "x^3+x+1 shift 4 is 1010, v_0 = a_4", kSmallCaseLimit, c1},
      {2, "x^4+x+1 complement offsets 11,2,13,4 and slide", kSmallCaseLimit, c2},
      {3, "x^5+x^2+1 q = 26 and the four 16-bit run-structured members", kSmallCaseLimit, c3},
      {4, "periods in {1,2,2^(L-1)} at {zero,0} and {p,p+1}, all polys L=2..12", kSweepLimit, [] { return c4_c5(true); }},
      {5, "no period in {4..2^(L-2)}, all polys L=2..12", kSweepLimit, [] { return c4_c5(false); }},
      {6, "LC bounds L=4..12 incl. self-shrinking LC < 2^(L-1)-(L-2); BM vs brute force", kSweepLimit, c6},
      {7, "direct self-shrinking equals shift 2^(L-1), T_ss rule, L=3..12", 0, c7},
      {8, "run structure of shifts q+1 and q and their complements, L=4..12", 0, c8},
      {9, "closure, balance, parity balance, complement correlation -1, L<=10", 0, c9},
      {10, "dlog bijection, partner involution, trace linearity, CLI determinism", 0, c10},
  };

  bool all_pass = true;
  bool ran = false;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs > c.limit) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit));
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << 'C' << c.id << ' ' << c.title;
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    std::cout << " (" << t.str() << " s)";
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << '\n';
  }
  if (!ran) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return all_pass ? 0 : 1;
}
