#include <doctest.h>

#include <random>

#include "gsslab/error.hpp"
#include "gsslab/gss.hpp"
#include "gsslab/sequences.hpp"
#include "oracles.hpp"

using namespace gsslab;

TEST_SUITE("sequences") {
  TEST_CASE("pinned m-sequences for the worked examples") {
    CHECK(generate_msequence(validate_primitive("x^3+x+1")).bits.to_string() == "0010111");
    CHECK(generate_msequence(validate_primitive("x^4+x+1")).bits.to_string() == "000100110101111");
    CHECK(generate_msequence(validate_primitive("x^2+x+1")).bits.to_string() == "011");
  }

  TEST_CASE("m-sequence invariants hold for every primitive polynomial up to L = 10") {
    for (int L = 2; L <= 10; ++L) {
      for (const auto& p : enumerate_primitive(L)) {
        CAPTURE(p.to_string());
        const auto seq = generate_msequence(p);
        const Field f(p);
        REQUIRE(oracle::str_of(oracle::msequence(p.mask())) == seq.bits.to_string());
        for (int i = 0; i + 1 < L; ++i) REQUIRE_FALSE(seq[static_cast<std::size_t>(i)]);
        REQUIRE(seq[static_cast<std::size_t>(L - 1)]);
        REQUIRE(seq.one_positions.size() == (std::size_t{1} << (L - 1)));
        REQUIRE(seq.bits.count() == (std::size_t{1} << (L - 1)));
        // a_n = 1 exactly when alpha^n carries the alpha^(L-1) coordinate.
        for (std::uint32_t n = 0; n < seq.period(); ++n) {
          REQUIRE(seq[n] == f.alpha_power(n).coordinate(L - 1));
        }
      }
    }
  }

  TEST_CASE("trace examples") {
    const Field f(validate_primitive("x^3+x+1"));
    CHECK_FALSE(trace(f, f.zero()));
    CHECK(trace(f, f.one()));
    // alpha + alpha^2 + alpha^4 = alpha + alpha^2 + (alpha^2 + alpha) = 0
    CHECK_FALSE(trace(f, f.alpha_power(1)));
  }

  TEST_CASE("trace is linear") {
    for (int L = 2; L <= 8; ++L) {
      const Field f(enumerate_primitive(L).back());
      for (std::uint32_t x = 0; x <= f.order(); ++x) {
        for (std::uint32_t y = 0; y <= f.order(); ++y) {
          REQUIRE((trace(f, f.element(x)) ^ trace(f, f.element(y))) == trace(f, f.element(x ^ y)));
        }
      }
    }
    std::mt19937 rng(7);
    const Field f(enumerate_primitive(16).front());
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order());
    for (int i = 0; i < 2000; ++i) {
      const auto x = pick(rng), y = pick(rng);
      REQUIRE((trace(f, f.element(x)) ^ trace(f, f.element(y))) == trace(f, f.element(x ^ y)));
    }
  }

  TEST_CASE("trace coefficient reproduces the whole m-sequence") {
    for (int L = 2; L <= 12; ++L) {
      CAPTURE(L);
      const auto p = enumerate_primitive(L).front();
      const Field f(p);
      const auto seq = generate_msequence(p);
      const auto A = solve_trace_coefficient(f, seq);
      REQUIRE_FALSE(A.is_zero());
      for (std::uint32_t n = 0; n < seq.period(); ++n) {
        REQUIRE(trace(f, f.mul(A, f.alpha_power(n))) == seq[n]);
      }
    }
    // L = 2 by hand: Tr(A) = 0, Tr(A alpha) = 1 with Tr(1) = 0, Tr(alpha) = 1 gives A = 1.
    const Field f2(validate_primitive("x^2+x+1"));
    CHECK(solve_trace_coefficient(f2, generate_msequence(f2.polynomial())) == f2.one());
  }

  TEST_CASE("sliding sequence examples") {
    const auto seq3 = generate_msequence(validate_primitive("x^3+x+1"));
    CHECK(sliding_sequence(seq3, 0) == seq3.bits);
    // v_0 = a_4, v_1 = a_5, v_2 = a_6, v_3 = a_0 ...
    const auto v = sliding_sequence(seq3, 4);
    for (std::uint32_t n = 0; n < 7; ++n) CHECK(v[n] == seq3[(n + 4) % 7]);
    CHECK(v.to_string() == "1110010");

    const auto seq4 = generate_msequence(validate_primitive("x^4+x+1"));
    CHECK(sliding_sequence(seq4, 3).to_string() == "100110101111000");
    CHECK(sliding_sequence(seq4, 7).to_string() == "101011110001001");
    CHECK(sliding_sequence(seq4, 9).to_string() == "101111000100110");
    CHECK(sliding_sequence(seq4, 14).to_string() == "100010011010111");

    try {
      (void)sliding_sequence(seq4, 15);
      FAIL("accepted shift 15");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ShiftOutOfRange);
    }
  }

  TEST_CASE("shift_of_G examples") {
    const Field f(validate_primitive("x^3+x+1"));
    CHECK(shift_of_G(f, BitVector::from_string("000")).is_zero());
    CHECK(shift_of_G(f, BitVector::from_string("100")) == GssIndex::shift(0));
    CHECK(shift_of_G(f, BitVector::from_string("011")) == GssIndex::shift(4));
    try {
      (void)shift_of_G(f, BitVector::from_string("01"));
      FAIL("accepted a short G");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::LengthMismatch);
    }
  }

  TEST_CASE("shift_of_G composed with sliding_sequence matches the G-weighted sum") {
    for (int L = 2; L <= 10; ++L) {
      CAPTURE(L);
      const auto p = enumerate_primitive(L).front();
      const Field f(p);
      const auto seq = generate_msequence(p);
      const auto a = oracle::msequence(p.mask());
      for (std::uint32_t g = 0; g < (std::uint32_t{1} << L); ++g) {
        BitVector G(static_cast<std::size_t>(L));
        oracle::Bits gb(static_cast<std::size_t>(L));
        for (int i = 0; i < L; ++i) {
          G.set(static_cast<std::size_t>(i), (g >> i) & 1u);
          gb[static_cast<std::size_t>(i)] = (g >> i) & 1u;
        }
        const auto direct = oracle::str_of(oracle::sliding_from_G(a, gb));
        const auto index = shift_of_G(f, G);
        if (index.is_zero()) {
          REQUIRE(g == 0);
          REQUIRE(direct == std::string(seq.period(), '0'));
        } else {
          REQUIRE(sliding_sequence(seq, index.s()).to_string() == direct);
        }
      }
    }
  }

  TEST_CASE("ASCII export is one line per sequence") {
    CHECK(export_sequences({BitVector::from_string("1010"), BitVector::from_string("0")}) == "1010\n0\n");
  }
}
