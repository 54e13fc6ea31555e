#include <doctest.h>

#include <random>

#include "aaj/kauffman.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace aaj;

namespace {

LaurentPoly from_oracle(const oracle::Poly& p) {
  LaurentPoly::TermMap m(p.begin(), p.end());
  return LaurentPoly(Unit::QuarterA, m);
}

oracle::Poly oracle_bracket(const LinkDiagram& d) {
  return oracle::bracket({d.crossings().begin(), d.crossings().end()}, d.unknotted_loops());
}

std::vector<Resolution> all(const LinkDiagram& d, Resolution r) {
  return std::vector<Resolution>(static_cast<std::size_t>(d.crossing_count()), r);
}

}  // namespace

TEST_SUITE("kauffman") {
  TEST_CASE("resolve") {
    const LinkDiagram t = parse_pd(fixtures::kTrefoil);
    const std::vector<std::array<int, 4>> xs(t.crossings().begin(), t.crossings().end());
    const KauffmanState s = resolve(t, all(t, Resolution::A));
    CHECK(s.loop_count == 3);
    CHECK(s.loop_count == oracle::state_loops(xs, 0));
    CHECK(s.a_count == 3);
    CHECK(s.b_count == 0);
    CHECK(resolve(t, all(t, Resolution::B)).loop_count == 2);
    CHECK(resolve(t, all(t, Resolution::B)).loop_count == oracle::state_loops(xs, 7));
    CHECK(resolve(parse_pd("loops=1"), {}).loop_count == 1);
    CHECK(resolve(parse_pd("loops=3"), {}).loop_count == 3);
    CHECK_THROWS_AS(resolve(t, {Resolution::A}), IndexError);
  }

  TEST_CASE("one resolution change moves the loop count by one") {
    std::mt19937 rng(9);
    for (const char* pd : {fixtures::kTrefoil, fixtures::kAAExample, fixtures::kK15, fixtures::kKink}) {
      const LinkDiagram d = parse_pd(pd);
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<Resolution> r;
        for (int i = 0; i < d.crossing_count(); ++i) r.push_back(rng() & 1 ? Resolution::A : Resolution::B);
        const int before = resolve(d, r).loop_count;
        const auto i = static_cast<std::size_t>(rng() % static_cast<unsigned>(d.crossing_count()));
        r[i] = r[i] == Resolution::A ? Resolution::B : Resolution::A;
        CHECK(std::abs(resolve(d, r).loop_count - before) == 1);
      }
    }
  }

  TEST_CASE("state loops agree with the oracle") {
    const LinkDiagram d = parse_pd(fixtures::kAAExample);
    const std::vector<std::array<int, 4>> xs(d.crossings().begin(), d.crossings().end());
    for (std::uint64_t mask = 0; mask < 1024; mask += 37) {
      std::vector<Resolution> r;
      for (int i = 0; i < 10; ++i) r.push_back(mask >> i & 1 ? Resolution::B : Resolution::A);
      const StateLoops sl = state_loops(d, r);
      CHECK(sl.loop_count == oracle::state_loops(xs, mask));
      CHECK(sl.trace.size() == 10);
    }
  }

  TEST_CASE("bracket fixtures") {
    CHECK(bracket(parse_pd("loops=1")) == parse_poly("1", Unit::QuarterA));
    CHECK(bracket(parse_pd(fixtures::kKink)) == parse_poly("-A^3", Unit::QuarterA));
    CHECK(bracket(flip_crossing(parse_pd(fixtures::kKink), 0)) == parse_poly("-A^(-3)", Unit::QuarterA));
    CHECK(bracket(parse_pd(fixtures::kTrefoil)) == parse_poly(fixtures::kTrefoilBracket, Unit::QuarterA));
    CHECK(bracket(parse_pd(fixtures::kAAExample)) == parse_poly(fixtures::kAAExampleBracket, Unit::QuarterA));
    CHECK(bracket(parse_pd("loops=2")) == parse_poly("-A^2 - A^(-2)", Unit::QuarterA));
    CHECK(bracket(parse_pd(std::string(fixtures::kTrefoil) + " loops=1")) ==
          parse_poly(fixtures::kTrefoilBracket, Unit::QuarterA) * delta_power(1));
  }

  TEST_CASE("bracket matches the brute-force oracle") {
    for (const char* pd : {fixtures::kTrefoil, fixtures::kKink, fixtures::kHopf, fixtures::kGranny,
                           fixtures::kAAExample}) {
      const LinkDiagram d = parse_pd(pd);
      CHECK(bracket(d) == from_oracle(oracle_bracket(d)));
    }
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      const LinkDiagram d = oracle::random_almost_alternating(rng, 3 + trial % 10);
      CHECK(bracket(d) == from_oracle(oracle_bracket(d)));
    }
  }

  TEST_CASE("jones fixtures") {
    CHECK(jones(parse_pd(fixtures::kTrefoil)) == parse_poly(fixtures::kTrefoilJones, Unit::HalfT));
    CHECK(jones(parse_pd(fixtures::kAAExample)) == parse_poly(fixtures::kAAExampleJones, Unit::HalfT));
    CHECK(jones(parse_pd(fixtures::kK15)) == parse_poly(fixtures::kK15Jones, Unit::HalfT));
    CHECK(jones(parse_pd(fixtures::kKink)) == parse_poly("1", Unit::HalfT));
    const LaurentPoly unlink = parse_poly("-t^(1/2) - t^(-1/2)", Unit::HalfT);
    for (int l = 1; l <= 5; ++l)
      CHECK(jones(parse_pd("loops=" + std::to_string(l))) == unlink.pow(static_cast<unsigned>(l - 1)));
  }

  TEST_CASE("jones rejects odd exponents") {
    // A^1 with writhe 0 cannot come from a diagram
    CHECK_THROWS_AS(jones_from_bracket(parse_poly("A", Unit::QuarterA), 0), InternalError);
  }

  TEST_CASE("cap") {
    const LinkDiagram d = parse_pd(fixtures::kK15);
    BracketOptions opt;
    opt.cap = 14;
    CHECK_THROWS_AS(bracket(d, opt), CapError);
    opt.cap = 15;
    CHECK_NOTHROW(bracket(d, opt));
  }

  TEST_CASE("parallel enumeration equals sequential") {
    for (const char* pd : {fixtures::kAAExample, fixtures::kK15, fixtures::kTrefoil, fixtures::kKink}) {
      const LinkDiagram d = parse_pd(pd);
      BracketOptions par;
      par.threads = 4;
      CHECK(bracket(d, par) == bracket(d));
    }
  }

  TEST_CASE("extreme states and Turaev genus") {
    const LinkDiagram t = parse_pd(fixtures::kTrefoil);
    CHECK(state_counts(t) == std::pair{3, 2});
    CHECK(turaev_genus(t) == 0);
    CHECK(state_counts(parse_pd(fixtures::kKink)) == std::pair{2, 1});
    CHECK(turaev_genus(parse_pd(fixtures::kKink)) == 0);
    CHECK(turaev_genus(parse_pd("loops=1")) == 0);
    CHECK(turaev_genus(parse_pd(fixtures::kAAExample)) == 1);
    CHECK(turaev_genus(parse_pd(fixtures::kK15)) >= 1);
  }

  TEST_CASE("adequacy") {
    const LinkDiagram t = parse_pd(fixtures::kTrefoil);
    CHECK(is_A_adequate(t));
    CHECK(is_B_adequate(t));
    const LinkDiagram k = parse_pd(fixtures::kKink);
    CHECK(is_A_adequate(k) != is_B_adequate(k));
  }

  TEST_CASE("random alternating diagrams") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
      const int c = 2 + trial % 12;
      const LinkDiagram d = oracle::random_alternating(rng, c);
      CAPTURE(serialize(d));
      const auto [sa, sb] = state_counts(d);
      CHECK(sa + sb == c + 2);
      CHECK(turaev_genus(d) == 0);
      CHECK(is_A_adequate(d));
      CHECK(is_B_adequate(d));
      CHECK(span(jones(d)) == Rational::make(c, 1));
    }
  }
}
