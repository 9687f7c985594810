#include "doctest.h"

#include "cantor_oracle.hpp"
#include "ropen/errors.hpp"
#include "ropen/random.hpp"

using namespace ropen;
using namespace ropen::cantor;

namespace {

CantorClopen K(std::initializer_list<const char*> ws) {
  std::vector<Word> words;
  for (const char* w : ws) words.emplace_back(w);
  return CantorClopen::from_words(words);
}
Rational q(long n, long d = 1) { return Rational(n, d); }
RopenElem ro(std::vector<Span> spans) { return RopenElem::from_region(make_region(unit_interval(), spans)); }

}  // namespace

TEST_CASE("words") {
  CHECK_THROWS_AS(Word("012"), Error);
  CHECK(Word("101").index() == 5);
  CHECK(Word::from_index(5, 4).bits() == "0101");
  CHECK(Word("0") < Word("1"));
}

TEST_CASE("canonical antichains") {
  CHECK(K({"0", "1"}).is_whole());
  CHECK(K({"01", "0"}) == K({"0"}));
  CHECK(K({"10", "00", "11", "01"}).is_whole());
  CHECK(K({"110", "111", "0"}).words() == std::vector<Word>{Word("0"), Word("11")});
  CHECK(CantorClopen::empty_set().empty());
  CHECK(K({"0101", "1"}).max_length() == 4);
}

TEST_CASE("Boolean operations examples") {
  CHECK(clopen_union(K({"0"}), K({"1"})) == CantorClopen::whole());
  CHECK(clopen_inter(K({"01"}), K({"0"})) == K({"01"}));
  CHECK(clopen_compl(K({"01", "10"})) == K({"00", "11"}));
  CHECK(clopen_compl(CantorClopen::whole()).empty());
}

TEST_CASE("Boolean operations match depth-k truth tables") {
  for (std::size_t depth = 1; depth <= 4; ++depth) {
    const std::uint64_t cells = std::uint64_t{1} << depth;
    const std::uint64_t full = cells == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
    for (std::uint64_t a = 0; a <= full; ++a) {
      const auto ka = clopen_from_mask(a, depth);
      REQUIRE(oracle::table(ka, depth) == a);
      CHECK(oracle::canonical(ka));
      CHECK(oracle::table(clopen_compl(ka), depth) == (full & ~a));
      if (depth <= 3) {
        for (std::uint64_t b = 0; b <= full; ++b) {
          const auto kb = clopen_from_mask(b, depth);
          CHECK(oracle::table(clopen_union(ka, kb), depth) == (a | b));
          CHECK(oracle::table(clopen_inter(ka, kb), depth) == (a & b));
        }
      }
    }
  }
}

TEST_CASE("value intervals") {
  CHECK(value_interval(Word("0")) == std::pair<Rational, Rational>{0, q(1, 2)});
  CHECK(value_interval(Word("01")) == std::pair<Rational, Rational>{q(1, 4), q(1, 2)});
  CHECK(value_interval(Word("")) == std::pair<Rational, Rational>{0, 1});
}

TEST_CASE("psi_c and phi_c examples") {
  CHECK(psi_c(K({"0"})) == ro({Span{0, q(1, 2), true, false}}));
  CHECK(psi_c(K({"01", "10"})) == ro({Span::open(q(1, 4), q(3, 4))}));
  CHECK(psi_c(CantorClopen::whole()) == RopenElem::one(unit_interval()));
  CHECK(phi_c(ro({Span::open(q(1, 4), q(3, 4))})) == K({"01", "10"}));
  CHECK(phi_c(ro({Span{0, q(1, 2), true, false}})) == K({"0"}));
  CHECK(phi_c(RopenElem::one(unit_interval())).is_whole());

  CHECK(phi_c(psi_c(K({"0"}))) == K({"0"}));
  const auto mid = ro({Span::open(q(1, 4), q(3, 4))});
  CHECK(psi_c(phi_c(mid)) == mid);
  CHECK(psi_c(clopen_compl(K({"0"}))) == ro({Span{q(1, 2), 1, false, true}}));
  CHECK(psi_c(K({"1"})) == ropen_neg(psi_c(K({"0"}))));
}

TEST_CASE("phi_c errors") {
  try {
    phi_c(ro({Span::open(q(1, 3), q(1, 2))}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonDyadicEndpoint);
  }
  const auto other = make_interval_space(0, 2);
  CHECK_THROWS_AS(phi_c(RopenElem::one(other)), Error);
}

TEST_CASE("psi_c and phi_c match the grid model") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t depth = 1 + seed % 10;
    const auto k = random_clopen(seed, depth);
    CHECK(oracle::sample(psi_c(k).region()) == oracle::psi_grid(k));
    if (!k.empty()) CHECK_FALSE(psi_c(k).region().empty());
    const auto v = random_dyadic_regular_open(seed, depth);
    CHECK(oracle::table(phi_c(v), depth) == oracle::phi_table(oracle::sample(v.region()), depth));
  }
}

TEST_CASE("exhaustive bridge at depth 4") {
  const std::size_t depth = 4;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << 16); ++a) {
    const auto k = clopen_from_mask(a, depth);
    const auto v = ropen_from_mask(a, depth);
    REQUIRE(psi_c(k) == v);
    REQUIRE(phi_c(v) == k);
    REQUIRE(psi_c(clopen_compl(k)) == ropen_neg(v));
    REQUIRE(phi_c(ropen_neg(v)) == clopen_compl(k));
  }
}

TEST_CASE("cylinder irreducibility check") {
  const auto c1 = check_irreducible_cantor(1);
  CHECK(c1.passed);
  CHECK(c1.checked == 2);
  CHECK(check_irreducible_cantor(3).checked == 14);
  const auto c8 = check_irreducible_cantor(8);
  CHECK(c8.passed);
  CHECK(c8.checked == 510);
  CHECK(c8.failures.empty());
  CHECK_FALSE(c8.note.empty());
}

TEST_CASE("verify_bridge") {
  for (std::size_t depth = 1; depth <= 10; ++depth) {
    const auto r = verify_bridge(depth, 60, depth);
    CHECK(r.passed());
    CHECK(r.psi_join.passed == 60);
  }
}

TEST_CASE("random generators are deterministic") {
  CHECK(random_clopen(9, 7) == random_clopen(9, 7));
  CHECK(random_dyadic_regular_open(9, 7) == random_dyadic_regular_open(9, 7));
  for (std::uint64_t s = 0; s < 50; ++s) {
    CHECK(random_clopen(s, 5).max_length() <= 5);
    CHECK(oracle::canonical(random_clopen(s, 8)));
  }
  CHECK_THROWS_AS(clopen_from_mask(1, 7), Error);
}
