#include "doctest.h"

#include "fixtures.hpp"
#include "ropen/cover_iso.hpp"

using namespace ropen;
using namespace ropen::cover;

static_assert(CoverBackend<PLMapBackend>);
static_assert(CoverBackend<CantorBackend>);
static_assert(CoverBackend<CantorIdentityBackend>);

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::size_t total(const std::map<std::string, std::size_t>& m) {
  std::size_t n = 0;
  for (const auto& [k, v] : m) n += v;
  return n;
}

}  // namespace

TEST_CASE("identity backend passes") {
  const auto r = check_essential(PLMapBackend(pl::identity(fixtures::unit())), {100, 1, 5});
  CHECK(r.passed());
  CHECK(r.backend == "plmap");
  CHECK(total(r.law_passes) == 600);
  CHECK(total(r.inverse_passes) == 200);
}

TEST_CASE("Cantor backend passes at depth 6") {
  const auto r = check_essential(CantorBackend(), {500, 0, 6});
  CHECK(r.surjective);
  CHECK(r.irreducible.irreducible);
  CHECK(r.law_failures.empty());
  CHECK(r.inverse_failures.empty());
  CHECK(r.passed());
}

TEST_CASE("tent backend reports reducibility and failures") {
  const auto r = check_essential(PLMapBackend(fixtures::tent()), {100, 0, 4});
  CHECK(r.surjective);
  CHECK_FALSE(r.irreducible.irreducible);
  CHECK(r.irreducible.witness == std::optional<std::string>("(3/4,1)"));
  CHECK(r.irreducible.rule == "overlapping_pieces");
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.inverse_failures.empty());
}

TEST_CASE("failures replay from their sample index") {
  const CheckParams p{40, 11, 4};
  const auto r = check_essential(PLMapBackend(fixtures::tent()), p);
  REQUIRE_FALSE(r.inverse_failures.empty());
  const auto& f = r.inverse_failures.front();
  const auto again = check_essential(PLMapBackend(fixtures::tent()), {f.sample + 1, 11, 4});
  REQUIRE_FALSE(again.inverse_failures.empty());
  CHECK(again.inverse_failures.front().sample == f.sample);
  CHECK(again.inverse_failures.front().detail == f.detail);
}

TEST_CASE("non-surjective backend") {
  const auto m = pl::affine(make_interval_space(0, q(1, 2)), fixtures::unit(), 1, 0);
  const PLMapBackend b(m);
  CHECK_FALSE(b.surjective());
  CHECK_FALSE(b.verdict().irreducible);
  CHECK(b.verdict().rule == "not_surjective");
}

TEST_CASE("every irreducible fixture passes check_essential") {
  for (const auto& m : fixtures::irreducible_maps()) {
    const auto r = check_essential(PLMapBackend(m), {200, 3, 5});
    CHECK(r.passed());
  }
}

TEST_CASE("compose identities") {
  const auto x = fixtures::unit();
  const auto ce = compose_equivalence(PLMapBackend(pl::identity(x)), PLMapBackend(pl::identity(x)));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto v = random_regular_open(x, s, 4);
    CHECK(apply_composed(ce, v) == v);
  }
}

TEST_CASE("Cantor over identity equals psi_c") {
  const auto ce = compose_equivalence(CantorBackend(), CantorIdentityBackend());
  CHECK(apply_composed(ce, cantor::CantorClopen::from_words({cantor::Word("0")})) ==
        RopenElem::from_region(make_region(cantor::unit_interval(), {Span{0, q(1, 2), true, false}})));
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto k = cantor::random_clopen(s, 6);
    CHECK(ce.apply(k) == cantor::psi_c(k));
    CHECK(ce.inverse(ce.apply(k)) == k);
  }
}

TEST_CASE("composition of two homeomorphisms with different slopes") {
  const auto z = make_interval_space(0, 2);
  const auto x = fixtures::unit();
  const pl::PLMap f{z, x, {fixtures::polyline({{0, 0}, {q(1, 2), q(3, 4)}, {2, 1}})}, {}};
  const pl::PLMap g{z, x, {fixtures::polyline({{0, 0}, {q(3, 2), q(1, 4)}, {2, 1}})}, {}};
  const auto ce = compose_equivalence(PLMapBackend(f), PLMapBackend(g));
  const auto r = check_composed(ce, {200, 5, 5});
  CHECK(r.passed());
  CHECK(total(r.passes) == 1000);

  const auto back = compose_equivalence(PLMapBackend(g), PLMapBackend(f));
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto v = random_regular_open(x, s, 4);
    CHECK(back.apply(ce.apply(v)) == v);
    CHECK(ce.reversed().apply(v) == back.apply(v));
  }
}

TEST_CASE("compose errors") {
  const auto x = fixtures::unit();
  try {
    compose_equivalence(PLMapBackend(fixtures::halve()), PLMapBackend(pl::identity(x)));
    FAIL("expected DomainMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainMismatch);
  }
  try {
    compose_equivalence(PLMapBackend(fixtures::tent()), PLMapBackend(pl::identity(x)));
    FAIL("expected NotIrreducible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIrreducible);
  }
  const auto ce = compose_equivalence(PLMapBackend(pl::identity(x)), PLMapBackend(pl::identity(x)));
  CHECK_THROWS_AS(ce.apply(RopenElem::one(make_interval_space(0, 2))), Error);
}
