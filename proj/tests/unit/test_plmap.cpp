#include "doctest.h"

#include <functional>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ropen/errors.hpp"
#include "ropen/plmap.hpp"

using namespace ropen;
using namespace ropen::pl;
using fixtures::polyline;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }
Region reg(const SpaceRef& x, std::vector<Span> spans) { return make_region(x, spans); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("validate") {
  const auto x = fixtures::unit();
  CHECK_NOTHROW(validate(identity(x)));
  PLMap broken{x, x, {{{0, q(1, 2), 1, 0}, {q(1, 2), 1, 1, q(-1, 2)}}}, {}};
  CHECK(code_of([&] { validate(broken); }) == ErrorCode::Discontinuity);

  const auto gap = make_space({Component::interval(0, 1), Component::interval(2, 3)});
  PLMap escapes{x, gap, {{{0, 1, 3, 0}}}, {}};
  CHECK(code_of([&] { validate(escapes); }) == ErrorCode::ImageEscapesCodomain);

  PLMap zero_length{x, x, {{{0, 0, 1, 0}, {0, 1, 1, 0}}}, {}};
  CHECK(code_of([&] { validate(zero_length); }) == ErrorCode::InvalidInput);
  PLMap short_cover{x, x, {{{0, q(1, 2), 1, 0}}}, {}};
  CHECK(code_of([&] { validate(short_cover); }) == ErrorCode::InvalidInput);
  const auto with_pt = make_space({Component::interval(0, 1), Component::point(2)});
  PLMap no_point{with_pt, x, {{{0, 1, 1, 0}}}, {}};
  CHECK(code_of([&] { validate(no_point); }) == ErrorCode::InvalidInput);
}

TEST_CASE("image and preimage") {
  const auto x = fixtures::unit();
  const auto t = fixtures::tent();
  CHECK(image(t, reg(x, {Span::closed(0, q(1, 4))})) == reg(x, {Span::closed(0, q(1, 2))}));
  CHECK(preimage(t, reg(x, {Span::point(1)})) == reg(x, {Span::point(q(1, 2))}));
  const auto r = reg(x, {Span::open(q(1, 8), q(3, 8)), Span::point(q(7, 8))});
  CHECK(image(identity(x), r) == r);
  CHECK(evaluate(t, q(1, 4)) == q(1, 2));

  // Grid cross-check of the tent image.
  const auto img = oracle::sample(image(t, reg(x, {Span::closed(0, q(1, 4))})));
  for (long k = 0; k <= oracle::kSteps; ++k) {
    const Rational y(k, oracle::kSteps);
    CHECK(img[k] == (y <= q(1, 2)));
  }

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto m = fixtures::random_map(seed).map;
    const auto u = random_regular_open(m.domain, seed, 3).region();
    const auto s = random_regular_open(m.codomain, seed + 7, 3).region();
    CHECK(is_subset(u, preimage(m, image(m, u))));
    CHECK(image(m, preimage(m, s)) == intersect(s, image(m, Region::full(m.domain))));
  }
  CHECK_THROWS_AS(image(t, Region::full(make_interval_space(0, 2))), Error);
}

TEST_CASE("is_surjective") {
  const auto x = fixtures::unit();
  CHECK(is_surjective(fixtures::tent()));
  CHECK_FALSE(is_surjective(affine(make_interval_space(0, q(1, 2)), x, 1, 0)));
  CHECK(is_surjective(identity(x)));
}

TEST_CASE("is_irreducible examples") {
  const auto x = fixtures::unit();
  const auto tv = is_irreducible(fixtures::tent());
  CHECK_FALSE(tv.irreducible);
  CHECK(tv.rule == ReductionRule::OverlappingPieces);
  REQUIRE(tv.witness.has_value());
  CHECK(*tv.witness == reg(x, {Span::open(q(3, 4), 1)}));
  CHECK(is_reducing_open(fixtures::tent(), *tv.witness));

  const auto iv = is_irreducible(identity(x));
  CHECK(iv.irreducible);
  CHECK(iv.probe_samples > 0);

  const PLMap flat{x, x, {polyline({{0, 0}, {q(1, 3), q(1, 2)}, {q(2, 3), q(1, 2)}, {1, 1}})}, {}};
  const auto fv = is_irreducible(flat);
  CHECK_FALSE(fv.irreducible);
  CHECK(fv.rule == ReductionRule::ConstantPiece);
  REQUIRE(fv.witness.has_value());
  CHECK(is_subset(*fv.witness, reg(x, {Span::open(q(1, 3), q(2, 3))})));

  const auto y = make_space({Component::interval(0, 1), Component::point(2)});
  const PLMap extra{y, x, {polyline({{0, 0}, {1, 1}})}, {{2, q(1, 2)}}};
  const auto ev = is_irreducible(extra);
  CHECK(ev.rule == ReductionRule::IsolatedPoint);
  CHECK(*ev.witness == reg(y, {Span::point(2)}));

  CHECK_THROWS_AS(is_irreducible(affine(make_interval_space(0, q(1, 2)), x, 1, 0)), Error);
  CHECK(to_string(ReductionRule::OverlappingPieces) == "overlapping_pieces");
}

TEST_CASE("an irreducible cover need not be a homeomorphism") {
  const auto v = is_irreducible(fixtures::irreducible_maps()[4]);
  CHECK(v.irreducible);
}

TEST_CASE("verdicts agree with the definitional oracle") {
  std::size_t reducible = 0;
  for (std::uint64_t seed = 0; seed < 90; ++seed) {
    const auto fx = fixtures::random_map(seed);
    CAPTURE(fx.kind);
    CAPTURE(seed);
    REQUIRE_NOTHROW(validate(fx.map));
    REQUIRE(is_surjective(fx.map));
    const auto v = is_irreducible(fx.map);
    CHECK(v.irreducible == !oracle::finds_reducing_open(fx.map, 500, seed));
    if (!v.irreducible) {
      ++reducible;
      REQUIRE(v.witness.has_value());
      CHECK(is_reducing_open(fx.map, *v.witness));
      REQUIRE(v.witness->spans().size() == 1);
      CHECK(oracle::still_onto(fx.map, v.witness->spans()[0]));
    }
  }
  CHECK(reducible > 20);
  CHECK(reducible < 70);
}

TEST_CASE("find_reducing_open") {
  const auto t = fixtures::tent();
  const auto u = find_reducing_open(t, {});
  REQUIRE(u.has_value());
  CHECK(is_reducing_open(t, *u));
  CHECK_FALSE(find_reducing_open(identity(fixtures::unit()), {}).has_value());
  CHECK_FALSE(is_reducing_open(t, Region(t.domain)));
}

TEST_CASE("psi and phi examples") {
  const auto x = fixtures::unit();
  const auto y = make_interval_space(0, 2);
  const auto h = fixtures::halve();
  const auto u = RopenElem::from_region(reg(y, {Span{0, 1, true, false}}));
  CHECK(psi(h, u).region() == reg(x, {Span{0, q(1, 2), true, false}}));
  const auto v = RopenElem::from_region(reg(x, {Span{0, q(1, 2), true, false}}));
  CHECK(phi(h, v).region() == reg(y, {Span{0, 1, true, false}}));

  const auto w = random_regular_open(x, 3, 4);
  CHECK(psi(identity(x), w) == w);
  CHECK(phi(identity(x), w) == w);

  // The tent map is reducible: psi loses the inverse property.
  const auto left = RopenElem::from_region(reg(x, {Span{0, q(1, 2), true, false}}));
  CHECK(psi(fixtures::tent(), left) == RopenElem::one(x));
  CHECK_THROWS_AS(psi(h, v), Error);
}

TEST_CASE("psi and phi are inverse isomorphisms for irreducible maps") {
  for (const auto& m : fixtures::irreducible_maps()) {
    REQUIRE(is_irreducible(m).irreducible);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto v1 = random_regular_open(m.codomain, seed, 4);
      const auto v2 = random_regular_open(m.codomain, seed + 500, 4);
      const auto u1 = random_regular_open(m.domain, seed + 1000, 4);
      const auto u2 = random_regular_open(m.domain, seed + 1500, 4);
      CHECK(psi(m, phi(m, v1)) == v1);
      CHECK(phi(m, psi(m, u1)) == u1);
      CHECK(psi(m, ropen_join(u1, u2)) == ropen_join(psi(m, u1), psi(m, u2)));
      CHECK(psi(m, ropen_meet(u1, u2)) == ropen_meet(psi(m, u1), psi(m, u2)));
      CHECK(psi(m, ropen_neg(u1)) == ropen_neg(psi(m, u1)));
      CHECK(phi(m, ropen_join(v1, v2)) == ropen_join(phi(m, v1), phi(m, v2)));
      CHECK(phi(m, ropen_meet(v1, v2)) == ropen_meet(phi(m, v1), phi(m, v2)));
      CHECK(phi(m, ropen_neg(v1)) == ropen_neg(phi(m, v1)));
    }
  }
}
