#include "doctest.h"

#include "fixtures.hpp"
#include "ropen/boolequiv.hpp"
#include "ropen/errors.hpp"
#include "ropen/finball.hpp"

using namespace ropen;
using namespace ropen::equiv;

namespace {

SpaceDescriptor D(std::initializer_list<Kind> ks) { return {std::vector<Kind>(ks)}; }
BoolInvariant inv(std::optional<std::uint64_t> n, bool perfect) { return {{n}, perfect}; }

std::vector<SpaceDescriptor> descriptor_fixtures() {
  std::vector<SpaceDescriptor> out;
  const Kind kinds[] = {Kind::Interval, Kind::Point, Kind::ConvSeq, Kind::Cantor};
  for (const Kind a : kinds) {
    out.push_back(D({a}));
    for (const Kind b : kinds) {
      out.push_back(D({a, b}));
      out.push_back(D({a, b, Kind::Point}));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("kind names") {
  for (const Kind k : {Kind::Interval, Kind::Point, Kind::ConvSeq, Kind::Cantor}) {
    CHECK(kind_from_string(to_string(k)) == k);
  }
  CHECK(to_string(Kind::ConvSeq) == "convseq");
  CHECK_THROWS_AS(kind_from_string("sphere"), Error);
}

TEST_CASE("invariant") {
  CHECK(invariant(D({Kind::Interval})) == inv(0, true));
  CHECK(invariant(D({Kind::ConvSeq})) == inv(std::nullopt, false));
  CHECK(invariant(D({Kind::Interval, Kind::Point, Kind::Point})) == inv(2, true));
  CHECK(invariant(D({Kind::Cantor, Kind::ConvSeq})) == inv(std::nullopt, true));
  CHECK(IsolCard{}.str() == "omega");
  CHECK(IsolCard{3}.str() == "3");
  try {
    invariant(D({}));
    FAIL("expected EmptyDescriptor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyDescriptor);
  }
}

TEST_CASE("equivalent examples") {
  CHECK(equivalent(D({Kind::Interval}), D({Kind::Cantor})).equivalent);
  CHECK(equivalent(D({Kind::ConvSeq}), D({Kind::ConvSeq, Kind::ConvSeq})).equivalent);
  const auto e = equivalent(D({Kind::Interval, Kind::Point}), D({Kind::Interval}));
  CHECK_FALSE(e.equivalent);
  CHECK(e.left == inv(1, true));
  CHECK(e.right == inv(0, true));
  CHECK_FALSE(e.reason.empty());
}

TEST_CASE("equivalence relation on fixtures") {
  const auto ds = descriptor_fixtures();
  for (const auto& a : ds) {
    CHECK(equivalent(a, a).equivalent);
    for (const auto& b : ds) {
      const bool ab = equivalent(a, b).equivalent;
      CHECK(ab == equivalent(b, a).equivalent);
      CHECK(ab == (invariant(a) == invariant(b)));
      if (!ab) continue;
      for (const auto& c : ds) {
        if (equivalent(b, c).equivalent) CHECK(equivalent(a, c).equivalent);
      }
    }
  }
}

TEST_CASE("from_space1d") {
  using K = std::vector<Kind>;
  CHECK(from_space1d(*make_space({Component::interval(0, 1), Component::point(2)})).components ==
        K{Kind::Interval, Kind::Point});
  CHECK(from_space1d(*make_space({Component::point(1), Component::point(2), Component::point(3)})).components ==
        K{Kind::Point, Kind::Point, Kind::Point});
  CHECK(from_space1d(*make_space({Component::interval(0, 1), Component::interval(2, 3)})).components ==
        K{Kind::Interval, Kind::Interval});

  for (const auto& x : fixtures::all_spaces()) {
    const auto i = invariant(from_space1d(*x));
    const auto d = decompose_space(x);
    CHECK(i.isol_card == IsolCard{d.isolated.size()});
    CHECK(i.perfect_nonempty == !d.continuous_part.empty());
  }
}

TEST_CASE("finite discrete spaces agree with iso_check") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t m = 1; m <= 8; ++m) {
      const SpaceDescriptor a{std::vector<Kind>(n, Kind::Point)};
      const SpaceDescriptor b{std::vector<Kind>(m, Kind::Point)};
      const bool iso = fin::iso_check(fin::FiniteBooleanAlgebra::with_atoms(n), fin::FiniteBooleanAlgebra::with_atoms(m))
                           .has_value();
      CHECK(equivalent(a, b).equivalent == iso);
    }
  }
}
