#pragma once

// Seeded PLMap fixtures and shared test spaces.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ropen/interval_space.hpp"
#include "ropen/plmap.hpp"
#include "ropen/random.hpp"

namespace fixtures {

using ropen::Component;
using ropen::Rational;
using ropen::SpaceRef;
using ropen::pl::AffinePiece;
using ropen::pl::PLMap;

inline SpaceRef unit() { return ropen::make_interval_space(0, 1); }

/// The five spaces used for law checks.
inline std::vector<SpaceRef> law_spaces() {
  return {
      unit(),
      ropen::make_space({Component::interval(0, 1), Component::point(2)}),
      ropen::make_space({Component::interval(0, 1), Component::point(2), Component::point(3)}),
      ropen::make_space({Component::interval(0, 1), Component::interval(2, 5)}),
      ropen::make_space({Component::point(-1), Component::interval(0, 1), Component::interval(Rational(3, 2), 2),
                         Component::point(4)}),
  };
}

/// Spaces for structural checks, including point-only spaces.
inline std::vector<SpaceRef> all_spaces() {
  auto out = law_spaces();
  out.push_back(ropen::make_space({Component::point(1), Component::point(2)}));
  out.push_back(ropen::make_space({Component::point(0)}));
  out.push_back(ropen::make_interval_space(-3, Rational(7, 3)));
  return out;
}

/// Pieces through (x_i, y_i).
inline std::vector<AffinePiece> polyline(const std::vector<std::pair<Rational, Rational>>& knots) {
  std::vector<AffinePiece> out;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const auto& [x0, y0] = knots[i];
    const auto& [x1, y1] = knots[i + 1];
    const Rational slope = (y1 - y0) / (x1 - x0);
    out.push_back({x0, x1, slope, y0 - slope * x0});
  }
  return out;
}

/// Strictly monotone polyline from [a,b] onto [c,d] (decreasing when `up` is false).
inline std::vector<AffinePiece> monotone(ropen::Rng& rng, const Rational& a, const Rational& b, const Rational& c,
                                         const Rational& d, bool up) {
  const std::size_t inner = rng.below(4);
  std::vector<long> xs, ys;
  for (std::size_t i = 0; i < inner; ++i) {
    xs.push_back(1 + static_cast<long>(rng.below(63)));
    ys.push_back(1 + static_cast<long>(rng.below(63)));
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  const std::size_t k = std::min(xs.size(), ys.size());
  std::vector<std::pair<Rational, Rational>> knots{{a, up ? c : d}};
  for (std::size_t i = 0; i < k; ++i) {
    const Rational x = a + (b - a) * Rational(xs[i], 64);
    const Rational t = Rational(up ? ys[i] : 64 - ys[i], 64);
    knots.emplace_back(x, c + (d - c) * t);
  }
  knots.emplace_back(b, up ? d : c);
  return polyline(knots);
}

struct MapFixture {
  std::string kind;
  PLMap map;
};

/// One of nine fixture families chosen by the seed; every map is valid and onto.
inline MapFixture random_map(std::uint64_t seed) {
  ropen::Rng rng(seed);
  const auto x = unit();
  const Rational r1(1 + static_cast<long>(rng.below(63)), 64);
  switch (seed % 9) {
    case 0:
      return {"increasing", PLMap{x, x, {monotone(rng, 0, 1, 0, 1, true)}, {}}};
    case 1:
      return {"decreasing", PLMap{x, x, {monotone(rng, 0, 1, 0, 1, false)}, {}}};
    case 2: {
      // Up to 1, then back down to some level.
      const Rational low(static_cast<long>(rng.below(64)), 64);
      return {"fold", PLMap{x, x, {polyline({{0, 0}, {r1, 1}, {1, low}})}, {}}};
    }
    case 3: {
      const Rational a = r1 / 2;
      const Rational b = (r1 + 1) / 2;
      return {"flat", PLMap{x, x, {polyline({{0, 0}, {a, r1}, {b, r1}, {1, 1}})}, {}}};
    }
    case 4: {
      const auto y = ropen::make_space({Component::interval(0, 1), Component::point(2)});
      return {"extra_point", PLMap{y, x, {monotone(rng, 0, 1, 0, 1, rng.coin())}, {{2, r1}}}};
    }
    case 5: {
      const auto y = ropen::make_space({Component::interval(0, 1), Component::interval(2, 3)});
      return {"glued", PLMap{y, x, {monotone(rng, 0, 1, 0, r1, true), monotone(rng, 2, 3, r1, 1, rng.coin())}, {}}};
    }
    case 6: {
      const auto y = ropen::make_space({Component::interval(0, 1), Component::interval(2, 3)});
      const Rational over = r1 / 2;
      return {"glued_overlap",
              PLMap{y, x, {monotone(rng, 0, 1, 0, r1, true), monotone(rng, 2, 3, over, 1, true)}, {}}};
    }
    case 7: {
      const auto y = ropen::make_space({Component::interval(0, 2), Component::point(5)});
      const auto z = ropen::make_space({Component::interval(0, 1), Component::point(3)});
      return {"point_to_point", PLMap{y, z, {monotone(rng, 0, 2, 0, 1, rng.coin())}, {{5, 3}}}};
    }
    default: {
      const auto y = ropen::make_space({Component::point(0), Component::point(1), Component::interval(2, 3)});
      const auto z = ropen::make_space({Component::point(0), Component::interval(1, 2)});
      // Two points onto one isolated target point.
      return {"merged_points", PLMap{y, z, {monotone(rng, 2, 3, 1, 2, true)}, {{0, 0}, {1, 0}}}};
    }
  }
}

inline PLMap tent() {
  const auto x = unit();
  return PLMap{x, x, {polyline({{0, 0}, {Rational(1, 2), 1}, {1, 0}})}, {}};
}

inline PLMap halve() {
  const auto y = ropen::make_interval_space(0, 2);
  return ropen::pl::affine(y, unit(), Rational(1, 2), 0);
}

/// Irreducible maps used wherever a fixed list of essential covers is needed.
inline std::vector<PLMap> irreducible_maps() {
  const auto x = unit();
  const auto glued_domain = ropen::make_space({Component::interval(0, 1), Component::interval(2, 3)});
  const auto pt_domain = ropen::make_space({Component::interval(0, 1), Component::point(2)});
  return {
      ropen::pl::identity(x),
      halve(),
      PLMap{x, x, {polyline({{0, 1}, {Rational(1, 3), Rational(1, 2)}, {1, 0}})}, {}},
      PLMap{x, x, {polyline({{0, 0}, {Rational(1, 4), Rational(1, 8)}, {Rational(3, 4), Rational(7, 8)}, {1, 1}})}, {}},
      PLMap{glued_domain, x, {polyline({{0, 0}, {1, Rational(1, 2)}}), polyline({{2, Rational(1, 2)}, {3, 1}})}, {}},
      PLMap{pt_domain, pt_domain, {polyline({{0, 0}, {1, 1}})}, {{2, 2}}},
  };
}

}  // namespace fixtures
