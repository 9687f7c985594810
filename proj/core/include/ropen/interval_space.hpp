#pragma once

// Exact subsets of a compact space X that is a finite union of closed
// intervals and isolated points on the rational line. All topology is
// relative to X: interior([0,1/2]) in X = [0,1] is [0,1/2).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ropen/rational.hpp"

namespace ropen {

struct Component {
  enum class Kind { Interval, Point };

  Kind kind = Kind::Interval;
  Rational lo;
  Rational hi;  // equals lo for points

  static Component interval(Rational a, Rational b) { return {Kind::Interval, std::move(a), std::move(b)}; }
  static Component point(Rational c) { return {Kind::Point, c, c}; }

  bool is_point() const { return kind == Kind::Point; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Component&, const Component&) = default;
};

/// Sorted, pairwise disjoint components with strictly positive gaps.
/// Point components are exactly the isolated points of the space.
class Space1D {
 public:
  /// Validates and sorts. Throws Error(InvalidInput) on empty input,
  /// degenerate intervals, or components that touch or overlap.
  explicit Space1D(std::vector<Component> components);

  const std::vector<Component>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }

  /// Index of the component containing x, if any.
  std::optional<std::size_t> component_of(const Rational& x) const;
  bool contains(const Rational& x) const { return component_of(x).has_value(); }

  std::string str() const;

  friend bool operator==(const Space1D&, const Space1D&) = default;

 private:
  std::vector<Component> components_;
};

using SpaceRef = std::shared_ptr<const Space1D>;

SpaceRef make_space(std::vector<Component> components);
SpaceRef make_interval_space(const Rational& a, const Rational& b);
bool same_space(const SpaceRef& a, const SpaceRef& b);

struct Span {
  Rational lo;
  Rational hi;
  bool lo_incl = true;
  bool hi_incl = true;

  static Span open(Rational a, Rational b) { return {std::move(a), std::move(b), false, false}; }
  static Span closed(Rational a, Rational b) { return {std::move(a), std::move(b), true, true}; }
  static Span point(const Rational& c) { return {c, c, true, true}; }

  bool is_point() const { return lo == hi; }
  bool is_empty() const { return hi < lo || (lo == hi && !(lo_incl && hi_incl)); }
  bool contains(const Rational& x) const;

  std::string str() const;

  friend bool operator==(const Span&, const Span&) = default;
};

/// A canonical subset of a Space1D: sorted disjoint spans, each inside one
/// component, no two of which could be merged.
class Region {
 public:
  explicit Region(SpaceRef space) : space_(std::move(space)) {}

  static Region full(const SpaceRef& space);

  const SpaceRef& space() const { return space_; }
  const std::vector<Span>& spans() const { return spans_; }
  bool empty() const { return spans_.empty(); }
  bool contains(const Rational& x) const;

  std::string str() const;

  friend bool operator==(const Region& a, const Region& b);

 private:
  friend struct RegionBuilder;
  Region(SpaceRef space, std::vector<Span> spans) : space_(std::move(space)), spans_(std::move(spans)) {}

  SpaceRef space_;
  std::vector<Span> spans_;
};

struct Canonical {
  Region region;
  bool clipped = false;  // some raw span reached outside X
};

/// Clips raw spans to X, sorts and merges them.
Canonical canonicalize(const std::vector<Span>& raw, const SpaceRef& space);
Region make_region(const SpaceRef& space, const std::vector<Span>& raw);

Region closure(const Region& r);
Region interior(const Region& r);
Region complement(const Region& r);
/// X \ cl(R).
Region perp(const Region& r);

Region unite(const Region& a, const Region& b);
Region intersect(const Region& a, const Region& b);
Region difference(const Region& a, const Region& b);
bool is_subset(const Region& a, const Region& b);

bool is_open(const Region& r);
bool is_closed(const Region& r);
bool is_regular_open(const Region& r);

/// Element of Ropen(X). Construction enforces R = int(cl(R)).
class RopenElem {
 public:
  /// Throws Error(NotRegularOpen) unless r is regular open.
  static RopenElem from_region(Region r);
  static RopenElem zero(const SpaceRef& space);
  static RopenElem one(const SpaceRef& space);

  const Region& region() const { return region_; }
  const SpaceRef& space() const { return region_.space(); }
  std::string str() const { return region_.str(); }

  friend bool operator==(const RopenElem& a, const RopenElem& b) { return a.region_ == b.region_; }

 private:
  friend RopenElem regularize(const Region& r);
  explicit RopenElem(Region r) : region_(std::move(r)) {}

  Region region_;
};

/// int(cl(R)); idempotent.
RopenElem regularize(const Region& r);

RopenElem ropen_join(const RopenElem& u, const RopenElem& v);
RopenElem ropen_meet(const RopenElem& u, const RopenElem& v);
RopenElem ropen_neg(const RopenElem& u);

struct SpaceDecomposition {
  std::vector<Rational> isolated;      // isol(X)
  Region atomic_part;                  // X_a = cl(isol(X))
  Region continuous_part;              // X_c = cl(X \ X_a)
  std::optional<SpaceRef> atomic_space;
  std::optional<SpaceRef> continuous_space;
};

SpaceDecomposition decompose_space(const SpaceRef& space);

/// The closed nonempty region F as a space in its own right.
/// Throws Error(EmptySubspace) or Error(NotClosed).
SpaceRef subspace(const Region& closed_region);

/// Transports a region of a subspace back into the ambient space.
Region embed(const Region& r, const SpaceRef& ambient);

/// Theta(W_a, W_c) = regularization of the union of both embedded parts.
/// A missing argument stands for the empty region of a missing part.
RopenElem theta(const SpaceRef& space, const std::optional<RopenElem>& atomic,
                const std::optional<RopenElem>& continuous);

/// Deterministic random regular open set with at most `complexity` spans.
/// Interval endpoints are drawn from a 1/1024-relative grid of each component.
RopenElem random_regular_open(const SpaceRef& space, std::uint64_t seed, unsigned complexity);

}  // namespace ropen
