#include "ropen/interval_space.hpp"

#include <algorithm>
#include <sstream>

#include "ropen/errors.hpp"
#include "ropen/random.hpp"

namespace ropen {

Space1D::Space1D(std::vector<Component> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorCode::InvalidInput, "space must have at least one component");
  for (const auto& c : components_) {
    if (c.kind == Component::Kind::Interval && !(c.lo < c.hi)) {
      throw Error(ErrorCode::InvalidInput, "interval component needs a < b, got [" + c.lo.str() + "," +
                                               c.hi.str() + "]");
    }
    if (c.kind == Component::Kind::Point && c.lo != c.hi) {
      throw Error(ErrorCode::InvalidInput, "point component with distinct endpoints");
    }
  }
  std::sort(components_.begin(), components_.end(),
            [](const Component& a, const Component& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < components_.size(); ++i) {
    if (!(components_[i - 1].hi < components_[i].lo)) {
      throw Error(ErrorCode::InvalidInput, "components must be separated by positive gaps near " +
                                               components_[i].lo.str());
    }
  }
}

std::optional<std::size_t> Space1D::component_of(const Rational& x) const {
  auto it = std::upper_bound(components_.begin(), components_.end(), x,
                             [](const Rational& v, const Component& c) { return v < c.lo; });
  if (it == components_.begin()) return std::nullopt;
  --it;
  if (it->contains(x)) return static_cast<std::size_t>(it - components_.begin());
  return std::nullopt;
}

std::string Space1D::str() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += " u ";
    const auto& c = components_[i];
    out += c.is_point() ? "{" + c.lo.str() + "}" : "[" + c.lo.str() + "," + c.hi.str() + "]";
  }
  return out;
}

SpaceRef make_space(std::vector<Component> components) {
  return std::make_shared<const Space1D>(std::move(components));
}

SpaceRef make_interval_space(const Rational& a, const Rational& b) {
  return make_space({Component::interval(a, b)});
}

bool same_space(const SpaceRef& a, const SpaceRef& b) { return a == b || (a && b && *a == *b); }

bool Span::contains(const Rational& x) const {
  const bool above = lo < x || (lo_incl && lo == x);
  const bool below = x < hi || (hi_incl && hi == x);
  return above && below;
}

std::string Span::str() const {
  if (is_point()) return "{" + lo.str() + "}";
  return std::string(lo_incl ? "[" : "(") + lo.str() + "," + hi.str() + (hi_incl ? "]" : ")");
}

// Sole constructor path for canonical regions.
struct RegionBuilder {
  static Region build(SpaceRef space, std::vector<Span> spans) { return Region(std::move(space), std::move(spans)); }
};

Region Region::full(const SpaceRef& space) {
  std::vector<Span> spans;
  spans.reserve(space->size());
  for (const auto& c : space->components()) spans.push_back(Span::closed(c.lo, c.hi));
  return RegionBuilder::build(space, std::move(spans));
}

bool Region::contains(const Rational& x) const {
  for (const auto& s : spans_) {
    if (s.contains(x)) return true;
    if (x < s.lo) break;
  }
  return false;
}

std::string Region::str() const {
  if (spans_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < spans_.size(); ++i) {
    if (i > 0) out += " u ";
    out += spans_[i].str();
  }
  return out;
}

bool operator==(const Region& a, const Region& b) {
  return a.spans_ == b.spans_ && same_space(a.space_, b.space_);
}

namespace {

void require_same_space(const Region& a, const Region& b) {
  if (!same_space(a.space(), b.space())) {
    throw Error(ErrorCode::SpaceMismatch, "regions over " + a.space()->str() + " and " + b.space()->str());
  }
}

bool touches(const Span& left, const Span& right) {
  return right.lo < left.hi || (right.lo == left.hi && (left.hi_incl || right.lo_incl));
}

// Sorted input in one component at most per touching run; merges in place.
std::vector<Span> merge_sorted(std::vector<Span> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const Span& a, const Span& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_incl && !b.lo_incl;
  });
  std::vector<Span> out;
  out.reserve(pieces.size());
  for (auto& p : pieces) {
    if (!out.empty() && touches(out.back(), p)) {
      Span& back = out.back();
      if (back.lo == p.lo) back.lo_incl = back.lo_incl || p.lo_incl;
      if (back.hi < p.hi) {
        back.hi = p.hi;
        back.hi_incl = p.hi_incl;
      } else if (back.hi == p.hi) {
        back.hi_incl = back.hi_incl || p.hi_incl;
      }
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

Canonical canonicalize(const std::vector<Span>& raw, const SpaceRef& space) {
  std::vector<Span> pieces;
  bool clipped = false;
  for (const auto& s : raw) {
    if (s.is_empty()) continue;
    bool inside = false;
    for (const auto& c : space->components()) {
      if (c.hi < s.lo) continue;
      if (s.hi < c.lo) break;
      if (c.is_point()) {
        if (s.contains(c.lo)) pieces.push_back(Span::point(c.lo));
        if (s.is_point() && s.lo == c.lo) inside = true;
        continue;
      }
      Span piece = s;
      if (piece.lo < c.lo) {
        piece.lo = c.lo;
        piece.lo_incl = true;
      }
      if (c.hi < piece.hi) {
        piece.hi = c.hi;
        piece.hi_incl = true;
      }
      if (!piece.is_empty()) pieces.push_back(std::move(piece));
      if (c.lo <= s.lo && s.hi <= c.hi) inside = true;
    }
    if (!inside) clipped = true;
  }
  return {RegionBuilder::build(space, merge_sorted(std::move(pieces))), clipped};
}

Region make_region(const SpaceRef& space, const std::vector<Span>& raw) {
  return canonicalize(raw, space).region;
}

Region closure(const Region& r) {
  std::vector<Span> spans = r.spans();
  for (auto& s : spans) s.lo_incl = s.hi_incl = true;
  return RegionBuilder::build(r.space(), merge_sorted(std::move(spans)));
}

Region complement(const Region& r) {
  const auto& spans = r.spans();
  std::vector<Span> out;
  std::size_t k = 0;
  for (const auto& c : r.space()->components()) {
    if (c.is_point()) {
      if (k < spans.size() && spans[k].lo == c.lo) {
        ++k;
      } else {
        out.push_back(Span::point(c.lo));
      }
      continue;
    }
    Rational cursor = c.lo;
    bool cursor_incl = true;
    while (k < spans.size() && spans[k].hi <= c.hi) {
      const Span& s = spans[k];
      Span gap{cursor, s.lo, cursor_incl, !s.lo_incl};
      if (!gap.is_empty()) out.push_back(std::move(gap));
      cursor = s.hi;
      cursor_incl = !s.hi_incl;
      ++k;
    }
    Span tail{cursor, c.hi, cursor_incl, true};
    if (!tail.is_empty()) out.push_back(std::move(tail));
  }
  return RegionBuilder::build(r.space(), std::move(out));
}

Region interior(const Region& r) { return complement(closure(complement(r))); }

Region perp(const Region& r) { return complement(closure(r)); }

Region unite(const Region& a, const Region& b) {
  require_same_space(a, b);
  std::vector<Span> spans = a.spans();
  spans.insert(spans.end(), b.spans().begin(), b.spans().end());
  return RegionBuilder::build(a.space(), merge_sorted(std::move(spans)));
}

Region intersect(const Region& a, const Region& b) {
  require_same_space(a, b);
  std::vector<Span> out;
  const auto& as = a.spans();
  const auto& bs = b.spans();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < as.size() && j < bs.size()) {
    const Span& x = as[i];
    const Span& y = bs[j];
    Span s;
    if (x.lo < y.lo) {
      s.lo = y.lo;
      s.lo_incl = y.lo_incl;
    } else if (y.lo < x.lo) {
      s.lo = x.lo;
      s.lo_incl = x.lo_incl;
    } else {
      s.lo = x.lo;
      s.lo_incl = x.lo_incl && y.lo_incl;
    }
    if (x.hi < y.hi) {
      s.hi = x.hi;
      s.hi_incl = x.hi_incl;
    } else if (y.hi < x.hi) {
      s.hi = y.hi;
      s.hi_incl = y.hi_incl;
    } else {
      s.hi = x.hi;
      s.hi_incl = x.hi_incl && y.hi_incl;
    }
    if (!s.is_empty()) out.push_back(std::move(s));
    // Advance whichever span ends first.
    if (x.hi < y.hi || (x.hi == y.hi && !x.hi_incl)) {
      ++i;
    } else {
      ++j;
    }
  }
  return RegionBuilder::build(a.space(), merge_sorted(std::move(out)));
}

Region difference(const Region& a, const Region& b) { return intersect(a, complement(b)); }

bool is_subset(const Region& a, const Region& b) { return difference(a, b).empty(); }

bool is_open(const Region& r) { return interior(r) == r; }
bool is_closed(const Region& r) { return closure(r) == r; }
bool is_regular_open(const Region& r) { return interior(closure(r)) == r; }

RopenElem RopenElem::from_region(Region r) {
  if (!is_regular_open(r)) throw Error(ErrorCode::NotRegularOpen, r.str() + " is not regular open");
  return RopenElem(std::move(r));
}

RopenElem RopenElem::zero(const SpaceRef& space) { return RopenElem(Region(space)); }
RopenElem RopenElem::one(const SpaceRef& space) { return RopenElem(Region::full(space)); }

RopenElem regularize(const Region& r) { return RopenElem(interior(closure(r))); }

RopenElem ropen_join(const RopenElem& u, const RopenElem& v) {
  return regularize(unite(u.region(), v.region()));
}

RopenElem ropen_meet(const RopenElem& u, const RopenElem& v) {
  // An intersection of two regular open sets is regular open.
  return RopenElem::from_region(intersect(u.region(), v.region()));
}

RopenElem ropen_neg(const RopenElem& u) { return RopenElem::from_region(perp(u.region())); }

SpaceDecomposition decompose_space(const SpaceRef& space) {
  std::vector<Rational> isolated;
  std::vector<Component> points;
  std::vector<Component> intervals;
  std::vector<Span> point_spans;
  std::vector<Span> interval_spans;
  for (const auto& c : space->components()) {
    if (c.is_point()) {
      isolated.push_back(c.lo);
      points.push_back(c);
      point_spans.push_back(Span::point(c.lo));
    } else {
      intervals.push_back(c);
      interval_spans.push_back(Span::closed(c.lo, c.hi));
    }
  }
  SpaceDecomposition d{std::move(isolated), make_region(space, point_spans),
                       make_region(space, interval_spans), std::nullopt, std::nullopt};
  if (!points.empty()) d.atomic_space = make_space(std::move(points));
  if (!intervals.empty()) d.continuous_space = make_space(std::move(intervals));
  return d;
}

SpaceRef subspace(const Region& closed_region) {
  if (closed_region.empty()) throw Error(ErrorCode::EmptySubspace, "subspace of the empty region");
  if (!is_closed(closed_region)) throw Error(ErrorCode::NotClosed, closed_region.str() + " is not closed");
  std::vector<Component> comps;
  for (const auto& s : closed_region.spans()) {
    comps.push_back(s.is_point() ? Component::point(s.lo) : Component::interval(s.lo, s.hi));
  }
  return make_space(std::move(comps));
}

Region embed(const Region& r, const SpaceRef& ambient) {
  auto c = canonicalize(r.spans(), ambient);
  if (c.clipped) {
    throw Error(ErrorCode::SpaceMismatch, r.str() + " does not lie in " + ambient->str());
  }
  return std::move(c.region);
}

RopenElem theta(const SpaceRef& space, const std::optional<RopenElem>& atomic,
                const std::optional<RopenElem>& continuous) {
  const SpaceDecomposition d = decompose_space(space);
  Region acc(space);
  auto add_part = [&](const std::optional<RopenElem>& w, const std::optional<SpaceRef>& part,
                      const char* which) {
    if (!w) return;
    if (!part) {
      if (!w->region().empty()) {
        throw Error(ErrorCode::SpaceMismatch, std::string(which) + " part of " + space->str() + " is empty");
      }
      return;
    }
    if (!same_space(w->space(), *part)) {
      throw Error(ErrorCode::SpaceMismatch, std::string(which) + " argument lives on " + w->space()->str() +
                                                ", expected " + (*part)->str());
    }
    acc = unite(acc, embed(w->region(), space));
  };
  add_part(atomic, d.atomic_space, "atomic");
  add_part(continuous, d.continuous_space, "continuous");
  return regularize(acc);
}

RopenElem random_regular_open(const SpaceRef& space, std::uint64_t seed, unsigned complexity) {
  if (complexity == 0) throw Error(ErrorCode::InvalidInput, "complexity must be at least 1");
  constexpr std::uint64_t kGrid = 1024;
  Rng rng(seed);
  const auto& comps = space->components();
  const std::uint64_t count = 1 + rng.below(complexity);
  std::vector<Span> raw;
  for (std::uint64_t n = 0; n < count; ++n) {
    const Component& c = comps[rng.below(comps.size())];
    if (c.is_point()) {
      raw.push_back(Span::point(c.lo));
      continue;
    }
    std::uint64_t i = rng.below(kGrid + 1);
    std::uint64_t j = rng.below(kGrid + 1);
    if (i == j) j = i == kGrid ? i - 1 : i + 1;
    if (j < i) std::swap(i, j);
    const Rational width = c.hi - c.lo;
    const Rational lo = c.lo + width * Rational(static_cast<long>(i), static_cast<long>(kGrid));
    const Rational hi = c.lo + width * Rational(static_cast<long>(j), static_cast<long>(kGrid));
    raw.push_back(Span::open(lo, hi));
  }
  return regularize(make_region(space, raw));
}

}  // namespace ropen
