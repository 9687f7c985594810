#include "ropen/boolequiv.hpp"

#include "ropen/errors.hpp"

namespace ropen::equiv {

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::Interval: return "interval";
    case Kind::Point: return "point";
    case Kind::ConvSeq: return "convseq";
    case Kind::Cantor: return "cantor";
  }
  return "interval";
}

Kind kind_from_string(std::string_view name) {
  for (Kind k : {Kind::Interval, Kind::Point, Kind::ConvSeq, Kind::Cantor}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::InvalidInput, "unknown component kind '" + std::string(name) + "'");
}

BoolInvariant invariant(const SpaceDescriptor& d) {
  if (d.components.empty()) throw Error(ErrorCode::EmptyDescriptor, "descriptor has no components");
  BoolInvariant inv;
  std::uint64_t points = 0;
  bool omega = false;
  for (Kind k : d.components) {
    switch (k) {
      case Kind::Point: ++points; break;
      case Kind::ConvSeq: omega = true; break;
      case Kind::Interval:
      case Kind::Cantor: inv.perfect_nonempty = true; break;
    }
  }
  if (!omega) inv.isol_card.finite = points;
  return inv;
}

Equivalence equivalent(const SpaceDescriptor& a, const SpaceDescriptor& b) {
  Equivalence e;
  e.left = invariant(a);
  e.right = invariant(b);
  e.equivalent = e.left == e.right;
  if (e.left.isol_card != e.right.isol_card) {
    e.reason = "isolated point counts differ: " + e.left.isol_card.str() + " vs " + e.right.isol_card.str();
  } else if (e.left.perfect_nonempty != e.right.perfect_nonempty) {
    e.reason = "perfect part is empty on one side only";
  } else {
    e.reason = "same isolated point count and perfect part both " +
               std::string(e.left.perfect_nonempty ? "nonempty" : "empty");
  }
  return e;
}

SpaceDescriptor from_space1d(const Space1D& x) {
  SpaceDescriptor d;
  for (const auto& c : x.components()) d.components.push_back(c.is_point() ? Kind::Point : Kind::Interval);
  return d;
}

}  // namespace ropen::equiv
