#pragma once

// Continuous piecewise-linear maps between Space1D spaces, with exact
// image/preimage and the regular-open transfer maps
//   psi(U) = int(pi(cl U)),   phi(V) = int(cl(pi^-1(V))).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ropen/interval_space.hpp"

namespace ropen::pl {

struct AffinePiece {
  Rational src_lo;
  Rational src_hi;
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }
  bool is_constant() const { return slope.is_zero(); }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// `pieces[i]` covers the i-th interval component of the domain with
/// consecutive pieces; `point_images` maps each isolated domain point.
struct PLMap {
  SpaceRef domain;
  SpaceRef codomain;
  std::vector<std::vector<AffinePiece>> pieces;
  std::map<Rational, Rational> point_images;
};

/// Throws Error(InvalidInput) for structural problems (wrong piece counts,
/// gaps, zero-length pieces, missing point images), Error(Discontinuity) and
/// Error(ImageEscapesCodomain) with the offending location.
void validate(const PLMap& m);

PLMap identity(const SpaceRef& space);
/// x -> slope*x + intercept on a single interval.
PLMap affine(const SpaceRef& domain, const SpaceRef& codomain, const Rational& slope, const Rational& intercept);
/// Continuous map through the given breakpoints (x_i, y_i) on one interval.
PLMap through_points(const SpaceRef& domain, const SpaceRef& codomain,
                     const std::vector<std::pair<Rational, Rational>>& knots);

Rational evaluate(const PLMap& m, const Rational& x);

Region image(const PLMap& m, const Region& r);
Region preimage(const PLMap& m, const Region& r);

bool is_surjective(const PLMap& m);

enum class ReductionRule { None, IsolatedPoint, ConstantPiece, OverlappingPieces };
std::string_view to_string(ReductionRule rule);

struct IrreducibilityVerdict {
  bool irreducible = false;
  /// Nonempty open U of the domain with image(Y \ U) = X, when reducible.
  std::optional<Region> witness;
  ReductionRule rule = ReductionRule::None;
  /// Basic opens the definitional probe tried (irreducible verdicts only).
  std::size_t probe_samples = 0;
};

struct ProbeOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 0;
};

/// Decides irreducibility. A map is reducible iff (i) removing some isolated
/// domain point keeps it onto, (ii) some piece is constant, or (iii) the
/// relative interiors of some monotone piece's image and of the union of all
/// other images meet. Reducible verdicts carry a witness checked by exact
/// image computation; irreducible verdicts are cross-checked against
/// `find_reducing_open`. Throws Error(NotSurjective).
IrreducibilityVerdict is_irreducible(const PLMap& m, const ProbeOptions& probe = {});

/// Definitional probe: tries seeded random basic opens U (isolated points or
/// subintervals strictly inside a piece) and returns the first with
/// image(Y \ U) = X.
std::optional<Region> find_reducing_open(const PLMap& m, const ProbeOptions& probe);

/// True iff U is a nonempty open set of the domain and image(Y \ U) = X.
bool is_reducing_open(const PLMap& m, const Region& u);

RopenElem psi(const PLMap& m, const RopenElem& u);
RopenElem phi(const PLMap& m, const RopenElem& v);

}  // namespace ropen::pl
