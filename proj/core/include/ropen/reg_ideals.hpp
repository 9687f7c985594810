#pragma once

// Regular ideals of C(X) held by their regular open supports, with
// piecewise-linear function witnesses and the transfer maps
//   upsilon(J) = alpha(J)^perp-perp,   omega(K) = alpha^-1(K)
// for alpha(f) = f o pi.

#include <map>
#include <utility>
#include <vector>

#include "ropen/cantor.hpp"
#include "ropen/interval_space.hpp"
#include "ropen/plmap.hpp"

namespace ropen::ideals {

/// Continuous piecewise-linear real function on a Space1D. Piece layout
/// matches PLMap: one consecutive piece list per interval component.
struct PLFunc {
  SpaceRef space;
  std::vector<std::vector<pl::AffinePiece>> pieces;
  std::map<Rational, Rational> point_values;
};

/// Throws Error(InvalidInput) or Error(Discontinuity).
void validate(const PLFunc& f);

PLFunc constant(const SpaceRef& space, const Rational& value);
/// x -> slope*x + intercept on every component.
PLFunc affine(const SpaceRef& space, const Rational& slope, const Rational& intercept);
/// Function through the breakpoints (x_i, y_i) on a one-interval space.
PLFunc through_points(const SpaceRef& space, const std::vector<std::pair<Rational, Rational>>& knots);

Rational evaluate(const PLFunc& f, const Rational& x);

/// {x : f(x) != 0}, exact and open.
Region pl_supp(const PLFunc& f);

/// A function whose support is exactly the open region g: hats on interior
/// spans, ramps at component ends, 1 on whole components and isolated
/// points. Throws Error(InvalidInput) when g is not open.
PLFunc support_witness(const Region& g);

class RegIdeal {
 public:
  explicit RegIdeal(RopenElem support) : support_(std::move(support)) {}
  /// ideal(G) for a regular open region G; throws Error(NotRegularOpen).
  static RegIdeal from_support(const Region& g) { return RegIdeal(RopenElem::from_region(g)); }

  const RopenElem& support() const { return support_; }
  const SpaceRef& space() const { return support_.space(); }

  friend bool operator==(const RegIdeal&, const RegIdeal&) = default;

 private:
  RopenElem support_;
};

/// supp(J).
inline const RopenElem& supp(const RegIdeal& j) { return j.support(); }

/// pl_supp(f) inside supp(J). Throws Error(SpaceMismatch).
bool in_ideal(const PLFunc& f, const RegIdeal& j);

RegIdeal annihilator(const RegIdeal& j);
RegIdeal ideal_join(const RegIdeal& a, const RegIdeal& b);
RegIdeal ideal_meet(const RegIdeal& a, const RegIdeal& b);
RegIdeal ideal_neg(const RegIdeal& j);

/// alpha: C(X) -> C(Y), f -> f o pi, for a valid surjective PLMap pi: Y -> X.
/// The irreducibility verdict is computed once.
class DualHom {
 public:
  /// Throws the PLMap validation errors and Error(NotSurjective).
  explicit DualHom(pl::PLMap map, const pl::ProbeOptions& probe = {});

  const pl::PLMap& map() const { return map_; }
  const pl::IrreducibilityVerdict& verdict() const { return verdict_; }
  bool essential() const { return verdict_.irreducible; }

 private:
  pl::PLMap map_;
  pl::IrreducibilityVerdict verdict_;
};

/// Support Phi(supp J). Throws Error(NotIrreducible) or Error(SpaceMismatch).
RegIdeal upsilon(const DualHom& alpha, const RegIdeal& j);
/// Support Psi(supp K). Throws Error(NotIrreducible) or Error(SpaceMismatch).
RegIdeal omega(const DualHom& alpha, const RegIdeal& k);

/// Regular ideal of C(C) with clopen support.
struct CantorIdeal {
  cantor::CantorClopen support;
  friend bool operator==(const CantorIdeal&, const CantorIdeal&) = default;
};

/// Upsilon and Omega for the binary-expansion cover C -> [0,1].
CantorIdeal upsilon_cantor(const RegIdeal& j);
RegIdeal omega_cantor(const CantorIdeal& k);

/// f o pi. Throws Error(SpaceMismatch) unless f lives on pi's codomain.
PLFunc pullback(const pl::PLMap& pi, const PLFunc& f);

/// alpha is an essential extension iff pi is irreducible. Throws
/// Error(NotSurjective).
bool is_essential_extension(const pl::PLMap& pi, const pl::ProbeOptions& probe = {});
/// Same question for the binary cover, decided on cylinders up to `depth`.
bool is_essential_extension_cantor(std::size_t depth = 8);

}  // namespace ropen::ideals
