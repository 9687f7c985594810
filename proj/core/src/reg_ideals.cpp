#include "ropen/reg_ideals.hpp"

#include <algorithm>

#include "ropen/errors.hpp"

namespace ropen::ideals {

namespace {

std::vector<pl::AffinePiece> pieces_through(const std::vector<std::pair<Rational, Rational>>& knots) {
  std::vector<pl::AffinePiece> ps;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const auto& [x0, y0] = knots[k];
    const auto& [x1, y1] = knots[k + 1];
    if (!(x0 < x1)) throw Error(ErrorCode::InvalidInput, "knots must be strictly increasing in x");
    const Rational slope = (y1 - y0) / (x1 - x0);
    ps.push_back({x0, x1, slope, y0 - slope * x0});
  }
  return ps;
}

const std::vector<pl::AffinePiece>& pieces_at(const PLFunc& f, std::size_t component) {
  std::size_t interval_index = 0;
  for (std::size_t k = 0; k < component; ++k) interval_index += f.space->components()[k].is_point() ? 0 : 1;
  return f.pieces.at(interval_index);
}

void require_same(const SpaceRef& a, const SpaceRef& b) {
  if (!same_space(a, b)) throw Error(ErrorCode::SpaceMismatch, a->str() + " vs " + b->str());
}

}  // namespace

void validate(const PLFunc& f) {
  if (!f.space) throw Error(ErrorCode::InvalidInput, "function needs a space");
  std::size_t intervals = 0;
  std::size_t points = 0;
  for (const auto& c : f.space->components()) {
    if (c.is_point()) {
      ++points;
      if (!f.point_values.contains(c.lo)) throw Error(ErrorCode::InvalidInput, "no value for point " + c.lo.str());
      continue;
    }
    if (intervals >= f.pieces.size()) throw Error(ErrorCode::InvalidInput, "missing pieces for " + c.lo.str());
    const auto& ps = f.pieces[intervals++];
    if (ps.empty() || ps.front().src_lo != c.lo || ps.back().src_hi != c.hi) {
      throw Error(ErrorCode::InvalidInput, "pieces must cover [" + c.lo.str() + "," + c.hi.str() + "] exactly");
    }
    for (std::size_t k = 0; k < ps.size(); ++k) {
      if (!(ps[k].src_lo < ps[k].src_hi)) throw Error(ErrorCode::InvalidInput, "zero-length piece at " + ps[k].src_lo.str());
      if (k + 1 == ps.size()) continue;
      if (ps[k].src_hi != ps[k + 1].src_lo) {
        throw Error(ErrorCode::InvalidInput, "pieces are not consecutive at " + ps[k].src_hi.str());
      }
      const Rational a = ps[k].at(ps[k].src_hi);
      const Rational b = ps[k + 1].at(ps[k + 1].src_lo);
      if (a != b) throw Error(ErrorCode::Discontinuity, "at x=" + ps[k].src_hi.str() + ": " + a.str() + " vs " + b.str());
    }
  }
  if (intervals != f.pieces.size()) throw Error(ErrorCode::InvalidInput, "more piece lists than interval components");
  if (points != f.point_values.size()) {
    throw Error(ErrorCode::InvalidInput, "point_values names points that are not isolated points of the space");
  }
}

PLFunc constant(const SpaceRef& space, const Rational& value) { return affine(space, 0, value); }

PLFunc affine(const SpaceRef& space, const Rational& slope, const Rational& intercept) {
  PLFunc f{space, {}, {}};
  for (const auto& c : space->components()) {
    if (c.is_point()) {
      f.point_values.emplace(c.lo, slope * c.lo + intercept);
    } else {
      f.pieces.push_back({pl::AffinePiece{c.lo, c.hi, slope, intercept}});
    }
  }
  return f;
}

PLFunc through_points(const SpaceRef& space, const std::vector<std::pair<Rational, Rational>>& knots) {
  PLFunc f{space, {pieces_through(knots)}, {}};
  validate(f);
  return f;
}

Rational evaluate(const PLFunc& f, const Rational& x) {
  const auto idx = f.space->component_of(x);
  if (!idx) throw Error(ErrorCode::InvalidInput, x.str() + " is not in the space");
  const Component& c = f.space->components()[*idx];
  if (c.is_point()) return f.point_values.at(c.lo);
  for (const auto& p : pieces_at(f, *idx)) {
    if (p.src_lo <= x && x <= p.src_hi) return p.at(x);
  }
  throw Error(ErrorCode::InvalidInput, "no piece covers " + x.str());
}

Region pl_supp(const PLFunc& f) {
  std::vector<Span> raw;
  std::size_t interval_index = 0;
  for (const auto& c : f.space->components()) {
    if (c.is_point()) {
      if (!f.point_values.at(c.lo).is_zero()) raw.push_back(Span::point(c.lo));
      continue;
    }
    for (const auto& p : f.pieces[interval_index]) {
      if (p.is_constant()) {
        if (!p.intercept.is_zero()) raw.push_back(Span::closed(p.src_lo, p.src_hi));
        continue;
      }
      const Rational root = -p.intercept / p.slope;
      if (root < p.src_lo || p.src_hi < root) {
        raw.push_back(Span::closed(p.src_lo, p.src_hi));
        continue;
      }
      if (p.src_lo < root) raw.push_back({p.src_lo, root, true, false});
      if (root < p.src_hi) raw.push_back({root, p.src_hi, false, true});
    }
    ++interval_index;
  }
  return make_region(f.space, raw);
}

PLFunc support_witness(const Region& g) {
  if (!is_open(g)) throw Error(ErrorCode::InvalidInput, g.str() + " is not open");
  const SpaceRef& space = g.space();
  PLFunc f{space, {}, {}};
  for (const auto& c : space->components()) {
    if (c.is_point()) {
      f.point_values.emplace(c.lo, g.contains(c.lo) ? Rational(1) : Rational(0));
      continue;
    }
    std::vector<std::pair<Rational, Rational>> knots;
    auto push = [&](const Rational& x, const Rational& y) {
      if (!knots.empty() && knots.back().first == x) return;  // shared zero between spans
      knots.emplace_back(x, y);
    };
    for (const auto& s : g.spans()) {
      if (s.hi < c.lo || c.hi < s.lo) continue;
      push(s.lo, s.lo_incl ? 1 : 0);
      if (!s.lo_incl && !s.hi_incl) push(midpoint(s.lo, s.hi), 1);
      push(s.hi, s.hi_incl ? 1 : 0);
    }
    if (knots.empty() || c.lo < knots.front().first) knots.insert(knots.begin(), {c.lo, 0});
    if (knots.back().first < c.hi) knots.emplace_back(c.hi, 0);
    f.pieces.push_back(pieces_through(knots));
  }
  validate(f);
  return f;
}

bool in_ideal(const PLFunc& f, const RegIdeal& j) {
  require_same(f.space, j.space());
  return is_subset(pl_supp(f), j.support().region());
}

RegIdeal annihilator(const RegIdeal& j) { return RegIdeal(ropen_neg(j.support())); }

RegIdeal ideal_join(const RegIdeal& a, const RegIdeal& b) {
  require_same(a.space(), b.space());
  return RegIdeal(ropen_join(a.support(), b.support()));
}

RegIdeal ideal_meet(const RegIdeal& a, const RegIdeal& b) {
  require_same(a.space(), b.space());
  return RegIdeal(ropen_meet(a.support(), b.support()));
}

RegIdeal ideal_neg(const RegIdeal& j) { return annihilator(j); }

DualHom::DualHom(pl::PLMap map, const pl::ProbeOptions& probe) : map_(std::move(map)) {
  verdict_ = pl::is_irreducible(map_, probe);
}

namespace {

void require_essential(const DualHom& alpha) {
  if (!alpha.essential()) {
    const auto& w = alpha.verdict().witness;
    throw Error(ErrorCode::NotIrreducible, "the map is reducible" + (w ? ": removable open set " + w->str() : ""));
  }
}

}  // namespace

RegIdeal upsilon(const DualHom& alpha, const RegIdeal& j) {
  require_essential(alpha);
  return RegIdeal(pl::phi(alpha.map(), j.support()));
}

RegIdeal omega(const DualHom& alpha, const RegIdeal& k) {
  require_essential(alpha);
  return RegIdeal(pl::psi(alpha.map(), k.support()));
}

CantorIdeal upsilon_cantor(const RegIdeal& j) { return {cantor::phi_c(j.support())}; }

RegIdeal omega_cantor(const CantorIdeal& k) { return RegIdeal(cantor::psi_c(k.support)); }

PLFunc pullback(const pl::PLMap& pi, const PLFunc& f) {
  if (!same_space(pi.codomain, f.space)) {
    throw Error(ErrorCode::SpaceMismatch, "function lives on " + f.space->str() + ", map lands in " +
                                              pi.codomain->str());
  }
  PLFunc out{pi.domain, {}, {}};
  for (const auto& [y, x] : pi.point_images) out.point_values.emplace(y, evaluate(f, x));
  for (const auto& ps : pi.pieces) {
    std::vector<pl::AffinePiece> composed;
    for (const auto& p : ps) {
      if (p.is_constant()) {
        composed.push_back({p.src_lo, p.src_hi, 0, evaluate(f, p.intercept)});
        continue;
      }
      // Split [src_lo, src_hi] where p crosses a breakpoint of f.
      const Rational a = p.at(p.src_lo);
      const Rational b = p.at(p.src_hi);
      const Rational lo = min(a, b);
      const Rational hi = max(a, b);
      const auto& fps = pieces_at(f, *f.space->component_of(lo));
      std::vector<Rational> cuts{p.src_lo, p.src_hi};
      for (const auto& q : fps) {
        if (lo < q.src_lo && q.src_lo < hi) cuts.push_back((q.src_lo - p.intercept) / p.slope);
      }
      std::sort(cuts.begin(), cuts.end());
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const Rational xm = p.at(midpoint(cuts[k], cuts[k + 1]));
        for (const auto& q : fps) {
          if (q.src_lo <= xm && xm <= q.src_hi) {
            composed.push_back({cuts[k], cuts[k + 1], q.slope * p.slope, q.slope * p.intercept + q.intercept});
            break;
          }
        }
      }
    }
    out.pieces.push_back(std::move(composed));
  }
  validate(out);
  return out;
}

bool is_essential_extension(const pl::PLMap& pi, const pl::ProbeOptions& probe) {
  return pl::is_irreducible(pi, probe).irreducible;
}

bool is_essential_extension_cantor(std::size_t depth) { return cantor::check_irreducible_cantor(depth).passed; }

}  // namespace ropen::ideals
