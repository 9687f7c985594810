#include "ropen/plmap.hpp"

#include <stdexcept>

#include "ropen/errors.hpp"
#include "ropen/random.hpp"

namespace ropen::pl {

namespace {

std::vector<const Component*> interval_components(const Space1D& s) {
  std::vector<const Component*> out;
  for (const auto& c : s.components()) {
    if (!c.is_point()) out.push_back(&c);
  }
  return out;
}

// s ∩ [p, q], or nullopt when empty.
std::optional<Span> clip(const Span& s, const Rational& p, const Rational& q) {
  Span out = s;
  if (out.lo < p) {
    out.lo = p;
    out.lo_incl = true;
  }
  if (q < out.hi) {
    out.hi = q;
    out.hi_incl = true;
  }
  if (out.is_empty()) return std::nullopt;
  return out;
}

Span map_span(const AffinePiece& f, const Span& s) {
  if (f.is_constant()) return Span::point(f.intercept);
  const Rational a = f.at(s.lo);
  const Rational b = f.at(s.hi);
  if (f.slope.sign() > 0) return {a, b, s.lo_incl, s.hi_incl};
  return {b, a, s.hi_incl, s.lo_incl};
}

// Preimage of t under the (non-constant) affine map, before clipping.
Span pull_span(const AffinePiece& f, const Span& t) {
  const Rational a = (t.lo - f.intercept) / f.slope;
  const Rational b = (t.hi - f.intercept) / f.slope;
  if (f.slope.sign() > 0) return {a, b, t.lo_incl, t.hi_incl};
  return {b, a, t.hi_incl, t.lo_incl};
}

void require_domain(const PLMap& m, const Region& r) {
  if (!same_space(m.domain, r.space())) {
    throw Error(ErrorCode::SpaceMismatch, "region over " + r.space()->str() + " is not in the domain " +
                                              m.domain->str());
  }
}

void require_codomain(const PLMap& m, const Region& r) {
  if (!same_space(m.codomain, r.space())) {
    throw Error(ErrorCode::SpaceMismatch, "region over " + r.space()->str() + " is not in the codomain " +
                                              m.codomain->str());
  }
}

}  // namespace

std::string_view to_string(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::None: return "none";
    case ReductionRule::IsolatedPoint: return "isolated_point";
    case ReductionRule::ConstantPiece: return "constant_piece";
    case ReductionRule::OverlappingPieces: return "overlapping_pieces";
  }
  return "none";
}

void validate(const PLMap& m) {
  if (!m.domain || !m.codomain) throw Error(ErrorCode::InvalidInput, "map needs a domain and a codomain");
  const auto comps = interval_components(*m.domain);
  if (comps.size() != m.pieces.size()) {
    throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(comps.size()) +
                                             " piece lists (one per interval component), got " +
                                             std::to_string(m.pieces.size()));
  }
  auto in_codomain = [&](const Rational& a, const Rational& b) {
    const auto ca = m.codomain->component_of(a);
    return ca && ca == m.codomain->component_of(b);
  };
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Component& c = *comps[i];
    const auto& ps = m.pieces[i];
    if (ps.empty()) throw Error(ErrorCode::InvalidInput, "no pieces for component starting at " + c.lo.str());
    if (ps.front().src_lo != c.lo || ps.back().src_hi != c.hi) {
      throw Error(ErrorCode::InvalidInput, "pieces must cover [" + c.lo.str() + "," + c.hi.str() + "] exactly");
    }
    for (std::size_t k = 0; k < ps.size(); ++k) {
      const AffinePiece& f = ps[k];
      if (!(f.src_lo < f.src_hi)) {
        throw Error(ErrorCode::InvalidInput, "zero-length piece at " + f.src_lo.str());
      }
      if (k + 1 < ps.size()) {
        const AffinePiece& g = ps[k + 1];
        if (f.src_hi != g.src_lo) {
          throw Error(ErrorCode::InvalidInput, "pieces are not consecutive at " + f.src_hi.str());
        }
        if (f.at(f.src_hi) != g.at(g.src_lo)) {
          throw Error(ErrorCode::Discontinuity, "at x=" + f.src_hi.str() + ": " + f.at(f.src_hi).str() +
                                                    " vs " + g.at(g.src_lo).str());
        }
      }
      const Rational a = f.at(f.src_lo);
      const Rational b = f.at(f.src_hi);
      if (!in_codomain(min(a, b), max(a, b))) {
        throw Error(ErrorCode::ImageEscapesCodomain, "piece on [" + f.src_lo.str() + "," + f.src_hi.str() +
                                                         "] maps onto [" + min(a, b).str() + "," +
                                                         max(a, b).str() + "]");
      }
    }
  }
  std::size_t points = 0;
  for (const auto& c : m.domain->components()) {
    if (!c.is_point()) continue;
    ++points;
    auto it = m.point_images.find(c.lo);
    if (it == m.point_images.end()) throw Error(ErrorCode::InvalidInput, "no image for point " + c.lo.str());
    if (!m.codomain->contains(it->second)) {
      throw Error(ErrorCode::ImageEscapesCodomain, "point " + c.lo.str() + " maps to " + it->second.str());
    }
  }
  if (points != m.point_images.size()) {
    throw Error(ErrorCode::InvalidInput, "point_images names points that are not isolated points of the domain");
  }
}

PLMap identity(const SpaceRef& space) { return affine(space, space, 1, 0); }

PLMap affine(const SpaceRef& domain, const SpaceRef& codomain, const Rational& slope, const Rational& intercept) {
  PLMap m{domain, codomain, {}, {}};
  for (const auto& c : domain->components()) {
    if (c.is_point()) {
      m.point_images.emplace(c.lo, slope * c.lo + intercept);
    } else {
      m.pieces.push_back({AffinePiece{c.lo, c.hi, slope, intercept}});
    }
  }
  validate(m);
  return m;
}

PLMap through_points(const SpaceRef& domain, const SpaceRef& codomain,
                     const std::vector<std::pair<Rational, Rational>>& knots) {
  if (knots.size() < 2) throw Error(ErrorCode::InvalidInput, "need at least two knots");
  std::vector<AffinePiece> ps;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const auto& [x0, y0] = knots[k];
    const auto& [x1, y1] = knots[k + 1];
    if (!(x0 < x1)) throw Error(ErrorCode::InvalidInput, "knots must be strictly increasing in x");
    const Rational slope = (y1 - y0) / (x1 - x0);
    ps.push_back({x0, x1, slope, y0 - slope * x0});
  }
  PLMap m{domain, codomain, {std::move(ps)}, {}};
  validate(m);
  return m;
}

Rational evaluate(const PLMap& m, const Rational& x) {
  const auto idx = m.domain->component_of(x);
  if (!idx) throw Error(ErrorCode::InvalidInput, x.str() + " is not in the domain");
  const Component& c = m.domain->components()[*idx];
  if (c.is_point()) return m.point_images.at(c.lo);
  std::size_t interval_index = 0;
  for (std::size_t k = 0; k < *idx; ++k) interval_index += m.domain->components()[k].is_point() ? 0 : 1;
  for (const auto& f : m.pieces.at(interval_index)) {
    if (f.src_lo <= x && x <= f.src_hi) return f.at(x);
  }
  throw Error(ErrorCode::InvalidInput, "no piece covers " + x.str());
}

Region image(const PLMap& m, const Region& r) {
  require_domain(m, r);
  const auto& comps = m.domain->components();
  std::vector<Span> raw;
  std::size_t interval_index = 0;
  std::size_t k = 0;
  const auto& spans = r.spans();
  for (const auto& c : comps) {
    if (c.is_point()) {
      if (k < spans.size() && spans[k].lo == c.lo) {
        raw.push_back(Span::point(m.point_images.at(c.lo)));
        ++k;
      }
      continue;
    }
    const auto& ps = m.pieces[interval_index++];
    while (k < spans.size() && spans[k].hi <= c.hi) {
      for (const auto& f : ps) {
        if (auto part = clip(spans[k], f.src_lo, f.src_hi)) raw.push_back(map_span(f, *part));
      }
      ++k;
    }
  }
  return make_region(m.codomain, raw);
}

Region preimage(const PLMap& m, const Region& r) {
  require_codomain(m, r);
  std::vector<Span> raw;
  std::size_t interval_index = 0;
  for (const auto& c : m.domain->components()) {
    if (c.is_point()) {
      if (r.contains(m.point_images.at(c.lo))) raw.push_back(Span::point(c.lo));
      continue;
    }
    for (const auto& f : m.pieces[interval_index]) {
      if (f.is_constant()) {
        if (r.contains(f.intercept)) raw.push_back(Span::closed(f.src_lo, f.src_hi));
        continue;
      }
      for (const auto& t : r.spans()) {
        if (auto part = clip(pull_span(f, t), f.src_lo, f.src_hi)) raw.push_back(*part);
      }
    }
    ++interval_index;
  }
  return make_region(m.domain, raw);
}

bool is_surjective(const PLMap& m) { return image(m, Region::full(m.domain)) == Region::full(m.codomain); }

bool is_reducing_open(const PLMap& m, const Region& u) {
  require_domain(m, u);
  if (u.empty() || !is_open(u)) return false;
  return image(m, complement(u)) == Region::full(m.codomain);
}

std::optional<Region> find_reducing_open(const PLMap& m, const ProbeOptions& probe) {
  constexpr long kGrid = 1024;
  struct Site {
    const Component* point = nullptr;
    const AffinePiece* piece = nullptr;
  };
  std::vector<Site> sites;
  std::size_t interval_index = 0;
  for (const auto& c : m.domain->components()) {
    if (c.is_point()) {
      sites.push_back({&c, nullptr});
    } else {
      for (const auto& f : m.pieces[interval_index]) sites.push_back({nullptr, &f});
      ++interval_index;
    }
  }
  for (std::size_t i = 0; i < probe.samples; ++i) {
    Rng rng(sample_seed(probe.seed, i));
    const Site& site = sites[rng.below(sites.size())];
    Region u(m.domain);
    if (site.point) {
      u = make_region(m.domain, {Span::point(site.point->lo)});
    } else {
      const AffinePiece& f = *site.piece;
      long a = 1 + static_cast<long>(rng.below(kGrid - 1));
      long b = 1 + static_cast<long>(rng.below(kGrid - 1));
      if (a == b) b = a == kGrid - 1 ? a - 1 : a + 1;
      if (b < a) std::swap(a, b);
      const Rational width = f.src_hi - f.src_lo;
      u = make_region(m.domain, {Span::open(f.src_lo + width * Rational(a, kGrid),
                                            f.src_lo + width * Rational(b, kGrid))});
    }
    if (is_reducing_open(m, u)) return u;
  }
  return std::nullopt;
}

IrreducibilityVerdict is_irreducible(const PLMap& m, const ProbeOptions& probe) {
  validate(m);
  if (!is_surjective(m)) throw Error(ErrorCode::NotSurjective, "map onto " + m.codomain->str() + " is not onto");

  auto reducible = [&](Region u, ReductionRule rule) {
    if (!is_reducing_open(m, u)) {
      throw std::logic_error("reduction witness " + u.str() + " failed exact verification");
    }
    return IrreducibilityVerdict{false, std::move(u), rule, 0};
  };

  for (const auto& c : m.domain->components()) {
    if (!c.is_point()) continue;
    Region u = make_region(m.domain, {Span::point(c.lo)});
    if (is_reducing_open(m, u)) return IrreducibilityVerdict{false, std::move(u), ReductionRule::IsolatedPoint, 0};
  }

  for (const auto& ps : m.pieces) {
    for (const auto& f : ps) {
      if (f.is_constant()) {
        return reducible(make_region(m.domain, {Span::open(f.src_lo, f.src_hi)}), ReductionRule::ConstantPiece);
      }
    }
  }

  // Images of every piece and point, in domain order.
  std::vector<const AffinePiece*> monotone;
  std::vector<Region> images;
  for (const auto& ps : m.pieces) {
    for (const auto& f : ps) {
      monotone.push_back(&f);
      images.push_back(make_region(m.codomain, {map_span(f, Span::closed(f.src_lo, f.src_hi))}));
    }
  }
  Region point_images(m.codomain);
  for (const auto& [y, x] : m.point_images) point_images = unite(point_images, make_region(m.codomain, {Span::point(x)}));

  for (std::size_t i = monotone.size(); i-- > 0;) {
    Region others = point_images;
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (j != i) others = unite(others, images[j]);
    }
    const Region overlap = intersect(interior(images[i]), interior(others));
    if (overlap.empty()) continue;
    // Remove the part of piece i that maps onto the lower half of the first
    // overlap span; other pieces still cover its closure.
    const Span& s = overlap.spans().front();
    const AffinePiece& f = *monotone[i];
    const Rational c = s.lo;
    const Rational d = midpoint(s.lo, s.hi);
    Rational x0 = (c - f.intercept) / f.slope;
    Rational x1 = (d - f.intercept) / f.slope;
    if (x1 < x0) std::swap(x0, x1);
    return reducible(make_region(m.domain, {Span::open(max(x0, f.src_lo), min(x1, f.src_hi))}),
                     ReductionRule::OverlappingPieces);
  }

  if (auto u = find_reducing_open(m, probe)) {
    throw std::logic_error("irreducible verdict contradicted by reducing open " + u->str());
  }
  return IrreducibilityVerdict{true, std::nullopt, ReductionRule::None, probe.samples};
}

RopenElem psi(const PLMap& m, const RopenElem& u) {
  require_domain(m, u.region());
  return RopenElem::from_region(interior(image(m, closure(u.region()))));
}

RopenElem phi(const PLMap& m, const RopenElem& v) {
  require_codomain(m, v.region());
  return regularize(preimage(m, v.region()));
}

}  // namespace ropen::pl
