#include "ropen/finball.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "ropen/errors.hpp"

namespace ropen::fin {

namespace {

std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void require_exhaustive(std::size_t n, const char* what) {
  if (n > kMaxExhaustiveAtoms) {
    throw Error(ErrorCode::TooLarge, std::string(what) + " has " + std::to_string(n) +
                                         " points; exhaustive checks stop at " +
                                         std::to_string(kMaxExhaustiveAtoms));
  }
}

std::vector<std::string> labels_of_mask(const std::vector<std::string>& labels, std::uint64_t mask) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if ((mask >> k) & 1U) out.push_back(labels[k]);
  }
  return out;
}

}  // namespace

FiniteBooleanAlgebra::FiniteBooleanAlgebra(std::vector<std::string> atom_labels) : labels_(std::move(atom_labels)) {
  if (labels_.empty()) throw Error(ErrorCode::InvalidInput, "a Boolean algebra needs at least one atom");
  if (labels_.size() > kMaxAtoms) {
    throw Error(ErrorCode::TooLarge, "at most " + std::to_string(kMaxAtoms) + " atoms are supported");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Error(ErrorCode::InvalidInput, "atom labels must be distinct");
  mask_ = full_mask(labels_.size());
}

FiniteBooleanAlgebra FiniteBooleanAlgebra::with_atoms(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("a" + std::to_string(k));
  return FiniteBooleanAlgebra(std::move(labels));
}

Element FiniteBooleanAlgebra::element(const std::vector<std::string>& labels) const {
  Element e;
  for (const auto& l : labels) {
    auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) throw Error(ErrorCode::InvalidInput, "unknown atom '" + l + "'");
    e.bits |= std::uint64_t{1} << (it - labels_.begin());
  }
  return e;
}

std::vector<std::string> FiniteBooleanAlgebra::labels_of(Element e) const { return labels_of_mask(labels_, e.bits); }

Element ba_eval(const FiniteBooleanAlgebra& b, const BooleanTerm& term, const Environment& env) {
  using Op = BooleanTerm::Op;
  auto arity = [&](std::size_t expected) {
    if (term.args.size() != expected) {
      throw Error(ErrorCode::ArityMismatch, "operator expects " + std::to_string(expected) + " argument(s), got " +
                                                std::to_string(term.args.size()));
    }
  };
  switch (term.op) {
    case Op::Var: {
      arity(0);
      auto it = env.find(term.name);
      if (it == env.end()) throw Error(ErrorCode::UnboundName, "'" + term.name + "' is not bound");
      if (!b.contains(it->second)) {
        throw Error(ErrorCode::InvalidInput, "value of '" + term.name + "' is not an element of the algebra");
      }
      return it->second;
    }
    case Op::Zero:
      arity(0);
      return b.zero();
    case Op::One:
      arity(0);
      return b.one();
    case Op::Neg:
      arity(1);
      return b.neg(ba_eval(b, term.args[0], env));
    case Op::Join:
      arity(2);
      return b.join(ba_eval(b, term.args[0], env), ba_eval(b, term.args[1], env));
    case Op::Meet:
      arity(2);
      return b.meet(ba_eval(b, term.args[0], env), ba_eval(b, term.args[1], env));
  }
  throw Error(ErrorCode::InvalidInput, "unknown operator");
}

std::vector<TwoValuedHom> dual_space(const FiniteBooleanAlgebra& b) {
  std::vector<TwoValuedHom> homs(b.size());
  for (std::size_t k = 0; k < homs.size(); ++k) homs[k].atom_index = k;
  return homs;
}

std::vector<TwoValuedHom> phi_hat(const FiniteBooleanAlgebra& b, Element v) {
  std::vector<TwoValuedHom> out;
  for (const auto& p : dual_space(b)) {
    if (p.eval(v)) out.push_back(p);
  }
  return out;
}

FiniteDiscreteSpace FiniteDiscreteSpace::with_points(std::size_t n, const std::string& prefix) {
  FiniteDiscreteSpace s;
  for (std::size_t k = 0; k < n; ++k) s.point_labels.push_back(prefix + std::to_string(k));
  return s;
}

FinCover gleason_cover(const FiniteDiscreteSpace& x, std::span<const std::size_t> atom_order) {
  const std::size_t n = x.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "the space must be nonempty");
  require_exhaustive(n, "space");
  std::vector<std::size_t> order(atom_order.begin(), atom_order.end());
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  {
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> ident(n);
    std::iota(ident.begin(), ident.end(), std::size_t{0});
    if (sorted != ident) throw Error(ErrorCode::InvalidInput, "atom_order must be a permutation of the atoms");
  }

  // Ropen of a finite discrete space is its power set; cl V = V.
  const std::uint64_t all = full_mask(n);
  FinCover cover;
  cover.codomain = x;
  cover.table.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const TwoValuedHom p{order[k]};
    std::uint64_t meet = all;
    for (std::uint64_t v = 0; v <= all; ++v) {
      if (p.eval(Element{v})) meet &= v;
    }
    if (std::popcount(meet) != 1) {
      throw Error(ErrorCode::NotSingleton, "intersection for homomorphism " + std::to_string(k) + " has " +
                                               std::to_string(std::popcount(meet)) + " points");
    }
    cover.table[k] = static_cast<std::size_t>(std::countr_zero(meet));
    cover.domain.point_labels.push_back("p(" + x.point_labels[order[k]] + ")");
  }
  cover.hom_atoms = order;
  return cover;
}

VerificationReport verify_projective_cover(const FinCover& cover) {
  const std::size_t n = cover.domain.size();
  const std::size_t m = cover.codomain.size();
  require_exhaustive(n, "cover domain");
  require_exhaustive(m, "cover codomain");
  if (cover.table.size() != n) throw Error(ErrorCode::InvalidInput, "cover table size does not match its domain");
  for (std::size_t t : cover.table) {
    if (t >= m) throw Error(ErrorCode::InvalidInput, "cover table points outside the codomain");
  }
  if (cover.hom_atoms && cover.hom_atoms->size() != n) {
    throw Error(ErrorCode::InvalidInput, "hom_atoms size does not match the domain");
  }

  const std::uint64_t all_p = full_mask(n);
  const std::uint64_t all_x = full_mask(m);
  const auto& plabels = cover.domain.point_labels;
  const auto& xlabels = cover.codomain.point_labels;

  auto image = [&](std::uint64_t e) {
    std::uint64_t out = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if ((e >> p) & 1U) out |= std::uint64_t{1} << cover.table[p];
    }
    return out;
  };
  auto preimage = [&](std::uint64_t v) {
    std::uint64_t out = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if ((v >> cover.table[p]) & 1U) out |= std::uint64_t{1} << p;
    }
    return out;
  };
  // Stone map: points of a dual evaluate their atom; otherwise a point
  // acts as evaluation at its image.
  auto stone_phi = [&](std::uint64_t v) {
    std::uint64_t out = 0;
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t at = cover.hom_atoms ? (*cover.hom_atoms)[p] : cover.table[p];
      if ((v >> at) & 1U) out |= std::uint64_t{1} << p;
    }
    return out;
  };

  VerificationReport r;

  const std::uint64_t whole = image(all_p);
  r.surjective = whole == all_x;
  if (!r.surjective) r.surjective_witness = labels_of_mask(xlabels, all_x & ~whole);

  r.irreducible = true;
  for (std::uint64_t s = 0; s < all_p; ++s) {
    if (image(s) == all_x) {
      r.irreducible = false;
      r.irreducible_witness = labels_of_mask(plabels, s);
      break;
    }
  }

  // Every h with f∘h = f maps each point into its own fiber.
  {
    std::vector<std::vector<std::size_t>> choices(n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (cover.table[q] == cover.table[p]) choices[p].push_back(q);
      }
    }
    std::vector<std::size_t> idx(n, 0);
    r.rigid = true;
    while (true) {
      std::vector<std::size_t> h(n);
      bool identity = true;
      for (std::size_t p = 0; p < n; ++p) {
        h[p] = choices[p][idx[p]];
        identity = identity && h[p] == p;
      }
      if (!identity) {
        r.rigid = false;
        r.rigid_witness = h;
        break;
      }
      std::size_t p = 0;
      while (p < n && ++idx[p] == choices[p].size()) idx[p++] = 0;
      if (p == n) break;
    }
  }

  r.phi_eq_cl_preimage = true;
  r.onto_sandwich = true;
  r.psi_inverts_phi = true;
  for (std::uint64_t v = 0; v <= all_x; ++v) {
    const std::uint64_t phi_v = stone_phi(v);
    if (r.phi_eq_cl_preimage && phi_v != preimage(v)) {
      r.phi_eq_cl_preimage = false;
      r.phi_witness = labels_of_mask(xlabels, v);
    }
    const std::uint64_t f_phi = image(phi_v);
    if (r.onto_sandwich && !((v & ~f_phi) == 0 && (f_phi & ~v) == 0)) {
      r.onto_sandwich = false;
      r.sandwich_witness = labels_of_mask(xlabels, v);
    }
    if (r.psi_inverts_phi && image(phi_v) != v) {
      r.psi_inverts_phi = false;
      r.psi_witness = labels_of_mask(xlabels, v);
    }
  }
  if (r.psi_inverts_phi) {
    for (std::uint64_t e = 0; e <= all_p; ++e) {
      if (stone_phi(image(e)) != e) {
        r.psi_inverts_phi = false;
        r.psi_witness = labels_of_mask(plabels, e);
        break;
      }
    }
  }
  return r;
}

std::size_t count_cover_isomorphisms(const FinCover& a, const FinCover& b) {
  const std::size_t n = a.domain.size();
  if (n > 10) throw Error(ErrorCode::TooLarge, "permutation enumeration stops at 10 points");
  if (b.domain.size() != n || !(a.codomain == b.codomain)) return 0;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t p = 0; p < n && ok; ++p) ok = b.table[perm[p]] == a.table[p];
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::optional<std::vector<std::size_t>> iso_check(const FiniteBooleanAlgebra& b1, const FiniteBooleanAlgebra& b2) {
  if (b1.size() != b2.size()) return std::nullopt;
  std::vector<std::size_t> bijection(b1.size());
  std::iota(bijection.begin(), bijection.end(), std::size_t{0});
  return bijection;
}

Element map_element(std::span<const std::size_t> bijection, Element e) {
  Element out;
  for (std::size_t k = 0; k < bijection.size(); ++k) {
    if (e.has(k)) out.bits |= std::uint64_t{1} << bijection[k];
  }
  return out;
}

FiniteBooleanAlgebra relativize(const FiniteBooleanAlgebra& b, Element e) {
  if (!b.contains(e)) throw Error(ErrorCode::InvalidInput, "relativizing element is not in the algebra");
  if (e.bits == 0) throw Error(ErrorCode::EmptyRelativization, "relativization to 0 is the degenerate algebra");
  return FiniteBooleanAlgebra(b.labels_of(e));
}

AtomicAtomless decompose_atomic_atomless(const FiniteBooleanAlgebra& b) {
  // The join of all atoms is 1, so B(a) = B and B(¬a) is degenerate.
  return {relativize(b, b.one()), std::nullopt};
}

}  // namespace ropen::fin
