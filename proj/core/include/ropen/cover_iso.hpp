#pragma once

// Backend-generic checks for essential covers pi: Y -> X and composition of
// the induced Boolean isomorphisms through a common cover.

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ropen/cantor.hpp"
#include "ropen/errors.hpp"
#include "ropen/interval_space.hpp"
#include "ropen/plmap.hpp"
#include "ropen/random.hpp"

namespace ropen::cover {

/// Ropen of a Space1D with random elements from random_regular_open.
struct RegionAlgebra {
  using Elem = RopenElem;
  SpaceRef space;

  Elem join(const Elem& a, const Elem& b) const { return ropen_join(a, b); }
  Elem meet(const Elem& a, const Elem& b) const { return ropen_meet(a, b); }
  Elem neg(const Elem& a) const { return ropen_neg(a); }
  Elem random(std::uint64_t seed, std::size_t depth) const;
  void check(const Elem& e) const;
  std::string show(const Elem& e) const { return e.str(); }
};

/// Ropen([0,1]) restricted to dyadic regular opens.
struct DyadicAlgebra : RegionAlgebra {
  DyadicAlgebra() : RegionAlgebra{cantor::unit_interval()} {}
  Elem random(std::uint64_t seed, std::size_t depth) const;
};

/// Clopen algebra of Cantor space.
struct ClopenAlgebra {
  using Elem = cantor::CantorClopen;

  Elem join(const Elem& a, const Elem& b) const { return cantor::clopen_union(a, b); }
  Elem meet(const Elem& a, const Elem& b) const { return cantor::clopen_inter(a, b); }
  Elem neg(const Elem& a) const { return cantor::clopen_compl(a); }
  Elem random(std::uint64_t seed, std::size_t depth) const { return cantor::random_clopen(seed, depth); }
  void check(const Elem&) const {}
  std::string show(const Elem& e) const { return e.str(); }
};

struct CoverVerdict {
  bool irreducible = false;
  std::optional<std::string> witness;  // removable open set when reducible
  std::string rule;
};

template <class A>
concept Algebra = requires(const A& a, const typename A::Elem& e, std::uint64_t seed, std::size_t depth) {
  { a.join(e, e) } -> std::same_as<typename A::Elem>;
  { a.meet(e, e) } -> std::same_as<typename A::Elem>;
  { a.neg(e) } -> std::same_as<typename A::Elem>;
  { a.random(seed, depth) } -> std::same_as<typename A::Elem>;
  { a.show(e) } -> std::convertible_to<std::string>;
  { e == e } -> std::convertible_to<bool>;
  a.check(e);
};

/// A cover pi: Y -> X. Source is Ropen(Y) (or a subalgebra), Target is
/// Ropen(X); psi maps Source to Target and phi goes back.
template <class B>
concept CoverBackend = Algebra<typename B::Source> && Algebra<typename B::Target> &&
    requires(const B& b, const typename B::Source::Elem& u, const typename B::Target::Elem& v) {
      { b.source() } -> std::convertible_to<const typename B::Source&>;
      { b.target() } -> std::convertible_to<const typename B::Target&>;
      { b.psi(u) } -> std::same_as<typename B::Target::Elem>;
      { b.phi(v) } -> std::same_as<typename B::Source::Elem>;
      { b.surjective() } -> std::convertible_to<bool>;
      { b.verdict() } -> std::convertible_to<const CoverVerdict&>;
      { b.domain_key() } -> std::convertible_to<std::string>;
      { b.name() } -> std::convertible_to<std::string>;
    };

/// A PLMap cover. The irreducibility verdict is computed once on construction.
class PLMapBackend {
 public:
  using Source = RegionAlgebra;
  using Target = RegionAlgebra;

  explicit PLMapBackend(pl::PLMap map, const pl::ProbeOptions& probe = {});

  const Source& source() const { return source_; }
  const Target& target() const { return target_; }
  RopenElem psi(const RopenElem& u) const { return pl::psi(map_, u); }
  RopenElem phi(const RopenElem& v) const { return pl::phi(map_, v); }
  bool surjective() const { return surjective_; }
  const CoverVerdict& verdict() const { return verdict_; }
  std::string domain_key() const { return map_.domain->str(); }
  std::string name() const { return "plmap"; }
  const pl::PLMap& map() const { return map_; }

 private:
  pl::PLMap map_;
  Source source_;
  Target target_;
  bool surjective_ = false;
  CoverVerdict verdict_;
};

/// The binary-expansion cover b: C -> [0,1], checked on dyadic elements.
class CantorBackend {
 public:
  using Source = ClopenAlgebra;
  using Target = DyadicAlgebra;

  /// Irreducibility is checked on every cylinder up to `check_depth`.
  explicit CantorBackend(std::size_t check_depth = 8);

  const Source& source() const { return source_; }
  const Target& target() const { return target_; }
  RopenElem psi(const cantor::CantorClopen& k) const { return cantor::psi_c(k); }
  cantor::CantorClopen phi(const RopenElem& v) const { return cantor::phi_c(v); }
  bool surjective() const { return surjective_; }
  const CoverVerdict& verdict() const { return verdict_; }
  std::string domain_key() const { return "C"; }
  std::string name() const { return "cantor"; }

 private:
  Source source_;
  Target target_;
  bool surjective_ = false;
  CoverVerdict verdict_;
};

/// The identity C -> C.
class CantorIdentityBackend {
 public:
  using Source = ClopenAlgebra;
  using Target = ClopenAlgebra;

  const Source& source() const { return algebra_; }
  const Target& target() const { return algebra_; }
  cantor::CantorClopen psi(const cantor::CantorClopen& k) const { return k; }
  cantor::CantorClopen phi(const cantor::CantorClopen& k) const { return k; }
  bool surjective() const { return true; }
  const CoverVerdict& verdict() const { return verdict_; }
  std::string domain_key() const { return "C"; }
  std::string name() const { return "cantor_identity"; }

 private:
  ClopenAlgebra algebra_;
  CoverVerdict verdict_{true, std::nullopt, "none"};
};

struct CheckParams {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  std::size_t depth = 6;
};

/// One failed identity. Replay with sample_seed(seed, sample).
struct Failure {
  std::string law;
  std::size_t sample = 0;
  std::string detail;
};

struct CoverReport {
  std::string backend;
  bool surjective = false;
  CoverVerdict irreducible;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  std::map<std::string, std::size_t> law_passes;
  std::vector<Failure> law_failures;
  std::map<std::string, std::size_t> inverse_passes;
  std::vector<Failure> inverse_failures;

  bool passed() const {
    return surjective && irreducible.irreducible && law_failures.empty() && inverse_failures.empty();
  }
};

namespace detail {

template <class A>
void tally(std::map<std::string, std::size_t>& passes, std::vector<Failure>& failures, const std::string& law,
           std::size_t sample, const A& alg, const typename A::Elem& got, const typename A::Elem& want) {
  if (got == want) {
    ++passes[law];
  } else {
    passes.try_emplace(law, 0);
    failures.push_back({law, sample, "got " + alg.show(got) + ", expected " + alg.show(want)});
  }
}

}  // namespace detail

/// Surjectivity, irreducibility, the six homomorphism laws of psi and phi and
/// both inverse identities on seeded random elements.
template <CoverBackend B>
CoverReport check_essential(const B& backend, const CheckParams& params) {
  CoverReport r;
  r.backend = backend.name();
  r.surjective = backend.surjective();
  r.irreducible = backend.verdict();
  r.samples = params.samples;
  r.seed = params.seed;
  r.depth = params.depth;
  const auto& src = backend.source();
  const auto& tgt = backend.target();
  for (std::size_t i = 0; i < params.samples; ++i) {
    Rng rng(sample_seed(params.seed, i));
    const auto u1 = src.random(rng.next(), params.depth);
    const auto u2 = src.random(rng.next(), params.depth);
    const auto v1 = tgt.random(rng.next(), params.depth);
    const auto v2 = tgt.random(rng.next(), params.depth);
    const auto pu1 = backend.psi(u1);
    const auto pu2 = backend.psi(u2);
    const auto fv1 = backend.phi(v1);
    const auto fv2 = backend.phi(v2);
    auto& lp = r.law_passes;
    auto& lf = r.law_failures;
    detail::tally(lp, lf, "psi_join", i, tgt, backend.psi(src.join(u1, u2)), tgt.join(pu1, pu2));
    detail::tally(lp, lf, "psi_meet", i, tgt, backend.psi(src.meet(u1, u2)), tgt.meet(pu1, pu2));
    detail::tally(lp, lf, "psi_neg", i, tgt, backend.psi(src.neg(u1)), tgt.neg(pu1));
    detail::tally(lp, lf, "phi_join", i, src, backend.phi(tgt.join(v1, v2)), src.join(fv1, fv2));
    detail::tally(lp, lf, "phi_meet", i, src, backend.phi(tgt.meet(v1, v2)), src.meet(fv1, fv2));
    detail::tally(lp, lf, "phi_neg", i, src, backend.phi(tgt.neg(v1)), src.neg(fv1));
    detail::tally(r.inverse_passes, r.inverse_failures, "psi_phi", i, tgt, backend.psi(fv1), v1);
    detail::tally(r.inverse_passes, r.inverse_failures, "phi_psi", i, src, backend.phi(pu1), u1);
  }
  return r;
}

/// V -> psi_f(phi_g(V)) from Ropen(Y) to Ropen(X) for covers f: Z -> X and
/// g: Z -> Y. The inverse is U -> psi_g(phi_f(U)).
template <CoverBackend F, CoverBackend G>
  requires std::same_as<typename F::Source::Elem, typename G::Source::Elem>
struct ComposedEquivalence {
  F f;
  G g;

  typename F::Target::Elem apply(const typename G::Target::Elem& v) const {
    g.target().check(v);
    return f.psi(g.phi(v));
  }
  typename G::Target::Elem inverse(const typename F::Target::Elem& u) const {
    f.target().check(u);
    return g.psi(f.phi(u));
  }
  /// The same pair read in the other direction.
  ComposedEquivalence<G, F> reversed() const { return {g, f}; }
};

/// Throws Error(DomainMismatch) unless f and g share their domain and
/// Error(NotIrreducible) unless both are irreducible covers.
template <CoverBackend F, CoverBackend G>
  requires std::same_as<typename F::Source::Elem, typename G::Source::Elem>
ComposedEquivalence<F, G> compose_equivalence(F f, G g) {
  if (f.domain_key() != g.domain_key()) {
    throw Error(ErrorCode::DomainMismatch, "covers start at " + f.domain_key() + " and " + g.domain_key());
  }
  for (const auto* v : {&f.verdict(), &g.verdict()}) {
    if (!v->irreducible) {
      throw Error(ErrorCode::NotIrreducible,
                  "cover is reducible" + (v->witness ? ": removable open set " + *v->witness : std::string()));
    }
  }
  if (!f.surjective() || !g.surjective()) throw Error(ErrorCode::NotSurjective, "cover is not onto");
  return {std::move(f), std::move(g)};
}

template <CoverBackend F, CoverBackend G>
typename F::Target::Elem apply_composed(const ComposedEquivalence<F, G>& ce, const typename G::Target::Elem& v) {
  return ce.apply(v);
}

struct ComposeReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  std::map<std::string, std::size_t> passes;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

/// Law preservation of the composed map and both round trips.
template <CoverBackend F, CoverBackend G>
ComposeReport check_composed(const ComposedEquivalence<F, G>& ce, const CheckParams& params) {
  ComposeReport r;
  r.samples = params.samples;
  r.seed = params.seed;
  r.depth = params.depth;
  const auto& src = ce.g.target();
  const auto& tgt = ce.f.target();
  for (std::size_t i = 0; i < params.samples; ++i) {
    Rng rng(sample_seed(params.seed, i));
    const auto v1 = src.random(rng.next(), params.depth);
    const auto v2 = src.random(rng.next(), params.depth);
    const auto u1 = tgt.random(rng.next(), params.depth);
    const auto a1 = ce.apply(v1);
    const auto a2 = ce.apply(v2);
    detail::tally(r.passes, r.failures, "join", i, tgt, ce.apply(src.join(v1, v2)), tgt.join(a1, a2));
    detail::tally(r.passes, r.failures, "meet", i, tgt, ce.apply(src.meet(v1, v2)), tgt.meet(a1, a2));
    detail::tally(r.passes, r.failures, "neg", i, tgt, ce.apply(src.neg(v1)), tgt.neg(a1));
    detail::tally(r.passes, r.failures, "inverse_apply", i, src, ce.inverse(a1), v1);
    detail::tally(r.passes, r.failures, "apply_inverse", i, tgt, ce.apply(ce.inverse(u1)), u1);
  }
  return r;
}

}  // namespace ropen::cover
