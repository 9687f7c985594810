#pragma once

// Finite Boolean algebras, their Stone duals and the Gleason cover of a
// finite discrete space, with exhaustive verification.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ropen::fin {

/// Atom subset, bit k set iff atom k is below the element.
struct Element {
  std::uint64_t bits = 0;

  bool has(std::size_t atom) const { return (bits >> atom) & 1U; }
  friend auto operator<=>(const Element&, const Element&) = default;
};

inline constexpr std::size_t kMaxAtoms = 64;
/// Upper bound for anything that enumerates all 2^n elements.
inline constexpr std::size_t kMaxExhaustiveAtoms = 16;

class FiniteBooleanAlgebra {
 public:
  /// Throws Error(InvalidInput) on zero atoms, duplicate labels, or more than kMaxAtoms.
  explicit FiniteBooleanAlgebra(std::vector<std::string> atom_labels);
  static FiniteBooleanAlgebra with_atoms(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& atom_labels() const { return labels_; }

  Element zero() const { return {}; }
  Element one() const { return {mask_}; }
  Element atom(std::size_t k) const { return {std::uint64_t{1} << k}; }
  Element join(Element a, Element b) const { return {a.bits | b.bits}; }
  Element meet(Element a, Element b) const { return {a.bits & b.bits}; }
  Element neg(Element a) const { return {~a.bits & mask_}; }
  bool contains(Element e) const { return (e.bits & ~mask_) == 0; }

  /// Throws Error(InvalidInput) for unknown labels.
  Element element(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Element e) const;

  friend bool operator==(const FiniteBooleanAlgebra& a, const FiniteBooleanAlgebra& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::uint64_t mask_ = 0;
};

struct BooleanTerm {
  enum class Op { Var, Zero, One, Neg, Join, Meet };

  Op op = Op::Var;
  std::string name;
  std::vector<BooleanTerm> args;

  static BooleanTerm var(std::string n) { return {Op::Var, std::move(n), {}}; }
  static BooleanTerm neg(BooleanTerm a) { return {Op::Neg, {}, {std::move(a)}}; }
  static BooleanTerm join(BooleanTerm a, BooleanTerm b) { return {Op::Join, {}, {std::move(a), std::move(b)}}; }
  static BooleanTerm meet(BooleanTerm a, BooleanTerm b) { return {Op::Meet, {}, {std::move(a), std::move(b)}}; }
};

using Environment = std::map<std::string, Element>;

/// Throws Error(UnboundName), Error(ArityMismatch), or Error(InvalidInput)
/// for an environment value outside B.
Element ba_eval(const FiniteBooleanAlgebra& b, const BooleanTerm& term, const Environment& env);

/// Principal ultrafilter at one atom; every two-valued homomorphism of a
/// finite Boolean algebra is of this form.
struct TwoValuedHom {
  std::size_t atom_index = 0;

  bool eval(Element v) const { return v.has(atom_index); }
  friend auto operator<=>(const TwoValuedHom&, const TwoValuedHom&) = default;
};

std::vector<TwoValuedHom> dual_space(const FiniteBooleanAlgebra& b);

/// {p : p(V) = 1}.
std::vector<TwoValuedHom> phi_hat(const FiniteBooleanAlgebra& b, Element v);

struct FiniteDiscreteSpace {
  std::vector<std::string> point_labels;

  std::size_t size() const { return point_labels.size(); }
  static FiniteDiscreteSpace with_points(std::size_t n, const std::string& prefix = "x");
  friend bool operator==(const FiniteDiscreteSpace&, const FiniteDiscreteSpace&) = default;
};

/// Map of finite discrete spaces. When the domain is a Stone dual, `hom_atoms`
/// names the atom of the codomain's power-set algebra each point evaluates.
struct FinCover {
  FiniteDiscreteSpace domain;
  FiniteDiscreteSpace codomain;
  std::vector<std::size_t> table;
  std::optional<std::vector<std::size_t>> hom_atoms;
};

/// Dual space P of Ropen(X) = 2^X with f(p) the unique point of the
/// intersection of {cl V : p(V) = 1}. `atom_order[k]` selects which atom the
/// k-th homomorphism of P is principal at (defaults to the identity).
/// Throws Error(NotSingleton) if an intersection is not a singleton.
FinCover gleason_cover(const FiniteDiscreteSpace& x, std::span<const std::size_t> atom_order = {});

struct VerificationReport {
  bool surjective = false;
  bool irreducible = false;
  bool rigid = false;
  bool phi_eq_cl_preimage = false;
  bool onto_sandwich = false;
  bool psi_inverts_phi = false;

  // Witnesses for failed checks, as point labels of the relevant space.
  std::optional<std::vector<std::string>> surjective_witness;     // missed codomain points
  std::optional<std::vector<std::string>> irreducible_witness;    // proper subset that surjects
  std::optional<std::vector<std::size_t>> rigid_witness;          // non-identity h with f∘h = f
  std::optional<std::vector<std::string>> phi_witness;            // V with Phi(V) != cl f^-1(V)
  std::optional<std::vector<std::string>> sandwich_witness;       // B violating the sandwich
  std::optional<std::vector<std::string>> psi_witness;            // V or E breaking Psi = Phi^-1

  bool all_true() const {
    return surjective && irreducible && rigid && phi_eq_cl_preimage && onto_sandwich && psi_inverts_phi;
  }
};

/// Exhaustive over all subsets of P and X. Throws Error(TooLarge) beyond
/// kMaxExhaustiveAtoms points, Error(InvalidInput) on a malformed table.
VerificationReport verify_projective_cover(const FinCover& cover);

/// Counts homeomorphisms phi: P1 -> P2 with f2∘phi = f1 by enumerating all
/// bijections.
std::size_t count_cover_isomorphisms(const FinCover& a, const FinCover& b);

/// Atom bijection B1 -> B2 when the atom counts agree.
std::optional<std::vector<std::size_t>> iso_check(const FiniteBooleanAlgebra& b1, const FiniteBooleanAlgebra& b2);
Element map_element(std::span<const std::size_t> bijection, Element e);

/// B(e) = {e ∧ x}; atoms are the atoms below e. Throws Error(EmptyRelativization) for e = 0.
FiniteBooleanAlgebra relativize(const FiniteBooleanAlgebra& b, Element e);

struct AtomicAtomless {
  FiniteBooleanAlgebra atomic;
  /// Always nullopt for finite algebras: the atomless factor is the
  /// degenerate one-element algebra.
  std::optional<FiniteBooleanAlgebra> atomless;
};

AtomicAtomless decompose_atomic_atomless(const FiniteBooleanAlgebra& b);

}  // namespace ropen::fin
