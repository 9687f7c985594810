#pragma once

// Clopen subsets of Cantor space {0,1}^N as canonical antichains of finite
// binary words, and the binary-expansion cover b: C -> [0,1],
// b(w) = sum w_i 2^-i.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ropen/interval_space.hpp"

namespace ropen::cantor {

/// Finite binary word; the cylinder [w] is every sequence extending it.
class Word {
 public:
  Word() = default;
  /// Throws Error(InvalidInput) on characters other than '0' and '1'.
  explicit Word(std::string bits);

  const std::string& bits() const { return bits_; }
  std::size_t length() const { return bits_.size(); }

  /// Value of the word as an integer in [0, 2^length).
  std::uint64_t index() const;
  static Word from_index(std::uint64_t index, std::size_t length);

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string bits_;
};

struct ClopenAccess;

/// Prefix-free, fully merged antichain sorted by value.
class CantorClopen {
 public:
  CantorClopen() = default;

  /// Canonicalizes an arbitrary word list (union of the cylinders).
  static CantorClopen from_words(std::vector<Word> words);
  static CantorClopen whole() { return from_words({Word()}); }
  static CantorClopen empty_set() { return {}; }

  const std::vector<Word>& words() const { return words_; }
  bool empty() const { return words_.empty(); }
  bool is_whole() const { return words_.size() == 1 && words_.front().length() == 0; }
  std::size_t max_length() const;
  std::string str() const;

  friend bool operator==(const CantorClopen&, const CantorClopen&) = default;

 private:
  friend struct ClopenAccess;
  std::vector<Word> words_;
};

CantorClopen clopen_union(const CantorClopen& a, const CantorClopen& b);
CantorClopen clopen_inter(const CantorClopen& a, const CantorClopen& b);
CantorClopen clopen_compl(const CantorClopen& k);

/// Closed dyadic interval I_w = b([w]).
std::pair<Rational, Rational> value_interval(const Word& w);

/// The target space [0,1] shared by every call in this module.
const SpaceRef& unit_interval();

/// int(b(K)) relative to [0,1].
RopenElem psi_c(const CantorClopen& k);

/// int(cl(b^-1(V))). Requires V over [0,1] with dyadic endpoints; throws
/// Error(SpaceMismatch) or Error(NonDyadicEndpoint).
CantorClopen phi_c(const RopenElem& v);

struct CylinderCheck {
  std::size_t depth = 0;
  std::size_t checked = 0;
  bool passed = false;
  std::vector<Word> failures;
  std::string note;
};

/// For every word 1 <= |w| <= depth: b(C \ [w]) = [0,1] \ int(I_w) != [0,1].
CylinderCheck check_irreducible_cantor(std::size_t depth);

struct LawTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::uint64_t> failing_samples;  // replay with sample_seed(seed, index)

  void record(bool ok, std::uint64_t sample);
};

struct BridgeReport {
  std::size_t depth = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  LawTally psi_phi_roundtrip;   // psi_c(phi_c(V)) = V
  LawTally phi_psi_roundtrip;   // phi_c(psi_c(K)) = K
  LawTally psi_join, psi_meet, psi_neg;
  LawTally phi_join, phi_meet, phi_neg;

  bool passed() const;
};

/// Seeded random laws and round trips on clopens with words of length <=
/// depth and dyadic regular opens with denominators <= 2^depth.
BridgeReport verify_bridge(std::size_t depth, std::size_t samples, std::uint64_t seed);

/// Clopen generated by a random subset of the 2^depth cylinders of length depth.
CantorClopen random_clopen(std::uint64_t seed, std::size_t depth);
RopenElem random_dyadic_regular_open(std::uint64_t seed, std::size_t depth);
/// Clopen whose length-depth cylinders are exactly the set bits of `mask` (depth <= 6).
CantorClopen clopen_from_mask(std::uint64_t mask, std::size_t depth);
/// Regular open int(union of cells whose bits are set in `mask`) (depth <= 6).
RopenElem ropen_from_mask(std::uint64_t mask, std::size_t depth);

}  // namespace ropen::cantor
