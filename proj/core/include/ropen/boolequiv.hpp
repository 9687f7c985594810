#pragma once

// Boolean equivalence of compact metric spaces given as descriptors: two
// spaces have isomorphic regular open algebras iff they have equally many
// isolated points and their perfect parts are both empty or both nonempty.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ropen/interval_space.hpp"

namespace ropen::equiv {

enum class Kind { Interval, Point, ConvSeq, Cantor };

std::string_view to_string(Kind k);
/// Throws Error(InvalidInput) for unknown names.
Kind kind_from_string(std::string_view name);

struct SpaceDescriptor {
  std::vector<Kind> components;
};

/// Finite(n) when `finite` holds a value, otherwise countably infinite.
struct IsolCard {
  std::optional<std::uint64_t> finite;

  bool is_omega() const { return !finite.has_value(); }
  std::string str() const { return finite ? std::to_string(*finite) : "omega"; }
  friend bool operator==(const IsolCard&, const IsolCard&) = default;
};

struct BoolInvariant {
  IsolCard isol_card;
  bool perfect_nonempty = false;

  friend bool operator==(const BoolInvariant&, const BoolInvariant&) = default;
};

/// Throws Error(EmptyDescriptor).
BoolInvariant invariant(const SpaceDescriptor& d);

struct Equivalence {
  bool equivalent = false;
  BoolInvariant left;
  BoolInvariant right;
  std::string reason;
};

Equivalence equivalent(const SpaceDescriptor& a, const SpaceDescriptor& b);

SpaceDescriptor from_space1d(const Space1D& x);

}  // namespace ropen::equiv
