#pragma once

// Region expressions:
//   expr := IDENT | I(rat, rat) | pt(rat)
//         | (cl|int|reg|perp|neg)(expr)
//         | (join|meet|union|inter|diff)(expr, expr)
//   rat  := integer ("/" positive-integer)?

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ropen/interval_space.hpp"

namespace ropen::expr {

enum class Op { Var, Interval, Point, Cl, Int, Reg, Perp, Neg, Join, Meet, Union, Inter, Diff };

std::string_view to_string(Op op);

struct Expr {
  Op op = Op::Var;
  std::string name;             // Var
  std::vector<Rational> bounds;  // Interval: {a, b}; Point: {c}
  std::vector<Expr> args;

  /// Nodes on the longest root-to-leaf path.
  std::size_t depth() const;

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Whitespace-insensitive. Throws SyntaxError with 1-based line and column.
Expr parse(std::string_view text);

/// Canonical text without whitespace; parse(print(e)) == e.
std::string print(const Expr& e);

struct EvalResult {
  Region region;
  bool open = false;
  bool closed = false;
  bool regular_open = false;
};

using Bindings = std::map<std::string, Region>;

/// I(a,b) is the open interval clipped to the space and pt(c) the singleton.
/// join regularizes the union, meet intersects and neg is X \ cl, so they
/// agree with Ropen on regular open arguments. Throws Error(UnboundName),
/// Error(SpaceMismatch) or Error(InvalidInput) when a > b in I(a,b).
EvalResult eval(const Expr& e, const SpaceRef& space, const Bindings& bindings = {});

}  // namespace ropen::expr
