#pragma once

// JSON encoding of every domain type. Rationals are strings in lowest terms
// ("3/4", "-2"). Readers throw Error(InvalidInput) naming the JSON path of
// the offending value.

#include <nlohmann/json.hpp>

#include "ropen/boolequiv.hpp"
#include "ropen/cantor.hpp"
#include "ropen/cover_iso.hpp"
#include "ropen/expr.hpp"
#include "ropen/finball.hpp"
#include "ropen/interval_space.hpp"
#include "ropen/plmap.hpp"
#include "ropen/reg_ideals.hpp"

namespace ropen::io {

using nlohmann::json;

json to_json(const Rational& q);
/// Accepts strings and integers.
Rational rational_from_json(const json& j, const std::string& path = "$");

json to_json(const Space1D& s);
SpaceRef space_from_json(const json& j, const std::string& path = "$");

json to_json(const Region& r);
/// Spans must lie inside `space`; the result is canonical.
Region region_from_json(const json& j, const SpaceRef& space, const std::string& path = "$");

json to_json(const pl::PLMap& m);
pl::PLMap plmap_from_json(const json& j, const std::string& path = "$");

json to_json(const ideals::PLFunc& f);
ideals::PLFunc plfunc_from_json(const json& j, const std::string& path = "$");

json to_json(const ideals::RegIdeal& r);
ideals::RegIdeal regideal_from_json(const json& j, const std::string& path = "$");

json to_json(const cantor::CantorClopen& k);
cantor::CantorClopen clopen_from_json(const json& j, const std::string& path = "$");

json to_json(const fin::FiniteBooleanAlgebra& b);
fin::FiniteBooleanAlgebra algebra_from_json(const json& j, const std::string& path = "$");

json to_json(const equiv::SpaceDescriptor& d);
equiv::SpaceDescriptor descriptor_from_json(const json& j, const std::string& path = "$");

json to_json(const expr::Expr& e);
expr::Expr expr_from_json(const json& j, const std::string& path = "$");

json to_json(const SpaceDecomposition& d);
json to_json(const expr::EvalResult& r);
json to_json(const fin::FinCover& c);
json to_json(const fin::VerificationReport& r);
json to_json(const pl::IrreducibilityVerdict& v);
json to_json(const cantor::CylinderCheck& c);
json to_json(const cantor::LawTally& t);
json to_json(const cantor::BridgeReport& r);
json to_json(const cover::CoverReport& r);
json to_json(const cover::ComposeReport& r);
json to_json(const equiv::BoolInvariant& inv);
json to_json(const equiv::Equivalence& e);

/// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace ropen::io
