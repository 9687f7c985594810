#include "ropen/cover_iso.hpp"

namespace ropen::cover {

RopenElem RegionAlgebra::random(std::uint64_t seed, std::size_t depth) const {
  return random_regular_open(space, seed, static_cast<unsigned>(depth));
}

void RegionAlgebra::check(const RopenElem& e) const {
  if (!same_space(e.space(), space)) {
    throw Error(ErrorCode::SpaceMismatch, "element over " + e.space()->str() + ", expected " + space->str());
  }
}

RopenElem DyadicAlgebra::random(std::uint64_t seed, std::size_t depth) const {
  return cantor::random_dyadic_regular_open(seed, depth);
}

PLMapBackend::PLMapBackend(pl::PLMap map, const pl::ProbeOptions& probe)
    : map_(std::move(map)), source_{map_.domain}, target_{map_.codomain} {
  pl::validate(map_);
  surjective_ = pl::is_surjective(map_);
  if (!surjective_) {
    verdict_ = {false, std::nullopt, "not_surjective"};
    return;
  }
  const auto v = pl::is_irreducible(map_, probe);
  verdict_.irreducible = v.irreducible;
  if (v.witness) verdict_.witness = v.witness->str();
  verdict_.rule = std::string(pl::to_string(v.rule));
}

CantorBackend::CantorBackend(std::size_t check_depth) {
  surjective_ = psi_c(cantor::CantorClopen::whole()) == RopenElem::one(cantor::unit_interval());
  const auto check = cantor::check_irreducible_cantor(check_depth);
  verdict_.irreducible = check.passed;
  if (!check.passed) verdict_.witness = "[" + check.failures.front().bits() + "]";
  verdict_.rule = check.passed ? "none" : "cylinder";
}

}  // namespace ropen::cover
