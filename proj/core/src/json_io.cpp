#include "ropen/json_io.hpp"

#include "ropen/errors.hpp"

namespace ropen::io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

bool bool_from_json(const json& j, const std::string& path) {
  if (!j.is_boolean()) bad(path, "expected a boolean");
  return j.get<bool>();
}

std::string string_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& path, const char* key) { return path + "." + key; }

json pieces_to_json(const std::vector<std::vector<pl::AffinePiece>>& pieces) {
  json out = json::array();
  for (const auto& ps : pieces) {
    json list = json::array();
    for (const auto& p : ps) {
      list.push_back({{"src_lo", to_json(p.src_lo)},
                      {"src_hi", to_json(p.src_hi)},
                      {"slope", to_json(p.slope)},
                      {"intercept", to_json(p.intercept)}});
    }
    out.push_back(std::move(list));
  }
  return out;
}

std::vector<std::vector<pl::AffinePiece>> pieces_from_json(const json& j, const std::string& path) {
  std::vector<std::vector<pl::AffinePiece>> out;
  const json& lists = array_at(j, path);
  for (std::size_t i = 0; i < lists.size(); ++i) {
    const std::string lp = at(path, i);
    std::vector<pl::AffinePiece> ps;
    const json& list = array_at(lists[i], lp);
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string pp = at(lp, k);
      ps.push_back({rational_from_json(field(list[k], "src_lo", pp), at(pp, "src_lo")),
                    rational_from_json(field(list[k], "src_hi", pp), at(pp, "src_hi")),
                    rational_from_json(field(list[k], "slope", pp), at(pp, "slope")),
                    rational_from_json(field(list[k], "intercept", pp), at(pp, "intercept"))});
    }
    out.push_back(std::move(ps));
  }
  return out;
}

// Knot lists [[x0,y0],[x1,y1],...], one per interval component.
std::vector<std::vector<pl::AffinePiece>> knots_from_json(const json& j, const std::string& path) {
  std::vector<std::vector<pl::AffinePiece>> out;
  const json& lists = array_at(j, path);
  for (std::size_t i = 0; i < lists.size(); ++i) {
    const std::string lp = at(path, i);
    const json& list = array_at(lists[i], lp);
    if (list.size() < 2) bad(lp, "need at least two knots");
    std::vector<pl::AffinePiece> ps;
    for (std::size_t k = 0; k + 1 < list.size(); ++k) {
      const std::string a = at(lp, k);
      const std::string b = at(lp, k + 1);
      if (!list[k].is_array() || list[k].size() != 2) bad(a, "expected [x, y]");
      if (!list[k + 1].is_array() || list[k + 1].size() != 2) bad(b, "expected [x, y]");
      const Rational x0 = rational_from_json(list[k][0], at(a, std::size_t{0}));
      const Rational y0 = rational_from_json(list[k][1], at(a, std::size_t{1}));
      const Rational x1 = rational_from_json(list[k + 1][0], at(b, std::size_t{0}));
      const Rational y1 = rational_from_json(list[k + 1][1], at(b, std::size_t{1}));
      if (!(x0 < x1)) bad(b, "knots must be strictly increasing in x");
      const Rational slope = (y1 - y0) / (x1 - x0);
      ps.push_back({x0, x1, slope, y0 - slope * x0});
    }
    out.push_back(std::move(ps));
  }
  return out;
}

std::vector<std::vector<pl::AffinePiece>> any_pieces_from_json(const json& j, const std::string& path) {
  if (j.is_object() && j.contains("knots")) return knots_from_json(j["knots"], at(path, "knots"));
  return pieces_from_json(field(j, "pieces", path), at(path, "pieces"));
}

json point_table_to_json(const std::map<Rational, Rational>& table) {
  json out = json::object();
  for (const auto& [x, y] : table) out[x.str()] = to_json(y);
  return out;
}

std::map<Rational, Rational> point_table_from_json(const json& j, const char* key, const std::string& path) {
  std::map<Rational, Rational> out;
  if (!j.contains(key)) return out;
  const json& table = j[key];
  const std::string tp = at(path, key);
  if (!table.is_object()) bad(tp, "expected an object");
  for (const auto& [k, v] : table.items()) {
    Rational x;
    try {
      x = Rational::parse(k);
    } catch (const Error&) {
      bad(tp, "key '" + k + "' is not a rational");
    }
    out.emplace(x, rational_from_json(v, tp + "[\"" + k + "\"]"));
  }
  return out;
}

template <class T>
json optional_list(const std::optional<std::vector<T>>& v) {
  return v ? json(*v) : json(nullptr);
}

json tallies(const std::map<std::string, std::size_t>& passes) {
  json out = json::object();
  for (const auto& [law, n] : passes) out[law] = n;
  return out;
}

json failures(const std::vector<cover::Failure>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back({{"law", f.law}, {"sample", f.sample}, {"detail", f.detail}});
  return out;
}

}  // namespace

json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad(path, "expected a rational string such as \"3/4\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

json to_json(const Space1D& s) {
  json comps = json::array();
  for (const auto& c : s.components()) {
    if (c.is_point()) {
      comps.push_back({{"kind", "point"}, {"at", to_json(c.lo)}});
    } else {
      comps.push_back({{"kind", "interval"}, {"a", to_json(c.lo)}, {"b", to_json(c.hi)}});
    }
  }
  return {{"components", comps}};
}

SpaceRef space_from_json(const json& j, const std::string& path) {
  const std::string cp = at(path, "components");
  const json& comps = array_at(field(j, "components", path), cp);
  std::vector<Component> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string p = at(cp, i);
    const std::string kind = string_from_json(field(comps[i], "kind", p), at(p, "kind"));
    if (kind == "point") {
      out.push_back(Component::point(rational_from_json(field(comps[i], "at", p), at(p, "at"))));
    } else if (kind == "interval") {
      out.push_back(Component::interval(rational_from_json(field(comps[i], "a", p), at(p, "a")),
                                        rational_from_json(field(comps[i], "b", p), at(p, "b"))));
    } else {
      bad(at(p, "kind"), "expected \"interval\" or \"point\"");
    }
  }
  try {
    return make_space(std::move(out));
  } catch (const Error& e) {
    bad(cp, e.what());
  }
}

json to_json(const Region& r) {
  json spans = json::array();
  for (const auto& s : r.spans()) {
    spans.push_back({{"lo", to_json(s.lo)}, {"hi", to_json(s.hi)}, {"lo_incl", s.lo_incl}, {"hi_incl", s.hi_incl}});
  }
  return {{"spans", spans}};
}

Region region_from_json(const json& j, const SpaceRef& space, const std::string& path) {
  const std::string sp = at(path, "spans");
  const json& spans = array_at(field(j, "spans", path), sp);
  std::vector<Span> raw;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const std::string p = at(sp, i);
    Span s{rational_from_json(field(spans[i], "lo", p), at(p, "lo")),
           rational_from_json(field(spans[i], "hi", p), at(p, "hi")),
           bool_from_json(field(spans[i], "lo_incl", p), at(p, "lo_incl")),
           bool_from_json(field(spans[i], "hi_incl", p), at(p, "hi_incl"))};
    if (s.is_empty()) bad(p, "empty span");
    raw.push_back(std::move(s));
  }
  auto c = canonicalize(raw, space);
  if (c.clipped) bad(sp, "spans reach outside " + space->str());
  return std::move(c.region);
}

json to_json(const pl::PLMap& m) {
  return {{"domain", to_json(*m.domain)},
          {"codomain", to_json(*m.codomain)},
          {"pieces", pieces_to_json(m.pieces)},
          {"point_images", point_table_to_json(m.point_images)}};
}

pl::PLMap plmap_from_json(const json& j, const std::string& path) {
  pl::PLMap m{space_from_json(field(j, "domain", path), at(path, "domain")),
              space_from_json(field(j, "codomain", path), at(path, "codomain")),
              any_pieces_from_json(j, path), point_table_from_json(j, "point_images", path)};
  pl::validate(m);
  return m;
}

json to_json(const ideals::PLFunc& f) {
  return {{"space", to_json(*f.space)},
          {"pieces", pieces_to_json(f.pieces)},
          {"point_values", point_table_to_json(f.point_values)}};
}

ideals::PLFunc plfunc_from_json(const json& j, const std::string& path) {
  ideals::PLFunc f{space_from_json(field(j, "space", path), at(path, "space")), any_pieces_from_json(j, path),
                   point_table_from_json(j, "point_values", path)};
  ideals::validate(f);
  return f;
}

json to_json(const ideals::RegIdeal& r) {
  return {{"space", to_json(*r.space())}, {"support", to_json(r.support().region())}};
}

ideals::RegIdeal regideal_from_json(const json& j, const std::string& path) {
  const SpaceRef space = space_from_json(field(j, "space", path), at(path, "space"));
  const std::string sp = at(path, "support");
  Region g = region_from_json(field(j, "support", path), space, sp);
  if (!is_regular_open(g)) bad(sp, g.str() + " is not regular open");
  return ideals::RegIdeal::from_support(g);
}

json to_json(const cantor::CantorClopen& k) {
  json words = json::array();
  for (const auto& w : k.words()) words.push_back(w.bits());
  return {{"words", words}};
}

cantor::CantorClopen clopen_from_json(const json& j, const std::string& path) {
  const std::string wp = at(path, "words");
  const json& words = array_at(field(j, "words", path), wp);
  std::vector<cantor::Word> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    try {
      out.emplace_back(string_from_json(words[i], at(wp, i)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidInput && e.code() != ErrorCode::TooLarge) throw;
      bad(at(wp, i), e.what());
    }
  }
  return cantor::CantorClopen::from_words(std::move(out));
}

json to_json(const fin::FiniteBooleanAlgebra& b) { return {{"atoms", b.atom_labels()}}; }

fin::FiniteBooleanAlgebra algebra_from_json(const json& j, const std::string& path) {
  const std::string ap = at(path, "atoms");
  const json& atoms = array_at(field(j, "atoms", path), ap);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < atoms.size(); ++i) labels.push_back(string_from_json(atoms[i], at(ap, i)));
  try {
    return fin::FiniteBooleanAlgebra(std::move(labels));
  } catch (const Error& e) {
    bad(ap, e.what());
  }
}

json to_json(const equiv::SpaceDescriptor& d) {
  json comps = json::array();
  for (auto k : d.components) comps.push_back({{"kind", std::string(equiv::to_string(k))}});
  return {{"components", comps}};
}

equiv::SpaceDescriptor descriptor_from_json(const json& j, const std::string& path) {
  const std::string cp = at(path, "components");
  const json& comps = array_at(field(j, "components", path), cp);
  equiv::SpaceDescriptor d;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string p = at(at(cp, i), "kind");
    const std::string kind = string_from_json(field(comps[i], "kind", at(cp, i)), p);
    try {
      d.components.push_back(equiv::kind_from_string(kind));
    } catch (const Error& e) {
      bad(p, e.what());
    }
  }
  return d;
}

json to_json(const expr::Expr& e) { return {{"expr", expr::print(e)}, {"depth", e.depth()}}; }

expr::Expr expr_from_json(const json& j, const std::string& path) {
  return expr::parse(string_from_json(field(j, "expr", path), at(path, "expr")));
}

json to_json(const SpaceDecomposition& d) {
  json isolated = json::array();
  for (const auto& x : d.isolated) isolated.push_back(to_json(x));
  return {{"isolated", isolated},
          {"atomic_part", to_json(d.atomic_part)},
          {"continuous_part", to_json(d.continuous_part)},
          {"atomic_space", d.atomic_space ? to_json(**d.atomic_space) : json(nullptr)},
          {"continuous_space", d.continuous_space ? to_json(**d.continuous_space) : json(nullptr)}};
}

json to_json(const expr::EvalResult& r) {
  return {{"region", to_json(r.region)},
          {"text", r.region.str()},
          {"open", r.open},
          {"closed", r.closed},
          {"regular_open", r.regular_open}};
}

json to_json(const fin::FinCover& c) {
  json table = json::object();
  for (std::size_t p = 0; p < c.table.size(); ++p) {
    table[c.domain.point_labels.at(p)] = c.codomain.point_labels.at(c.table[p]);
  }
  return {{"domain", c.domain.point_labels}, {"codomain", c.codomain.point_labels}, {"table", table}};
}

json to_json(const fin::VerificationReport& r) {
  return {{"surjective", r.surjective},
          {"irreducible", r.irreducible},
          {"rigid", r.rigid},
          {"phi_eq_cl_preimage", r.phi_eq_cl_preimage},
          {"onto_sandwich", r.onto_sandwich},
          {"psi_inverts_phi", r.psi_inverts_phi},
          {"witnesses",
           {{"surjective", optional_list(r.surjective_witness)},
            {"irreducible", optional_list(r.irreducible_witness)},
            {"rigid", optional_list(r.rigid_witness)},
            {"phi_eq_cl_preimage", optional_list(r.phi_witness)},
            {"onto_sandwich", optional_list(r.sandwich_witness)},
            {"psi_inverts_phi", optional_list(r.psi_witness)}}}};
}

json to_json(const pl::IrreducibilityVerdict& v) {
  return {{"irreducible", v.irreducible},
          {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
          {"witness_text", v.witness ? json(v.witness->str()) : json(nullptr)},
          {"rule", std::string(pl::to_string(v.rule))},
          {"probe_samples", v.probe_samples}};
}

json to_json(const cantor::CylinderCheck& c) {
  json fails = json::array();
  for (const auto& w : c.failures) fails.push_back(w.bits());
  return {{"depth", c.depth}, {"checked", c.checked}, {"passed", c.passed}, {"failures", fails}, {"note", c.note}};
}

json to_json(const cantor::LawTally& t) {
  return {{"passed", t.passed}, {"failed", t.failed}, {"failing_samples", t.failing_samples}};
}

json to_json(const cantor::BridgeReport& r) {
  return {{"depth", r.depth},
          {"samples", r.samples},
          {"seed", r.seed},
          {"passed", r.passed()},
          {"laws",
           {{"psi_phi_roundtrip", to_json(r.psi_phi_roundtrip)},
            {"phi_psi_roundtrip", to_json(r.phi_psi_roundtrip)},
            {"psi_join", to_json(r.psi_join)},
            {"psi_meet", to_json(r.psi_meet)},
            {"psi_neg", to_json(r.psi_neg)},
            {"phi_join", to_json(r.phi_join)},
            {"phi_meet", to_json(r.phi_meet)},
            {"phi_neg", to_json(r.phi_neg)}}}};
}

json to_json(const cover::CoverReport& r) {
  return {{"backend", r.backend},
          {"surjective", r.surjective},
          {"irreducible", r.irreducible.irreducible},
          {"witness", r.irreducible.witness ? json(*r.irreducible.witness) : json(nullptr)},
          {"rule", r.irreducible.rule},
          {"samples", r.samples},
          {"seed", r.seed},
          {"depth", r.depth},
          {"law_passes", tallies(r.law_passes)},
          {"law_failures", failures(r.law_failures)},
          {"inverse_passes", tallies(r.inverse_passes)},
          {"inverse_failures", failures(r.inverse_failures)},
          {"passed", r.passed()}};
}

json to_json(const cover::ComposeReport& r) {
  return {{"samples", r.samples},
          {"seed", r.seed},
          {"depth", r.depth},
          {"passes", tallies(r.passes)},
          {"failures", failures(r.failures)},
          {"passed", r.passed()}};
}

json to_json(const equiv::BoolInvariant& inv) {
  return {{"isol_card", inv.isol_card.str()}, {"perfect_nonempty", inv.perfect_nonempty}};
}

json to_json(const equiv::Equivalence& e) {
  return {{"equivalent", e.equivalent},
          {"left", to_json(e.left)},
          {"right", to_json(e.right)},
          {"reason", e.reason}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ropen::io
