#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include "ropen/boolequiv.hpp"
#include "ropen/cantor.hpp"
#include "ropen/cover_iso.hpp"
#include "ropen/errors.hpp"
#include "ropen/expr.hpp"
#include "ropen/finball.hpp"
#include "ropen/json_io.hpp"
#include "ropen/reg_ideals.hpp"

namespace ropen::cli {

namespace {

using io::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Outcome {
  json body;
  int code = kOk;
};

// Failure while reading a named input; `at` locates it for the error report.
struct InputFailure {
  std::string at;
  std::string message;
};

class Inputs {
 public:
  json read(const std::string& path) {
    current_ = path;
    std::ifstream in(path);
    if (!in) throw InputFailure{path, "cannot open file"};
    try {
      return json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputFailure{path + ":byte " + std::to_string(e.byte), e.what()};
    }
  }
  void set(std::string where) { current_ = std::move(where); }
  const std::string& current() const { return current_; }

 private:
  std::string current_ = "argv";
};

struct BinaryCover {};
struct IdentityCover {};
using AnyCover = std::variant<pl::PLMap, BinaryCover, IdentityCover>;
using AnyBackend = std::variant<cover::PLMapBackend, cover::CantorBackend, cover::CantorIdentityBackend>;

AnyCover load_cover(Inputs& in, const std::string& path) {
  const json j = in.read(path);
  if (j.is_object() && j.contains("cover")) {
    const json& kind = j["cover"];
    if (kind == "binary") return BinaryCover{};
    if (kind == "cantor_identity") return IdentityCover{};
    throw Error(ErrorCode::InvalidInput, "$.cover: expected \"binary\" or \"cantor_identity\"");
  }
  return io::plmap_from_json(j);
}

AnyBackend make_backend(const AnyCover& c, std::size_t depth) {
  if (const auto* m = std::get_if<pl::PLMap>(&c)) return cover::PLMapBackend(*m);
  if (std::holds_alternative<BinaryCover>(c)) return cover::CantorBackend(std::max<std::size_t>(depth, 1));
  return cover::CantorIdentityBackend{};
}

RopenElem read_elem(Inputs& in, const cover::RegionAlgebra& a, const std::string& path) {
  const json j = in.read(path);
  Region r = io::region_from_json(j, a.space);
  return RopenElem::from_region(std::move(r));
}

cantor::CantorClopen read_elem(Inputs& in, const cover::ClopenAlgebra&, const std::string& path) {
  return io::clopen_from_json(in.read(path));
}

json elem_json(const RopenElem& e) {
  json j = io::to_json(e.region());
  j["text"] = e.str();
  return j;
}

json elem_json(const cantor::CantorClopen& k) {
  json j = io::to_json(k);
  j["text"] = k.str();
  return j;
}

equiv::SpaceDescriptor load_descriptor(Inputs& in, const std::string& path) {
  const json j = in.read(path);
  // A Space1D file carries geometry ("a"/"b" or "at"); a descriptor does not.
  bool geometric = false;
  if (j.is_object() && j.contains("components") && j["components"].is_array()) {
    for (const auto& c : j["components"]) geometric = geometric || (c.is_object() && (c.contains("a") || c.contains("at")));
  }
  if (geometric) return equiv::from_space1d(*io::space_from_json(j));
  return io::descriptor_from_json(j);
}

json error_body(const std::string& code, const std::string& message, json at) {
  return {{"error", code}, {"message", message}, {"at", std::move(at)}};
}

std::string locate(const Inputs& in, const std::string& message) {
  // Reader messages start with the JSON path inside the current input.
  const auto colon = message.find(": ");
  const std::string body = colon == std::string::npos ? message : message.substr(colon + 2);
  if (!body.empty() && body.front() == '$') return in.current() + ":" + body.substr(0, body.find(':'));
  return in.current();
}

struct Flags {
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::size_t depth = 6;
  std::size_t cantor_depth = 8;
  std::string space;
  std::vector<std::string> maps;
  std::vector<std::string> regions;
  std::vector<std::string> ideals;
  std::string func;
  std::string expr;
  std::size_t points = 3;
  std::vector<std::string> files;
};

Outcome cmd_space_info(Inputs& in, const Flags& f) {
  const SpaceRef space = io::space_from_json(in.read(f.space));
  const auto d = equiv::from_space1d(*space);
  const auto inv = equiv::invariant(d);
  const SpaceDecomposition dec = decompose_space(space);
  const Region int_xc = interior(dec.continuous_part);
  const Region neg_int_xa = perp(interior(dec.atomic_part));
  return {{{"space", io::to_json(*space)},
           {"text", space->str()},
           {"decomposition", io::to_json(dec)},
           {"descriptor", io::to_json(d)},
           {"invariant", io::to_json(inv)},
           {"int_xc_eq_neg_int_xa", int_xc == neg_int_xa}},
          kOk};
}

Outcome cmd_region_eval(Inputs& in, const Flags& f) {
  const SpaceRef space = io::space_from_json(in.read(f.space));
  expr::Bindings bindings;
  for (const auto& binding : f.regions) {
    const auto eq = binding.find('=');
    if (eq == std::string::npos || eq == 0) {
      in.set("--region " + binding);
      throw Error(ErrorCode::InvalidInput, "expected NAME=FILE");
    }
    const std::string path = binding.substr(eq + 1);
    bindings.insert_or_assign(binding.substr(0, eq), io::region_from_json(in.read(path), space));
  }
  in.set("--expr");
  const expr::Expr e = expr::parse(f.expr);
  json body = io::to_json(expr::eval(e, space, bindings));
  body["expr"] = expr::print(e);
  return {body, kOk};
}

Outcome cmd_cover_check(Inputs& in, const Flags& f) {
  const AnyBackend backend = make_backend(load_cover(in, f.maps.front()), f.depth);
  const cover::CheckParams params{f.samples, f.seed, f.depth};
  return std::visit(
      [&](const auto& b) {
        const auto report = cover::check_essential(b, params);
        return Outcome{io::to_json(report), report.passed() ? kOk : kNegative};
      },
      backend);
}

Outcome cmd_cover_transfer(Inputs& in, const Flags& f, bool forward) {
  const AnyBackend backend = make_backend(load_cover(in, f.maps.front()), f.depth);
  return std::visit(
      [&](const auto& b) {
        json body;
        if (forward) {
          const auto u = read_elem(in, b.source(), f.regions.front());
          body = {{"input", elem_json(u)}, {"result", elem_json(b.psi(u))}};
        } else {
          const auto v = read_elem(in, b.target(), f.regions.front());
          body = {{"input", elem_json(v)}, {"result", elem_json(b.phi(v))}};
        }
        body["map"] = forward ? "psi" : "phi";
        return Outcome{body, kOk};
      },
      backend);
}

Outcome cmd_cantor_check(const Flags& f) {
  const auto cylinders = cantor::check_irreducible_cantor(f.cantor_depth);
  const auto bridge = cantor::verify_bridge(f.cantor_depth, f.samples, f.seed);
  const bool ok = cylinders.passed && bridge.passed();
  return {{{"cylinders", io::to_json(cylinders)}, {"bridge", io::to_json(bridge)}, {"passed", ok}},
          ok ? kOk : kNegative};
}

Outcome cmd_cantor_psi(Inputs& in, const Flags& f) {
  const auto k = io::clopen_from_json(in.read(f.regions.front()));
  return {{{"input", elem_json(k)}, {"result", elem_json(cantor::psi_c(k))}}, kOk};
}

Outcome cmd_cantor_phi(Inputs& in, const Flags& f) {
  const Region r = io::region_from_json(in.read(f.regions.front()), cantor::unit_interval());
  const RopenElem v = RopenElem::from_region(r);
  return {{{"input", elem_json(v)}, {"result", elem_json(cantor::phi_c(v))}}, kOk};
}

Outcome cmd_gleason(Inputs& in, const Flags& f) {
  in.set("--points");
  if (f.points == 0) throw Error(ErrorCode::InvalidInput, "need at least one point");
  if (f.points > 10) throw Error(ErrorCode::TooLarge, "at most 10 points");
  const auto x = fin::FiniteDiscreteSpace::with_points(f.points);
  const auto cover = fin::gleason_cover(x);
  const auto report = fin::verify_projective_cover(cover);
  const std::size_t isos = fin::count_cover_isomorphisms(cover, cover);
  const bool ok = report.all_true() && isos == 1;
  return {{{"points", f.points},
           {"cover", io::to_json(cover)},
           {"report", io::to_json(report)},
           {"self_isomorphisms", isos},
           {"passed", ok}},
          ok ? kOk : kNegative};
}

ideals::RegIdeal read_ideal(Inputs& in, const std::string& path) { return io::regideal_from_json(in.read(path)); }

ideals::PLFunc read_func(Inputs& in, const std::string& path) { return io::plfunc_from_json(in.read(path)); }

void need(const std::vector<std::string>& v, std::size_t n, const char* flag, Inputs& in) {
  if (v.size() != n) {
    in.set(flag);
    throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(n) + " " + flag + " argument(s)");
  }
}

Outcome cmd_ideal(Inputs& in, const Flags& f, const std::string& op) {
  if (op == "supp") {
    const Region s = ideals::pl_supp(read_func(in, f.func));
    return {{{"support", io::to_json(s)}, {"text", s.str()}}, kOk};
  }
  if (op == "member") {
    need(f.ideals, 1, "--ideal", in);
    const auto fn = read_func(in, f.func);
    const bool member = ideals::in_ideal(fn, read_ideal(in, f.ideals[0]));
    return {{{"member", member}, {"support", io::to_json(ideals::pl_supp(fn))}}, member ? kOk : kNegative};
  }
  if (op == "annihilator" || op == "neg") {
    need(f.ideals, 1, "--ideal", in);
    return {io::to_json(ideals::annihilator(read_ideal(in, f.ideals[0]))), kOk};
  }
  if (op == "join" || op == "meet") {
    need(f.ideals, 2, "--ideal", in);
    const auto a = read_ideal(in, f.ideals[0]);
    const auto b = read_ideal(in, f.ideals[1]);
    return {io::to_json(op == "join" ? ideals::ideal_join(a, b) : ideals::ideal_meet(a, b)), kOk};
  }
  need(f.maps, 1, "--map", in);
  const AnyCover c = load_cover(in, f.maps[0]);
  if (op == "essential") {
    bool essential = false;
    if (const auto* m = std::get_if<pl::PLMap>(&c)) {
      essential = ideals::is_essential_extension(*m);
    } else if (std::holds_alternative<BinaryCover>(c)) {
      essential = ideals::is_essential_extension_cantor(f.cantor_depth);
    } else {
      essential = true;
    }
    return {{{"essential", essential}}, essential ? kOk : kNegative};
  }
  if (op == "pullback") {
    const auto* m = std::get_if<pl::PLMap>(&c);
    if (!m) throw Error(ErrorCode::InvalidInput, "pullback needs a piecewise-linear map");
    const auto g = ideals::pullback(*m, read_func(in, f.func));
    json body = io::to_json(g);
    body["support"] = io::to_json(ideals::pl_supp(g));
    return {body, kOk};
  }
  if (op == "upsilon" || op == "omega") {
    need(f.ideals, 1, "--ideal", in);
    if (const auto* m = std::get_if<pl::PLMap>(&c)) {
      const ideals::DualHom alpha(*m);
      const auto j = read_ideal(in, f.ideals[0]);
      return {io::to_json(op == "upsilon" ? ideals::upsilon(alpha, j) : ideals::omega(alpha, j)), kOk};
    }
    if (!std::holds_alternative<BinaryCover>(c)) throw Error(ErrorCode::InvalidInput, "expected a PL map or the binary cover");
    if (op == "upsilon") {
      const auto k = ideals::upsilon_cantor(read_ideal(in, f.ideals[0]));
      return {{{"space", "C"}, {"support", io::to_json(k.support)}}, kOk};
    }
    const json j = in.read(f.ideals[0]);
    if (!j.is_object() || !j.contains("support")) throw Error(ErrorCode::InvalidInput, "$: missing field 'support'");
    const ideals::CantorIdeal k{io::clopen_from_json(j["support"], "$.support")};
    return {io::to_json(ideals::omega_cantor(k)), kOk};
  }
  in.set("ideal " + op);
  throw Error(ErrorCode::InvalidInput, "unknown ideal operation '" + op + "'");
}

Outcome cmd_equiv(Inputs& in, const Flags& f) {
  need(f.files, 2, "DESCRIPTOR", in);
  const auto a = load_descriptor(in, f.files[0]);
  const auto b = load_descriptor(in, f.files[1]);
  const auto e = equiv::equivalent(a, b);
  return {io::to_json(e), e.equivalent ? kOk : kNegative};
}

Outcome cmd_compose(Inputs& in, const Flags& f) {
  need(f.maps, 2, "--map", in);
  const AnyBackend fb = make_backend(load_cover(in, f.maps[0]), f.depth);
  const AnyBackend gb = make_backend(load_cover(in, f.maps[1]), f.depth);
  const cover::CheckParams params{f.samples, f.seed, f.depth};
  return std::visit(
      [&](const auto& fv, const auto& gv) -> Outcome {
        using F = std::decay_t<decltype(fv)>;
        using G = std::decay_t<decltype(gv)>;
        if constexpr (std::same_as<typename F::Source::Elem, typename G::Source::Elem>) {
          in.set("--map");
          const auto ce = cover::compose_equivalence(fv, gv);
          const auto report = cover::check_composed(ce, params);
          json body = {{"report", io::to_json(report)}, {"f", fv.name()}, {"g", gv.name()}};
          if (!f.regions.empty()) {
            const auto v = read_elem(in, ce.g.target(), f.regions.front());
            const auto image = ce.apply(v);
            body["input"] = elem_json(v);
            body["image"] = elem_json(image);
            body["round_trip"] = ce.inverse(image) == v;
          }
          return {body, report.passed() ? kOk : kNegative};
        } else {
          in.set("--map");
          throw Error(ErrorCode::DomainMismatch, "covers start at " + fv.domain_key() + " and " + gv.domain_key());
        }
      },
      fb, gb);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact regular open algebras, covers and Boolean equivalence"};
  app.name("ropen");
  app.require_subcommand(1);
  Flags f;

  auto seeded = [&](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "Random seed")->capture_default_str();
    sub->add_option("--samples", f.samples, "Random samples")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--depth", f.depth, "Word depth or region complexity")->capture_default_str()->check(CLI::PositiveNumber);
  };

  auto* space = app.add_subcommand("space", "Space queries")->require_subcommand(1);
  auto* space_info = space->add_subcommand("info", "Decomposition and invariant of a space");
  space_info->add_option("--space", f.space, "Space1D JSON")->required();

  auto* region = app.add_subcommand("region", "Region expressions")->require_subcommand(1);
  auto* region_eval = region->add_subcommand("eval", "Evaluate a region expression");
  region_eval->add_option("--space", f.space, "Space1D JSON")->required();
  region_eval->add_option("--expr", f.expr, "Expression")->required();
  region_eval->add_option("--region", f.regions, "Binding NAME=FILE");

  auto* cover = app.add_subcommand("cover", "Covers pi: Y -> X")->require_subcommand(1);
  auto* cover_check = cover->add_subcommand("check", "Surjectivity, irreducibility, laws and inverses");
  cover_check->add_option("map,--map", f.maps, "Cover JSON")->required()->expected(1);
  seeded(cover_check);
  auto* cover_psi = cover->add_subcommand("psi", "int(pi(cl U))");
  auto* cover_phi = cover->add_subcommand("phi", "int(cl(pi^-1 V))");
  for (auto* sub : {cover_psi, cover_phi}) {
    sub->add_option("--map", f.maps, "Cover JSON")->required()->expected(1);
    sub->add_option("--region", f.regions, "Element JSON")->required()->expected(1);
  }

  auto* cantor = app.add_subcommand("cantor", "Binary-expansion cover C -> [0,1]")->require_subcommand(1);
  auto* cantor_check = cantor->add_subcommand("check", "Cylinder irreducibility and bridge laws");
  cantor_check->add_option("--seed", f.seed, "Random seed")->capture_default_str();
  cantor_check->add_option("--samples", f.samples, "Random samples")->capture_default_str()->check(CLI::PositiveNumber);
  cantor_check->add_option("--depth", f.cantor_depth, "Word depth")->capture_default_str()->check(CLI::Range(1, 62));
  auto* cantor_psi = cantor->add_subcommand("psi", "Clopen {\"words\"} to a regular open of [0,1]");
  auto* cantor_phi = cantor->add_subcommand("phi", "Dyadic regular open of [0,1] to a clopen");
  for (auto* sub : {cantor_psi, cantor_phi}) {
    sub->add_option("region,--region", f.regions, "Input JSON")->required()->expected(1);
  }

  auto* gleason = app.add_subcommand("gleason", "Gleason cover of a finite discrete space");
  gleason->add_option("--points", f.points, "Number of points")->capture_default_str();

  auto* ideal = app.add_subcommand("ideal", "Regular ideals");
  std::string ideal_op;
  ideal->add_option("op", ideal_op,
                    "supp | member | annihilator | neg | join | meet | upsilon | omega | pullback | essential")
      ->required();
  ideal->add_option("--ideal", f.ideals, "RegIdeal JSON (repeat for join/meet)");
  ideal->add_option("--func", f.func, "PLFunc JSON");
  ideal->add_option("--map", f.maps, "Cover JSON")->expected(1);
  ideal->add_option("--depth", f.cantor_depth, "Cylinder depth for the binary cover")->capture_default_str();

  auto* equiv_cmd = app.add_subcommand("equiv", "Boolean equivalence of two descriptors");
  equiv_cmd->add_option("files", f.files, "Two descriptor or Space1D JSON files")->expected(2)->required();

  auto* compose = app.add_subcommand("compose", "psi_f . phi_g for covers f, g with a common domain");
  compose->add_option("--map", f.maps, "Cover JSON: f then g")->expected(2)->required();
  compose->add_option("--region", f.regions, "Element to map")->expected(1);
  seeded(compose);

  Inputs in;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      out << io::dump(error_body("InvalidInput", e.what(), "argv"));
      err << "ropen: " << e.what() << "\n";
      return kInputError;
    }

    Outcome result;
    if (space_info->parsed()) {
      result = cmd_space_info(in, f);
    } else if (region_eval->parsed()) {
      result = cmd_region_eval(in, f);
    } else if (cover_check->parsed()) {
      result = cmd_cover_check(in, f);
    } else if (cover_psi->parsed() || cover_phi->parsed()) {
      result = cmd_cover_transfer(in, f, cover_psi->parsed());
    } else if (cantor_check->parsed()) {
      result = cmd_cantor_check(f);
    } else if (cantor_psi->parsed()) {
      result = cmd_cantor_psi(in, f);
    } else if (cantor_phi->parsed()) {
      result = cmd_cantor_phi(in, f);
    } else if (gleason->parsed()) {
      result = cmd_gleason(in, f);
    } else if (ideal->parsed()) {
      result = cmd_ideal(in, f, ideal_op);
    } else if (equiv_cmd->parsed()) {
      result = cmd_equiv(in, f);
    } else if (compose->parsed()) {
      result = cmd_compose(in, f);
    }
    out << io::dump(result.body);
    return result.code;
  } catch (const SyntaxError& e) {
    json body = error_body(std::string(to_string(e.code())), e.what(),
                           {{"input", in.current()}, {"line", e.line()}, {"column", e.column()}});
    body["expected"] = e.expected();
    out << io::dump(body);
    err << "ropen: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    // Refusals on mathematical grounds are verdicts, not input errors.
    const bool verdict = e.code() == ErrorCode::NotIrreducible || e.code() == ErrorCode::NotSurjective;
    out << io::dump(error_body(std::string(to_string(e.code())), e.what(), locate(in, e.what())));
    err << "ropen: " << e.what() << "\n";
    return verdict ? kNegative : kInputError;
  } catch (const InputFailure& e) {
    out << io::dump(error_body("InvalidInput", e.message, e.at));
    err << "ropen: " << e.at << ": " << e.message << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    out << io::dump(error_body("InvalidInput", e.what(), in.current()));
    err << "ropen: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace ropen::cli
