#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "flexalg/error.hpp"
#include "flexalg/io/json_io.hpp"
#include "flexalg/jet/realize.hpp"

using namespace flexalg;
using io::json;

namespace {

struct Globals {
  std::string in = "-";
  std::string out = "-";
  std::uint64_t seed = 0;
  unsigned bound = kDefaultNilpotencyBound;
  std::optional<unsigned> budget;
};

// Input-side problems the user must fix (missing file); exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_input(const Globals& g) {
  std::stringstream buf;
  if (g.in == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(g.in);
    if (!f) throw UsageError("cannot open input file '" + g.in + "'");
    buf << f.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("input is not valid JSON: ") + e.what());
  }
}

void write_output(const Globals& g, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw UsageError("cannot open output file '" + g.out + "'");
  f << text;
}

unsigned order_field(const json& doc) {
  if (!doc.contains("order")) return 1;
  const json& o = doc.at("order");
  if (!o.is_number_integer() || o.get<long long>() < 1)
    throw Error(ErrorCode::ParseError, "order must be a positive integer");
  return static_cast<unsigned>(o.get<long long>());
}

const json& need(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return doc.at(key);
}

json lnd_verify(const Globals& g, const json& doc) {
  const Ring ring = io::ring_from_json(doc);
  const Derivation d = io::derivation_from_json(ring, need(doc, "derivation"));
  return io::certificate_to_json(certify_nilpotent(d, g.bound));
}

json lnd_exp(const Globals& g, const json& doc) {
  const Ring ring = io::ring_from_json(doc);
  const Derivation d = io::derivation_from_json(ring, need(doc, "derivation"));
  const FlowTime t = doc.contains("time") ? io::time_from_json(doc.at("time")) : FlowTime{Rational(1)};
  const FlowStep step(d, t, g.bound);
  json out{{"certificate", io::certificate_to_json(step.certificate())}};
  if (step.is_symbolic()) {
    AutWord w(ring);
    w.push_back(step);
    out["forward"] = io::polymap_to_json(word_to_symbolic_map(w));
  } else {
    out["forward"] = io::polymap_to_json(step.map_at(step.rational_time()));
    out["inverse"] = io::polymap_to_json(step.map_at(-step.rational_time()));
  }
  return out;
}

json lnd_replica(const Globals&, const json& doc) {
  const Ring ring = io::ring_from_json(doc);
  const Derivation d = io::derivation_from_json(ring, need(doc, "derivation"));
  const Polynomial f = io::poly_from_json(ring, need(doc, "f"));
  return {{"variables", io::ring_to_json(ring)}, {"derivation", io::derivation_to_json(replica(d, f))}};
}

json aut_apply(const Globals& g, const json& doc) {
  const Ring ring = io::ring_from_json(doc);
  const AutWord w = io::word_from_json(ring, need(doc, "word"), g.bound);
  json out{{"point", io::point_to_json(word_apply(w, io::point_from_json(need(doc, "point"))))}};
  if (doc.contains("map") && doc.at("map") == true) {
    const PolyAutomorphism a = word_to_map(w);
    out["forward"] = io::polymap_to_json(a.forward());
    out["inverse"] = io::polymap_to_json(a.inverse());
    out["volume_preserving"] = volume_check(a);
  }
  return out;
}

json aut_jet(const Globals& g, const json& doc) {
  const Ring ring = io::ring_from_json(doc);
  const AutWord w = io::word_from_json(ring, need(doc, "word"), g.bound);
  return io::jet_to_json(jet_of(w, io::point_from_json(need(doc, "point")), order_field(doc)));
}

json jet_psi(const Globals&, const json& doc) { return io::homform_to_json(psi(io::jet_from_json(doc))); }

json jet_kappa(const Globals&, const json& doc) {
  // Accepts a homogeneous form document or a jet document.
  const HomForm h = doc.contains("forms") ? io::homform_from_json(doc) : psi(io::jet_from_json(doc));
  const Polynomial k = kappa(h);
  return {{"kappa", k.to_string()}, {"volume", k.is_zero()}};
}

json jet_realize(const Globals& g, const json& doc) {
  const Ring ring = io::ring_from_json(doc);
  const QMatrix a = io::matrix_from_json(need(doc, "matrix"));
  const auto p = io::point_from_json(need(doc, "point"));
  const auto frozen = doc.contains("frozen") ? io::points_from_json(doc.at("frozen")) : std::vector<std::vector<Rational>>{};
  const unsigned m = order_field(doc);
  const AutWord w = realize_linear_part(ring, a, p, frozen, m, RealizeOptions{g.seed});
  json frozen_jets = json::array();
  for (const auto& z : frozen) frozen_jets.push_back(jet_of(w, z, m).is_identity_to(m));
  return {{"variables", io::ring_to_json(ring)},
          {"word", io::word_to_json(w)},
          {"linear_part_matches", jet_of(w, p, 1).linear_part() == a},
          {"frozen_identity", frozen_jets}};
}

TransportOptions transport_options(const Globals& g) {
  TransportOptions o;
  o.seed = g.seed;
  if (g.budget) o.retry_budget = *g.budget;
  return o;
}

json matrix_transport(const Globals& g, const json& doc) {
  const TransportProblem p = io::problem_from_json(doc);
  if (p.sources.size() != p.targets.size())
    throw Error(ErrorCode::InvalidArgument, "sources and targets differ in length");
  return io::transport_to_json(transport(p.sources, p.targets, transport_options(g)));
}

json curve_interpolate(const Globals& g, const json& doc) {
  const Ring ring = io::ring_from_json(doc);
  const auto points = io::points_from_json(need(doc, "points"));
  const auto avoid = doc.contains("avoid") ? io::points_from_json(doc.at("avoid")) : std::vector<Point>{};
  CurveOptions o;
  o.seed = g.seed;
  if (g.budget) o.budget = *g.budget;
  const CurveCertificate c = ga_orbit_through(ring, points, avoid, o);
  json out = io::curve_to_json(c);
  out["verified"] = verify_curve(c, points, avoid);
  return out;
}

json gallery_case(const std::string& name, long p, long q, long m) {
  if (name == "nagata") {
    const auto n = gallery::nagata();
    return {{"variables", io::ring_to_json(n.derivation.ring())},
            {"derivation", io::derivation_to_json(n.derivation)},
            {"invariant", n.invariant.to_string()},
            {"automorphism",
             {{"forward", io::polymap_to_json(n.automorphism.forward())},
              {"inverse", io::polymap_to_json(n.automorphism.inverse())}}},
            {"report", io::report_to_json(gallery::nagata_report())}};
  }
  if (name == "conter") return {{"report", io::report_to_json(gallery::conter_report())}};
  if (name == "nonsep") return {{"report", io::report_to_json(gallery::nonsep_report())}};
  const auto s = gallery::sl2_lnd(p, q, m);
  const auto& k = s.params;
  return {{"params",
           {{"p", k.p}, {"q", k.q}, {"m", k.m}, {"k", k.k}, {"a", k.a}, {"b", k.b}, {"c", k.c}, {"d", k.d},
            {"r0", k.r0}, {"d0", k.d0}, {"s0", k.s0}}},
          {"variables", io::ring_to_json(s.derivation.ring())},
          {"derivation", io::derivation_to_json(s.derivation)},
          {"report", io::report_to_json(s.report)}};
}

int emit_error(const Error& e) {
  json rec{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  rec["index"] = e.index() ? json(*e.index()) : json(nullptr);
  std::cout << rec.dump(2) << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with locally nilpotent derivations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--in", g.in, "input JSON document, - for stdin");
  app.add_option("--out", g.out, "output file, - for stdout");
  app.add_option("--seed", g.seed, "seed for randomized solvers");
  app.add_option("--bound", g.bound, "nilpotency iteration cap")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "retry budget for randomized searches");

  using Handler = std::function<json(const Globals&, const json&)>;
  const std::vector<std::tuple<std::string, std::string, Handler>> commands{
      {"lnd-verify", "certify a derivation as locally nilpotent", lnd_verify},
      {"lnd-exp", "exponential of a derivation at a time", lnd_exp},
      {"lnd-replica", "replica f*d of a derivation", lnd_replica},
      {"aut-apply", "apply an automorphism word to a point", aut_apply},
      {"aut-jet", "jet of a word at a fixed point", aut_jet},
      {"jet-psi", "homogeneous part of a near-identity jet", jet_psi},
      {"jet-kappa", "divergence of a homogeneous form", jet_kappa},
      {"jet-realize", "word with a prescribed linear part", jet_realize},
      {"matrix-transport", "collective transport of matrices", matrix_transport},
      {"curve-interpolate", "orbit curve through points", curve_interpolate},
  };
  Handler selected;
  for (const auto& [name, help, fn] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&, fn = fn] { selected = fn; });
  }
  auto* verify_cmd = app.add_subcommand("matrix-verify", "re-check a transport certificate");
  bool verify_mode = false;
  verify_cmd->callback([&] { verify_mode = true; });
  auto* gallery_cmd = app.add_subcommand("gallery", "worked examples");
  std::string gallery_name;
  long p = 1, q = 2, m = 1;
  gallery_cmd->add_option("--case", gallery_name, "nagata, conter, nonsep or sl2")
      ->required()
      ->check(CLI::IsMember({"nagata", "conter", "nonsep", "sl2"}));
  gallery_cmd->add_option("--p", p, "sl2 parameter p");
  gallery_cmd->add_option("--q", q, "sl2 parameter q");
  gallery_cmd->add_option("--m", m, "sl2 parameter m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gallery_cmd->parsed()) {
      write_output(g, gallery_case(gallery_name, p, q, m));
      return 0;
    }
    const json doc = read_input(g);
    if (verify_mode) {
      const bool ok = verify(io::transport_from_json(doc));
      write_output(g, json{{"verified", ok}});
      return ok ? 0 : 1;
    }
    write_output(g, selected(g, doc));
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    return emit_error(e);
  } catch (const json::exception& e) {
    return emit_error(Error(ErrorCode::ParseError, e.what()));
  }
}
