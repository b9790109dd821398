#include "flexalg/io/json_io.hpp"

#include "flexalg/error.hpp"

namespace flexalg::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field '") + key + "'");
  return doc.at(key);
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

std::string text(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad(std::string(what) + " must be a string");
}

std::size_t index_1based(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) bad(std::string(what) + " must be a positive integer");
  return static_cast<std::size_t>(j.get<long long>() - 1);
}

json strings(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

json ring_to_json(const Ring& ring) { return ring.variables(); }

Ring ring_from_json(const json& doc) {
  std::vector<std::string> vars;
  for (const auto& v : array(field(doc, "variables"), "variables")) vars.push_back(text(v, "variable"));
  return Ring(std::move(vars));
}

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  try {
    return Rational::parse(text(j, "rational"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    bad(e.what());
  }
}

json point_to_json(const std::vector<Rational>& p) {
  json out = json::array();
  for (const auto& r : p) out.push_back(rational_to_json(r));
  return out;
}

std::vector<Rational> point_from_json(const json& j) {
  std::vector<Rational> out;
  for (const auto& r : array(j, "point")) out.push_back(rational_from_json(r));
  return out;
}

std::vector<std::vector<Rational>> points_from_json(const json& j) {
  std::vector<std::vector<Rational>> out;
  for (const auto& p : array(j, "points")) out.push_back(point_from_json(p));
  return out;
}

Polynomial poly_from_json(const Ring& ring, const json& j) { return parse_polynomial(ring, text(j, "polynomial")); }

json matrix_to_json(const QMatrix& m) {
  json out = json::array();
  for (const auto& row : m.grid()) out.push_back(point_to_json(row));
  return out;
}

QMatrix matrix_from_json(const json& j) {
  std::vector<std::vector<Rational>> grid;
  for (const auto& row : array(j, "matrix")) grid.push_back(point_from_json(row));
  if (grid.empty()) bad("matrix must have at least one row");
  return QMatrix(grid);
}

json derivation_to_json(const Derivation& d) {
  json out = json::array();
  for (std::size_t i = 0; i < d.arity(); ++i) out.push_back(json::array({d.ring().name(i), d[i].to_string()}));
  return out;
}

Derivation derivation_from_json(const Ring& ring, const json& j) {
  std::vector<Polynomial> coeffs(ring.arity(), Polynomial(ring));
  std::vector<bool> seen(ring.arity(), false);
  for (const auto& pair : array(j, "derivation")) {
    if (!pair.is_array() || pair.size() != 2) bad("derivation entries must be [variable, polynomial] pairs");
    const std::size_t i = ring.index_of(text(pair[0], "variable"));
    if (seen[i]) bad("variable listed twice in derivation");
    seen[i] = true;
    coeffs[i] = poly_from_json(ring, pair[1]);
  }
  return Derivation(ring, std::move(coeffs));
}

json time_to_json(const FlowTime& t) {
  if (const auto* r = std::get_if<Rational>(&t)) return r->to_string();
  const Rational& scale = std::get<SymbolicTime>(t).scale;
  return scale == Rational(1) ? std::string("t") : scale.to_string() + "*t";
}

FlowTime time_from_json(const json& j) {
  const std::string s = text(j, "time");
  if (s == "t") return SymbolicTime{};
  if (s.size() > 2 && s.ends_with("*t")) return SymbolicTime{Rational::parse(s.substr(0, s.size() - 2))};
  return rational_from_json(j);
}

json word_to_json(const AutWord& w) {
  json out = json::array();
  for (const auto& s : w.steps())
    out.push_back({{"derivation", derivation_to_json(s.derivation())}, {"time", time_to_json(s.time())}});
  return out;
}

AutWord word_from_json(const Ring& ring, const json& j, unsigned bound) {
  std::vector<FlowStep> steps;
  for (const auto& s : array(j, "word"))
    steps.emplace_back(derivation_from_json(ring, field(s, "derivation")), time_from_json(field(s, "time")), bound);
  return AutWord(ring, std::move(steps));
}

json polymap_to_json(const PolyMap& f) {
  return {{"variables", ring_to_json(f.ring())}, {"images", strings(f.images())}};
}

json certificate_to_json(const NilpotencyCertificate& c) {
  return {{"status", c.nilpotent() ? "Nilpotent" : "ExceededBound"},
          {"orders", c.orders},
          {"bound", c.bound},
          {"triangular", c.triangular}};
}

json jet_to_json(const Jet& j) {
  return {{"variables", ring_to_json(j.ring())},
          {"base", point_to_json(j.base())},
          {"order", j.order()},
          {"images", strings(j.images().images())}};
}

Jet jet_from_json(const json& doc) {
  const Ring ring = ring_from_json(doc);
  const json& order = field(doc, "order");
  if (!order.is_number_integer() || order.get<long long>() < 1) bad("order must be a positive integer");
  std::vector<Polynomial> images;
  for (const auto& p : array(field(doc, "images"), "images")) images.push_back(poly_from_json(ring, p));
  return Jet(point_from_json(field(doc, "base")), static_cast<unsigned>(order.get<long long>()),
             PolyMap(ring, std::move(images)));
}

json homform_to_json(const HomForm& h) {
  return {{"variables", ring_to_json(h.ring())}, {"degree", h.degree()}, {"forms", strings(h.forms())}};
}

HomForm homform_from_json(const json& doc) {
  const Ring ring = ring_from_json(doc);
  const json& degree = field(doc, "degree");
  if (!degree.is_number_integer() || degree.get<long long>() < 0) bad("degree must be a nonnegative integer");
  std::vector<Polynomial> forms;
  for (const auto& p : array(field(doc, "forms"), "forms")) forms.push_back(poly_from_json(ring, p));
  return HomForm(ring, static_cast<unsigned>(degree.get<long long>()), std::move(forms));
}

TransportProblem problem_from_json(const json& doc) {
  TransportProblem p;
  p.mode = parse_mode(text(field(doc, "mode"), "mode"));
  for (const auto& m : array(field(doc, "sources"), "sources")) p.sources.emplace_back(matrix_from_json(m), p.mode);
  for (const auto& m : array(field(doc, "targets"), "targets")) p.targets.emplace_back(matrix_from_json(m), p.mode);
  return p;
}

json transport_to_json(const TransportCertificate& c) {
  json sources = json::array(), targets = json::array(), word = json::array();
  for (const auto& s : c.problem.sources) sources.push_back(matrix_to_json(s.entries()));
  for (const auto& t : c.problem.targets) targets.push_back(matrix_to_json(t.entries()));
  for (const auto& r : c.word)
    word.push_back({{"side", std::string(to_string(r.generator.side))},
                    {"k", r.generator.k + 1},
                    {"l", r.generator.l + 1},
                    {"coeff", r.coeff.to_string()},
                    {"time", r.time.to_string()}});
  return {{"problem", {{"mode", std::string(to_string(c.problem.mode))}, {"sources", sources}, {"targets", targets}}},
          {"word", word},
          {"verified", c.verified}};
}

TransportCertificate transport_from_json(const json& doc) {
  TransportCertificate c;
  c.problem = problem_from_json(field(doc, "problem"));
  if (c.problem.sources.empty()) bad("certificate has no source matrices");
  const MatrixSpace space = MatrixSpace::of(c.problem.sources.front());
  for (const auto& r : array(field(doc, "word"), "word")) {
    ElemGenerator g{parse_side(text(field(r, "side"), "side")), index_1based(field(r, "k"), "k"),
                    index_1based(field(r, "l"), "l")};
    c.word.push_back(ElemReplica{g, poly_from_json(space.ring(), field(r, "coeff")), rational_from_json(field(r, "time"))});
  }
  const json& v = doc.contains("verified") ? doc.at("verified") : json(false);
  if (!v.is_boolean()) bad("verified must be a boolean");
  c.verified = v.get<bool>();
  return c;
}

json curve_to_json(const CurveCertificate& c) {
  json times = json::array();
  for (const auto& t : c.times) times.push_back(t.to_string());
  return {{"variables", ring_to_json(c.word.ring())},
          {"word", word_to_json(c.word)},
          {"derivation", derivation_to_json(c.derivation)},
          {"times", times},
          {"parameterization",
           {{"parameter", c.parameter_ring.name(0)}, {"coordinates", strings(c.parameterization)}}}};
}

json report_to_json(const gallery::Report& r) {
  json items = json::array();
  for (const auto& a : r.assertions) items.push_back({{"name", a.name}, {"pass", a.pass}, {"value", a.value}});
  return {{"name", r.name}, {"pass", r.all_pass()}, {"assertions", items}};
}

}  // namespace flexalg::io
