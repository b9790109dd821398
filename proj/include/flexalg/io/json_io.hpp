#pragma once

#include <json.hpp>

#include "flexalg/gallery/gallery.hpp"
#include "flexalg/interp/interpolation.hpp"
#include "flexalg/jet/jet.hpp"
#include "flexalg/lnd/aut_word.hpp"
#include "flexalg/lnd/nilpotency.hpp"
#include "flexalg/matrix/transport.hpp"

// JSON documents. Polynomials and rationals are strings in the textual
// format; structural problems in a document raise ParseError.
namespace flexalg::io {

using nlohmann::json;

json ring_to_json(const Ring& ring);
// Reads doc["variables"].
Ring ring_from_json(const json& doc);

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);
json point_to_json(const std::vector<Rational>& p);
std::vector<Rational> point_from_json(const json& j);
std::vector<std::vector<Rational>> points_from_json(const json& j);

Polynomial poly_from_json(const Ring& ring, const json& j);

// Row-major grid of rational strings.
json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);

// [[variable, polynomial], ...] in ring order. On input missing variables
// get 0 and unknown names raise UnknownVariable.
json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const Ring& ring, const json& j);

// A rational string, "t", or "c*t" for a scaled symbolic time.
json time_to_json(const FlowTime& t);
FlowTime time_from_json(const json& j);

// [{"derivation": ..., "time": ...}, ...], first entry outermost.
json word_to_json(const AutWord& w);
AutWord word_from_json(const Ring& ring, const json& j, unsigned bound = kDefaultNilpotencyBound);

json polymap_to_json(const PolyMap& f);
json certificate_to_json(const NilpotencyCertificate& c);

// {variables, base, order, images}.
json jet_to_json(const Jet& j);
Jet jet_from_json(const json& doc);
// {variables, degree, forms}.
json homform_to_json(const HomForm& h);
HomForm homform_from_json(const json& doc);

// {problem: {mode, sources, targets}, word: [{side, k, l, coeff, time}],
// verified}. Generator indices are 1-based.
json transport_to_json(const TransportCertificate& c);
TransportCertificate transport_from_json(const json& doc);
TransportProblem problem_from_json(const json& doc);

// {variables, word, derivation, times, parameterization}.
json curve_to_json(const CurveCertificate& c);

json report_to_json(const gallery::Report& r);

}  // namespace flexalg::io
