#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "troploc/arc.hpp"
#include "troploc/newton.hpp"
#include "troploc/splice.hpp"
#include "troploc/tropicalization.hpp"

namespace troploc::cli {

using json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become Errc::parse_error with line and
/// column in the message.
json parse_text(const std::string& text, const std::string& source);
json read_json_file(const std::string& path);

// Scalars. Integers are JSON numbers when they fit in 64 bits, decimal
// strings otherwise. Rationals are canonical strings "p/q" (or "p").
json integer_json(const Integer& v);
Integer parse_integer(const json& j, const std::string& where);
std::string rational_string(const Rational& v);
Rational parse_rational(const json& j, const std::string& where);

json vector_json(const LatticeVector& v);
json vector_json(const RationalVector& v);
json vectors_json(const std::vector<LatticeVector>& vs);
LatticeVector parse_vector(const json& j, std::size_t rank, Lattice lattice, const std::string& where);
/// "2,3", "(2,3)" or "[2,3]".
LatticeVector parse_vector_text(const std::string& text, Lattice lattice = Lattice::N);

json cone_json(const Cone& c);
/// "orthant" or {"rays": [...], "lineality": [...]}.
Cone parse_cone(const json& j, std::size_t rank, const std::string& where);

json series_json(const Series& f);
Series parse_series(const json& j, const std::string& where = "");
/// {"generators": [...]}, {"equations": [...]}, a bare array, or one series.
std::vector<Series> parse_generators(const json& j);

json polyhedron_json(const NewtonPolyhedron& p);
json newton_fan_json(const NewtonFan& nf);

json tropicalization_json(const Tropicalization& t);
Tropicalization parse_tropicalization(const json& j);

json structure_json(const StructureReport& r, const Tropicalization& t);
json extended_cone_json(const ExtendedCone& ec);

json splice_json(const SpliceDiagram& d);
SpliceDiagram parse_splice(const json& j);
json splice_report_json(const SpliceReport& r, const SpliceDiagram& d);
json splice_system_json(const SpliceSystem& s, const SpliceDiagram& d);
json crosscheck_json(const CrosscheckReport& r);
SpliceOptions parse_splice_options(const json& j, const SpliceDiagram& d);

using AnyArc = std::variant<ExactArc, FloatArc>;
AnyArc parse_arc(const json& j);
json arc_json(const ExactArc& a);
json arc_json(const FloatArc& a);

json puiseux_json(const PuiseuxResult<Rational>& r, const PuiseuxOptions& opt);
json puiseux_json(const PuiseuxResult<Complex>& r, const PuiseuxOptions& opt);

}  // namespace troploc::cli
