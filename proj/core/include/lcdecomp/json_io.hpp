#ifndef LCDECOMP_JSON_IO_HPP
#define LCDECOMP_JSON_IO_HPP

#include "lcdecomp/cone_decomp.hpp"
#include "lcdecomp/gamma_dim3.hpp"
#include "lcdecomp/monomial_engine.hpp"
#include "lcdecomp/sacm.hpp"

#include <json.hpp>

namespace lcdecomp {

using Json = nlohmann::json;

// Emitters. Objects use sorted keys, so dumps are byte-deterministic.
Json to_json(const Rational& q);
Json to_json(const RatFunc& f);
Json to_json(const Table& t);
Json to_json(const DegreeSequence& d);
Json to_json(const GeneratorRef& g);
Json to_json(const PointModule& p);
Json to_json(const TermGenerator& g);
Json to_json(const Decomposition& d);
Json to_json(const Witness& w);
Json to_json(const NonVertexCertificate& c);
Json to_json(const MonomialIdeal& I);
Json to_json(const GradedModule& M);
Json to_json(const Factor& f);
Json to_json(const FactorList& f, int n);
Json to_json(const FiltrationResult& f);
Json to_json(const Classification& c);
Json to_json(const Verdict& v);
Json to_json(const DiagramTables& d);

// Parsers. Schema violations throw Error(InvalidInput).
Rational rational_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
Table table_from_json(const Json& j);
DegreeSequence degree_sequence_from_json(const Json& j, int n);
GeneratorRef generator_from_json(const Json& j);
MonomialIdeal ideal_from_json(const Json& j);
/// Accepts {"summands": [...]} or a bare ideal {"n", "gens"}, read as the quotient R/I.
GradedModule module_from_json(const Json& j);
FactorList factors_from_json(const Json& j, int* n_out);
DiagramTables diagram_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j, int n, Orientation o);

Json parse_json_text(const std::string& text);

}  // namespace lcdecomp

#endif
