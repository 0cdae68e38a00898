#pragma once

#include <string>
#include <vector>

#include "building.hpp"
#include "charclass.hpp"
#include "error.hpp"
#include "fan.hpp"
#include "moduli.hpp"
#include "onepar.hpp"
#include "plmap.hpp"

namespace tpb {

// Parsers take raw JSON text and a source label (usually the file name).
// Structural problems raise ParseError naming the source, the JSON path,
// and the violated invariant; errors from the validating constructors keep
// their own names with the same source prefix. Rational entries are bare
// integers or strings "p/q"; integers beyond 64 bits must be decimal
// strings, since JSON numbers of that size lose precision.
Fan parse_fan(const std::string& text, const std::string& source);
PLMap parse_plmap(const std::string& text, const std::string& source, const Fan& fan);
PiecewisePoly parse_piecewise(const std::string& text, const std::string& source,
                              const Fan& fan);
PsiData parse_psi(const std::string& text, const std::string& source, const Fan& fan);
Candidate parse_candidate(const std::string& text, const std::string& source, const Fan& fan);
Verdict parse_verdict(const std::string& text, const std::string& source);
OneParamSubgroup parse_onepar(const std::string& text, const std::string& source);
WeightedFlag parse_weighted_flag(const std::string& text, const std::string& source);
KlyachkoFiltration parse_filtration(const std::string& text, const std::string& source);

// Emitters produce canonical newline terminated JSON: keys in schema order,
// rationals in lowest terms with positive denominator, integral values
// bare. Emitting then parsing gives back an equal value.
std::string emit_fan(const Fan& f);
std::string emit_plmap(const PLMap& m);
std::string emit_piecewise(const Fan& fan, const PiecewisePoly& pp);
std::string emit_psi(const Fan& fan, const PsiData& psi);
std::string emit_candidate(const Candidate& c);
std::string emit_candidate_list(const std::vector<Candidate>& cs);
std::string emit_verdict(const Verdict& v);
std::string emit_onepar(const OneParamSubgroup& l);
std::string emit_weighted_flag(const WeightedFlag& wf);
std::string emit_filtration(const KlyachkoFiltration& f);

// Format reference for one format name, or for every format when the name
// is empty. Unknown names are an Input error.
std::string schema_text(const std::string& name);
std::vector<std::string> schema_names();

}  // namespace tpb
