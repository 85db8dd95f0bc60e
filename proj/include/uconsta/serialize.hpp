#pragma once

// JSON wire formats and CSV/text renderers for every external surface:
//   field element        <-> [c0, ..., c_{m-1}]           (scalar allowed on input)
//   R element            <-> {"a": [...], "b": [...]}
//   quotient params      <-> {"p", "m", "modulus", "s", "alpha"}
//   quotient polynomial  <-> [RuElement, ...] constant term first
//   code spec            <-> {"p","m","s","alpha","kind","i","t","omega","h"}
//                            (h entries are ints for m = 1, arrays otherwise)
// Report renderers are deterministic: same inputs and seed give byte-equal
// output regardless of thread count.

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "uconsta/distance.hpp"
#include "uconsta/isometry.hpp"

namespace uconsta {

using nlohmann::json;

json field_element_to_json(const FieldElement& x);
FieldElement field_element_from_json(const FieldParams& field, const json& j);

json field_params_to_json(const FieldParams& field);

json ru_to_json(const RuElement& x);
RuElement ru_from_json(const FieldParams& field, const json& j);

json quotient_params_to_json(const QuotientParams& params);
QuotientParams quotient_params_from_json(const json& j, const Limits& limits = {});

json poly_to_json(const QuotientPoly& f);
QuotientPoly poly_from_json(const QuotientParams& params, const json& j);

SpecKind spec_kind_from_string(const std::string& s);
json code_spec_to_json(const CodeSpec& spec);
/// Parses and validates; the JSON carries its own p/m/s/alpha.
CodeSpec code_spec_from_json(const json& j, const Limits& limits = {},
                             const ValidateOptions& opts = {});

json code_to_json(const Code& code);

/// Compact comma-free cell forms used in CSV: field elements as p-ary digits
/// joined by '.', polynomials as coefficients joined by '|', "0" for the
/// zero polynomial.
std::string h_to_string(const std::vector<FieldElement>& h);
std::string poly_to_string(const QuotientPoly& f);

// --- weight distributions ---
std::string weights_to_csv(const std::map<unsigned, uint64_t>& hist);
json weights_to_json(const std::map<unsigned, uint64_t>& hist);

// --- verify sweep reports ---
std::string sweep_to_text(const SweepReport& report);
std::string sweep_to_csv(const SweepReport& report);  // kind,i,t,omega,h,dim,formula,oracle,match
json sweep_to_json(const SweepReport& report);

// --- distance tables (with the per-type summary) ---
std::string table_to_text(const QuotientParams& params, const std::vector<TableRow>& rows);
std::string table_to_csv(const std::vector<TableRow>& rows);  // i,case,l,t,k,distance
json table_to_json(const QuotientParams& params, const std::vector<TableRow>& rows);

// --- isometry reports ---
std::string isometry_report_to_text(const IsometryContext& ctx, const IsometryCheckReport& r);
json isometry_report_to_json(const IsometryContext& ctx, const IsometryCheckReport& r);

}  // namespace uconsta
