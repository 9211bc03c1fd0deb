#ifndef MAXPLUS_JSON_IO_HPP
#define MAXPLUS_JSON_IO_HPP

#include <json.hpp>

#include "maxplus/capacity.hpp"
#include "maxplus/category.hpp"
#include "maxplus/functional.hpp"
#include "maxplus/space.hpp"

namespace maxplus {

// Functions serialize to plain arrays of numbers, subsets to sorted arrays
// of point indices.
nlohmann::json function_to_json(const RealFunction& phi);
RealFunction function_from_json(const nlohmann::json& j);  // space inferred from length
RealFunction function_from_json(const nlohmann::json& j, const FiniteSpace& space);
nlohmann::json subset_to_json(const Subset& s);
Subset subset_from_json(const nlohmann::json& j, const FiniteSpace& space);

/// Capacity format: {"size": n, "values": [{"set": [indices], "value": v}, ...]}.
/// The loader accepts a sparse list: unlisted subsets default to the
/// maximum of listed subsets they contain (monotone closure), after which
/// the table is validated as usual. The writer always emits all 2^n rows.
nlohmann::json capacity_to_json(const Capacity& c);
Capacity capacity_from_json(const nlohmann::json& j);

/// Density format: {"weights": [...]}.
nlohmann::json density_to_json(const PossibilityDensity& d);
PossibilityDensity density_from_json(const nlohmann::json& j);

/// Outer format: {"weights": [...], "supports": [density or outer, ...]}.
bool json_outer_is_nested(const nlohmann::json& j);
nlohmann::json outer_to_json(const FiniteSupportOuter& outer);
nlohmann::json outer_to_json(const NestedSupportOuter& outer);
FiniteSupportOuter outer_from_json(const nlohmann::json& j);
NestedSupportOuter nested_outer_from_json(const nlohmann::json& j);

/// Functional files either wrap a capacity,
///   {"type": "capacity", "capacity": {...}},
/// or name a black box from the falsification catalog,
///   {"type": "blackbox", "name": "max"|"min"|"mean"|"max_plus_min"|"scaled_point",
///    "size": n, "point": k, "factor": a}
/// ("point"/"factor" apply to scaled_point only).
Functional functional_from_json(const nlohmann::json& j);

nlohmann::json property_witness_to_json(const PropertyWitness& w);
nlohmann::json property_check_to_json(const PropertyCheck& check);
nlohmann::json property_report_to_json(const PropertyReport& report);
nlohmann::json law_check_to_json(const LawCheck& check);
nlohmann::json monad_report_to_json(const MonadLawReport& report);

}  // namespace maxplus

#endif
