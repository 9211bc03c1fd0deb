#include "maxplus/json_io.hpp"

#include <algorithm>

#include "maxplus/representation.hpp"

namespace maxplus {

using nlohmann::json;

namespace {

double number_at(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
    return j.get<double>();
}

std::vector<double> number_array(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const json& v : j) out.push_back(number_at(v, what));
    return out;
}

}  // namespace

json function_to_json(const RealFunction& phi) { return json(phi.values()); }

RealFunction function_from_json(const json& j) {
    std::vector<double> values = number_array(j, "function");
    if (values.empty()) throw ParseError("function: needs at least one value");
    FiniteSpace space(static_cast<int>(values.size()));
    return RealFunction(std::move(space), std::move(values));
}

RealFunction function_from_json(const json& j, const FiniteSpace& space) {
    std::vector<double> values = number_array(j, "function");
    return RealFunction(space, std::move(values));
}

json subset_to_json(const Subset& s) { return json(s.points()); }

Subset subset_from_json(const json& j, const FiniteSpace& space) {
    if (!j.is_array()) throw ParseError("subset: expected an array of point indices");
    std::uint32_t bits = 0;
    for (const json& v : j) {
        if (!v.is_number_integer()) throw ParseError("subset: indices must be integers");
        const long point = v.get<long>();
        if (point < 0 || point >= space.size())
            throw ParseError("subset: index " + std::to_string(point) + " out of range");
        bits |= 1u << point;
    }
    return Subset(space, bits);
}

json capacity_to_json(const Capacity& c) {
    json values = json::array();
    for (std::uint32_t s = 0; s <= c.space().full_bits(); ++s)
        values.push_back({{"set", subset_to_json(Subset(c.space(), s))}, {"value", c.at_bits(s)}});
    return json{{"size", c.space().size()}, {"values", std::move(values)}};
}

Capacity capacity_from_json(const json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("values"))
        throw ParseError("capacity: expected {\"size\": n, \"values\": [...]}");
    if (!j["size"].is_number_integer()) throw ParseError("capacity: size must be an integer");
    const int n = j["size"].get<int>();
    if (n < 1 || n > kMaxSpaceSize) throw ParseError("capacity: size out of range");
    FiniteSpace space(n);
    const std::size_t entries = std::size_t{1} << n;
    std::vector<double> listed(entries, 0.0);
    std::vector<bool> seen(entries, false);
    if (!j["values"].is_array()) throw ParseError("capacity: values must be an array");
    for (const json& row : j["values"]) {
        if (!row.is_object() || !row.contains("set") || !row.contains("value"))
            throw ParseError("capacity: each row needs \"set\" and \"value\"");
        const Subset s = subset_from_json(row["set"], space);
        listed[s.bits()] = number_at(row["value"], "capacity value");
        seen[s.bits()] = true;
    }
    // Monotone closure: an unlisted subset takes the maximum over listed
    // subsets it contains (subset-sum sweep), with 0 as the floor.
    std::vector<double> closure(entries, 0.0);
    for (std::uint32_t s = 0; s < entries; ++s)
        if (seen[s]) closure[s] = listed[s];
    for (int x = 0; x < n; ++x)
        for (std::uint32_t s = 0; s < entries; ++s)
            if ((s >> x) & 1u) closure[s] = std::max(closure[s], closure[s & ~(1u << x)]);
    std::vector<double> table(entries);
    for (std::uint32_t s = 0; s < entries; ++s) table[s] = seen[s] ? listed[s] : closure[s];
    return validate_capacity(space, std::move(table));
}

json density_to_json(const PossibilityDensity& d) { return json{{"weights", d.weights()}}; }

PossibilityDensity density_from_json(const json& j) {
    if (!j.is_object() || !j.contains("weights"))
        throw ParseError("density: expected {\"weights\": [...]}");
    std::vector<double> weights = number_array(j["weights"], "density weights");
    if (weights.empty()) throw ParseError("density: needs at least one weight");
    FiniteSpace space(static_cast<int>(weights.size()));
    return PossibilityDensity(std::move(space), std::move(weights));
}

bool json_outer_is_nested(const json& j) {
    return j.is_object() && j.contains("supports") && j["supports"].is_array() &&
           !j["supports"].empty() && j["supports"].front().is_object() &&
           j["supports"].front().contains("supports");
}

json outer_to_json(const FiniteSupportOuter& outer) {
    json supports = json::array();
    for (const PossibilityDensity& d : outer.supports()) supports.push_back(density_to_json(d));
    return json{{"weights", outer.weights()}, {"supports", std::move(supports)}};
}

json outer_to_json(const NestedSupportOuter& outer) {
    json supports = json::array();
    for (const FiniteSupportOuter& inner : outer.supports())
        supports.push_back(outer_to_json(inner));
    return json{{"weights", outer.weights()}, {"supports", std::move(supports)}};
}

FiniteSupportOuter outer_from_json(const json& j) {
    if (!j.is_object() || !j.contains("weights") || !j.contains("supports"))
        throw ParseError("outer: expected {\"weights\": [...], \"supports\": [...]}");
    std::vector<double> weights = number_array(j["weights"], "outer weights");
    std::vector<PossibilityDensity> supports;
    for (const json& s : j["supports"]) {
        if (s.is_object() && s.contains("supports"))
            throw ParseError("outer: nested support where a density was expected");
        supports.push_back(density_from_json(s));
    }
    return FiniteSupportOuter(std::move(weights), std::move(supports));
}

NestedSupportOuter nested_outer_from_json(const json& j) {
    if (!j.is_object() || !j.contains("weights") || !j.contains("supports"))
        throw ParseError("outer: expected {\"weights\": [...], \"supports\": [...]}");
    std::vector<double> weights = number_array(j["weights"], "outer weights");
    std::vector<FiniteSupportOuter> supports;
    for (const json& s : j["supports"]) supports.push_back(outer_from_json(s));
    return NestedSupportOuter(std::move(weights), std::move(supports));
}

Functional functional_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw ParseError("functional: expected an object with a \"type\"");
    const std::string type = j["type"].get<std::string>();
    if (type == "capacity") {
        if (!j.contains("capacity")) throw ParseError("functional: missing \"capacity\"");
        return integral_functional(capacity_from_json(j["capacity"]));
    }
    if (type != "blackbox") throw ParseError("functional: unknown type \"" + type + "\"");
    if (!j.contains("name") || !j.contains("size"))
        throw ParseError("functional: blackbox needs \"name\" and \"size\"");
    const std::string name = j["name"].get<std::string>();
    const int size = j["size"].get<int>();
    FiniteSpace space(size);
    if (name == "max")
        return Functional(space, FunctionalKind::black_box, "max",
                          [](const RealFunction& phi) { return phi.max_value(); });
    if (name == "min")
        return Functional(space, FunctionalKind::black_box, "min",
                          [](const RealFunction& phi) { return phi.min_value(); });
    if (name == "mean")
        return Functional(space, FunctionalKind::black_box, "mean", [](const RealFunction& phi) {
            double total = 0.0;
            for (double v : phi.values()) total += v;
            return total / static_cast<double>(phi.size());
        });
    if (name == "max_plus_min")
        return Functional(space, FunctionalKind::black_box, "max_plus_min",
                          [](const RealFunction& phi) {
                              return phi.max_value() + phi.min_value();
                          });
    if (name == "scaled_point") {
        const int point = j.value("point", 0);
        const double factor = j.value("factor", 2.0);
        if (point < 0 || point >= size) throw ParseError("functional: point out of range");
        return Functional(space, FunctionalKind::black_box,
                          "scaled_point(" + std::to_string(point) + ")",
                          [point, factor](const RealFunction& phi) {
                              return factor * phi.value(point);
                          });
    }
    throw ParseError("functional: unknown blackbox \"" + name + "\"");
}

json property_witness_to_json(const PropertyWitness& w) {
    json inputs = json::array();
    for (const RealFunction& f : w.inputs) inputs.push_back(function_to_json(f));
    json out{{"trial", w.trial},
             {"inputs", std::move(inputs)},
             {"lhs", w.lhs},
             {"rhs", w.rhs},
             {"deviation", w.deviation}};
    if (w.shift) out["shift"] = *w.shift;
    return out;
}

json property_check_to_json(const PropertyCheck& check) {
    json out{{"property", check.property},
             {"passed", check.passed},
             {"trials", check.trials},
             {"max_deviation", check.max_deviation}};
    out["witness"] = check.witness ? property_witness_to_json(*check.witness) : json(nullptr);
    return out;
}

json property_report_to_json(const PropertyReport& report) {
    json verdicts = json::array();
    verdicts.push_back(property_check_to_json(report.normalized));
    verdicts.push_back(property_check_to_json(report.monotone));
    verdicts.push_back(property_check_to_json(report.plus_homogeneous));
    verdicts.push_back(property_check_to_json(report.comonotone_maxitive));
    verdicts.push_back(property_check_to_json(report.fully_maxitive));
    return json{{"seed", report.seed},
                {"trials", report.trials},
                {"tol", report.tol},
                {"verdicts", std::move(verdicts)},
                {"axioms_pass", report.axioms_pass()}};
}

json law_check_to_json(const LawCheck& check) {
    json out{{"law", check.law},
             {"passed", check.passed},
             {"trials", check.trials},
             {"max_deviation", check.max_deviation}};
    out["failing_trial"] = check.failing_trial ? json(*check.failing_trial) : json(nullptr);
    return out;
}

json monad_report_to_json(const MonadLawReport& report) {
    json verdicts = json::array();
    verdicts.push_back(law_check_to_json(report.left_unit));
    verdicts.push_back(law_check_to_json(report.right_unit));
    verdicts.push_back(law_check_to_json(report.associativity));
    json out{{"seed", report.seed},
             {"trials", report.trials},
             {"tol", report.tol},
             {"verdicts", std::move(verdicts)},
             {"all_passed", report.all_passed()}};
    if (report.witness_outer) {
        out["witness"] = json{{"outer", outer_to_json(*report.witness_outer)},
                              {"subset_bits", report.witness_subset_bits}};
    } else if (report.witness_flat) {
        out["witness"] = json{{"outer", outer_to_json(*report.witness_flat)},
                              {"subset_bits", report.witness_subset_bits}};
    } else {
        out["witness"] = json(nullptr);
    }
    return out;
}

}  // namespace maxplus
