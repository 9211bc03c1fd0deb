// Command-line surface over the capacity / max-plus integral library.
// Exit codes: 0 all checks passed, 1 a mathematical property failed
// (report still emitted), 2 malformed input or usage.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "maxplus/category.hpp"
#include "maxplus/integral.hpp"
#include "maxplus/json_io.hpp"
#include "maxplus/representation.hpp"
#include "maxplus/rng.hpp"

using nlohmann::json;

namespace {

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string output;
    std::uint64_t seed = 0;
    bool seed_given = false;
    long trials = 1000;
    double tol = 1e-9;
    std::vector<int> sizes;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw maxplus::ParseError("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw maxplus::ParseError(path + ": " + e.what());
    }
}

void emit(const RunConfig& cfg, const json& report) {
    if (cfg.output.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw maxplus::ParseError("cannot open output file: " + cfg.output);
    out << report.dump(2) << "\n";
}

const std::string& input_at(const RunConfig& cfg, std::size_t index, const char* what) {
    if (index >= cfg.inputs.size())
        throw maxplus::ParseError(std::string("missing --in file: expected ") + what);
    return cfg.inputs[index];
}

void require_seed(const RunConfig& cfg) {
    if (!cfg.seed_given)
        throw maxplus::ParseError("this command samples randomness: pass an explicit --seed");
}

int size_at(const RunConfig& cfg, std::size_t index, const char* what) {
    if (index >= cfg.sizes.size())
        throw maxplus::ParseError(std::string("missing --size: expected ") + what);
    return cfg.sizes[index];
}

int run_integrate(const RunConfig& cfg) {
    maxplus::Capacity c = maxplus::capacity_from_json(load_json(input_at(cfg, 0, "capacity")));
    maxplus::RealFunction phi =
        maxplus::function_from_json(load_json(input_at(cfg, 1, "function")), c.space());
    emit(cfg, json{{"command", "integrate"},
                   {"value", maxplus::maxplus_integral(c, phi)}});
    return 0;
}

int run_compare(const RunConfig& cfg) {
    maxplus::Capacity c = maxplus::capacity_from_json(load_json(input_at(cfg, 0, "capacity")));
    maxplus::RealFunction phi =
        maxplus::function_from_json(load_json(input_at(cfg, 1, "function")), c.space());
    json values{{"maxplus", maxplus::maxplus_integral(c, phi)},
                {"choquet", maxplus::choquet_integral(c, phi)}};
    json report{{"command", "compare-integrals"}};
    if (phi.min_value() >= 0.0 && phi.max_value() <= 1.0) {
        values["sugeno"] = maxplus::sugeno_integral(c, phi);
    } else {
        values["sugeno"] = nullptr;
        report["note"] = "sugeno column omitted: function leaves [0,1]";
    }
    report["values"] = std::move(values);
    emit(cfg, report);
    return 0;
}

int run_reconstruct(const RunConfig& cfg) {
    maxplus::Functional i =
        maxplus::functional_from_json(load_json(input_at(cfg, 0, "functional")));
    maxplus::Capacity c = maxplus::reconstruct_capacity(i, cfg.tol);
    emit(cfg, json{{"command", "reconstruct"},
                   {"tol", cfg.tol},
                   {"capacity", maxplus::capacity_to_json(c)}});
    return 0;
}

int run_roundtrip(const RunConfig& cfg) {
    double worst = 0.0;
    long runs = 0;
    if (!cfg.inputs.empty()) {
        maxplus::Capacity c = maxplus::capacity_from_json(load_json(cfg.inputs[0]));
        worst = maxplus::roundtrip_check(c, cfg.tol);
        runs = 1;
    } else {
        require_seed(cfg);
        maxplus::FiniteSpace space(size_at(cfg, 0, "the space size for random capacities"));
        for (long t = 0; t < cfg.trials; ++t) {
            maxplus::Capacity c = maxplus::random_capacity(
                space, maxplus::mix_seed(cfg.seed, static_cast<std::uint64_t>(t)));
            worst = std::max(worst, maxplus::roundtrip_check(c, cfg.tol));
            ++runs;
        }
    }
    const bool passed = worst < cfg.tol;
    emit(cfg, json{{"command", "roundtrip"},
                   {"seed", cfg.seed},
                   {"trials", runs},
                   {"max_deviation", worst},
                   {"verdicts", json::array({json{{"name", "roundtrip"}, {"passed", passed}}})},
                   {"witnesses", json::array()}});
    return passed ? 0 : 1;
}

int run_properties(const RunConfig& cfg) {
    require_seed(cfg);
    maxplus::Functional i =
        maxplus::functional_from_json(load_json(input_at(cfg, 0, "functional")));
    maxplus::PropertyReport report = maxplus::property_report(i, cfg.trials, cfg.seed, cfg.tol);
    json body = maxplus::property_report_to_json(report);
    json witnesses = json::array();
    for (const json& verdict : body["verdicts"])
        if (!verdict["witness"].is_null()) witnesses.push_back(verdict["witness"]);
    body["command"] = "properties";
    body["functional"] = i.label();
    body["witnesses"] = std::move(witnesses);
    emit(cfg, body);
    return report.axioms_pass() ? 0 : 1;
}

int run_witness(const RunConfig& cfg) {
    maxplus::Capacity c = maxplus::capacity_from_json(load_json(input_at(cfg, 0, "capacity")));
    auto witness = maxplus::maxitivity_witness(c);
    if (!witness) {
        emit(cfg, json{{"command", "witness"},
                       {"possibility", true},
                       {"witness", nullptr}});
        return 0;
    }
    maxplus::Functional i = maxplus::integral_functional(c);
    const auto& [phi, psi] = *witness;
    const double joint = i(maxplus::pointwise_max(phi, psi));
    const double separate = std::max(i(phi), i(psi));
    const bool verified = joint - separate > cfg.tol;
    emit(cfg, json{{"command", "witness"},
                   {"possibility", false},
                   {"witness", json{{"phi", maxplus::function_to_json(phi)},
                                    {"psi", maxplus::function_to_json(psi)},
                                    {"integral_join", joint},
                                    {"integral_max", separate},
                                    {"gap", joint - separate},
                                    {"verified", verified}}}});
    return verified ? 0 : 1;
}

int run_naturality(const RunConfig& cfg) {
    require_seed(cfg);
    double worst = 0.0;
    if (cfg.inputs.size() >= 2) {
        maxplus::Capacity c = maxplus::capacity_from_json(load_json(cfg.inputs[0]));
        const json mj = load_json(cfg.inputs[1]);
        if (!mj.contains("domain_size") || !mj.contains("codomain_size") || !mj.contains("image"))
            throw maxplus::ParseError(
                "map: expected {\"domain_size\", \"codomain_size\", \"image\"}");
        maxplus::SpaceMap f(maxplus::FiniteSpace(mj["domain_size"].get<int>()),
                            maxplus::FiniteSpace(mj["codomain_size"].get<int>()),
                            mj["image"].get<std::vector<int>>());
        worst = maxplus::naturality_check(c, f, cfg.trials, cfg.seed);
    } else {
        maxplus::FiniteSpace domain(size_at(cfg, 0, "domain size"));
        maxplus::FiniteSpace codomain(
            cfg.sizes.size() >= 2 ? maxplus::FiniteSpace(cfg.sizes[1]) : domain);
        for (long t = 0; t < cfg.trials; ++t) {
            const std::uint64_t s = maxplus::mix_seed(cfg.seed, static_cast<std::uint64_t>(t));
            maxplus::Capacity c = maxplus::random_capacity(domain, maxplus::mix_seed(s, 0));
            maxplus::SpaceMap f = maxplus::random_map(domain, codomain, maxplus::mix_seed(s, 1));
            worst = std::max(worst, maxplus::naturality_check(c, f, 8, maxplus::mix_seed(s, 2)));
        }
    }
    const bool passed = worst < cfg.tol;
    emit(cfg, json{{"command", "naturality"},
                   {"seed", cfg.seed},
                   {"trials", cfg.trials},
                   {"max_deviation", worst},
                   {"verdicts", json::array({json{{"name", "naturality"}, {"passed", passed}}})},
                   {"witnesses", json::array()}});
    return passed ? 0 : 1;
}

int run_monad_laws(const RunConfig& cfg) {
    require_seed(cfg);
    maxplus::FiniteSpace space(size_at(cfg, 0, "the base space size"));
    maxplus::MonadLawReport report = maxplus::monad_law_harness(space, cfg.seed, cfg.trials);
    json body = maxplus::monad_report_to_json(report);
    body["command"] = "monad-laws";
    emit(cfg, body);
    return report.all_passed() ? 0 : 1;
}

int run(const RunConfig& cfg) {
    if (cfg.command == "integrate") return run_integrate(cfg);
    if (cfg.command == "compare-integrals") return run_compare(cfg);
    if (cfg.command == "reconstruct") return run_reconstruct(cfg);
    if (cfg.command == "roundtrip") return run_roundtrip(cfg);
    if (cfg.command == "properties") return run_properties(cfg);
    if (cfg.command == "witness") return run_witness(cfg);
    if (cfg.command == "naturality") return run_naturality(cfg);
    if (cfg.command == "monad-laws") return run_monad_laws(cfg);
    throw maxplus::ParseError("unknown command: " + cfg.command);
}

int fail_input(const std::string& kind, const std::string& message, const json& extra = {}) {
    json diagnostic{{"error", json{{"kind", kind}, {"message", message}}}};
    for (auto it = extra.begin(); it != extra.end(); ++it)
        diagnostic["error"][it.key()] = it.value();
    std::cout << diagnostic.dump(2) << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capacities, max-plus integrals and the functional correspondence"};
    RunConfig cfg;
    app.add_option("--command", cfg.command, "one of integrate, compare-integrals, reconstruct, "
                                             "roundtrip, properties, witness, naturality, "
                                             "monad-laws")
        ->required();
    app.add_option("--in", cfg.inputs, "input JSON file (repeat for multiple inputs)");
    app.add_option("--out", cfg.output, "write the JSON report to this path instead of stdout");
    auto* seed_option = app.add_option("--seed", cfg.seed, "seed for randomized commands");
    app.add_option("--trials", cfg.trials, "number of sampled trials")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol", cfg.tol, "absolute tolerance")->check(CLI::PositiveNumber);
    app.add_option("--size", cfg.sizes, "space size (repeat where two sizes apply)");
    CLI11_PARSE(app, argc, argv);
    cfg.seed_given = seed_option->count() > 0;

    try {
        return run(cfg);
    } catch (const maxplus::ParseError& e) {
        return fail_input("parse", e.what());
    } catch (const maxplus::CapacityValidationError& e) {
        return fail_input("capacity_validation", e.what(),
                          json{{"witness_masks", json::array({e.witness_small, e.witness_large})}});
    } catch (const maxplus::ReconstructionError& e) {
        return fail_input("reconstruction", e.what(),
                          json{{"subset_mask", e.subset_bits},
                               {"last_values", json::array({e.previous_value, e.last_value})}});
    } catch (const maxplus::DomainMismatchError& e) {
        return fail_input("domain_mismatch", e.what());
    } catch (const maxplus::RangeError& e) {
        return fail_input("range", e.what());
    } catch (const maxplus::PreconditionError& e) {
        return fail_input("precondition", e.what());
    } catch (const maxplus::Error& e) {
        return fail_input("validation", e.what());
    } catch (const std::exception& e) {
        return fail_input("internal", e.what());
    }
}
